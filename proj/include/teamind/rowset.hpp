#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <vector>

namespace teamind {

/// A set of row ids over a fixed universe {0..N-1}, packed into 64-bit
/// words. Small universes (up to 128 rows) live in inline storage so the
/// boolean operations never touch the heap; larger universes spill to an
/// owned array. Unused high bits of the top word are kept zero, so
/// whole-word comparisons are valid.
class RowSet {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    RowSet() : RowSet(0) {}

    explicit RowSet(std::size_t universe_size)
        : size_(universe_size), nwords_((universe_size + 63) / 64) {
        if (nwords_ > kInline) {
            heap_ = std::make_unique<std::uint64_t[]>(nwords_);
        }
        std::uint64_t* w = words();
        for (std::size_t i = 0; i < nwords_; ++i) w[i] = 0;
    }

    RowSet(const RowSet& other) : size_(other.size_), nwords_(other.nwords_) {
        if (nwords_ > kInline) {
            heap_ = std::make_unique<std::uint64_t[]>(nwords_);
        }
        const std::uint64_t* src = other.words();
        std::uint64_t* dst = words();
        for (std::size_t i = 0; i < nwords_; ++i) dst[i] = src[i];
    }

    RowSet(RowSet&& other) noexcept
        : size_(other.size_), nwords_(other.nwords_), heap_(std::move(other.heap_)) {
        if (nwords_ <= kInline) {
            for (std::size_t i = 0; i < nwords_; ++i) inline_[i] = other.inline_[i];
        }
    }

    RowSet& operator=(const RowSet& other) {
        if (this != &other) {
            RowSet tmp(other);
            *this = std::move(tmp);
        }
        return *this;
    }

    RowSet& operator=(RowSet&& other) noexcept {
        size_ = other.size_;
        nwords_ = other.nwords_;
        heap_ = std::move(other.heap_);
        if (nwords_ <= kInline) {
            for (std::size_t i = 0; i < nwords_; ++i) inline_[i] = other.inline_[i];
        }
        return *this;
    }

    static RowSet full(std::size_t universe_size) {
        RowSet s(universe_size);
        std::uint64_t* w = s.words();
        for (std::size_t i = 0; i < s.nwords_; ++i) w[i] = ~std::uint64_t{0};
        s.mask_top();
        return s;
    }

    static RowSet of(std::size_t universe_size, std::initializer_list<std::size_t> rows) {
        RowSet s(universe_size);
        for (std::size_t r : rows) s.set(r);
        return s;
    }

    std::size_t universe_size() const { return size_; }

    bool test(std::size_t row) const {
        assert(row < size_);
        return (words()[row / 64] >> (row % 64)) & 1;
    }

    void set(std::size_t row) {
        assert(row < size_);
        words()[row / 64] |= std::uint64_t{1} << (row % 64);
    }

    std::size_t count() const {
        std::size_t n = 0;
        const std::uint64_t* w = words();
        for (std::size_t i = 0; i < nwords_; ++i) n += __builtin_popcountll(w[i]);
        return n;
    }

    bool empty() const {
        const std::uint64_t* w = words();
        for (std::size_t i = 0; i < nwords_; ++i) {
            if (w[i]) return false;
        }
        return true;
    }

    bool any() const { return !empty(); }

    /// Least row in the set, or npos when empty.
    std::size_t least() const {
        const std::uint64_t* w = words();
        for (std::size_t i = 0; i < nwords_; ++i) {
            if (w[i]) return i * 64 + __builtin_ctzll(w[i]);
        }
        return npos;
    }

    bool is_subset_of(const RowSet& other) const {
        assert(size_ == other.size_);
        const std::uint64_t* a = words();
        const std::uint64_t* b = other.words();
        for (std::size_t i = 0; i < nwords_; ++i) {
            if (a[i] & ~b[i]) return false;
        }
        return true;
    }

    bool intersects(const RowSet& other) const {
        assert(size_ == other.size_);
        const std::uint64_t* a = words();
        const std::uint64_t* b = other.words();
        for (std::size_t i = 0; i < nwords_; ++i) {
            if (a[i] & b[i]) return true;
        }
        return false;
    }

    friend RowSet operator&(const RowSet& a, const RowSet& b) {
        assert(a.size_ == b.size_);
        RowSet out(a.size_);
        const std::uint64_t* x = a.words();
        const std::uint64_t* y = b.words();
        std::uint64_t* z = out.words();
        for (std::size_t i = 0; i < a.nwords_; ++i) z[i] = x[i] & y[i];
        return out;
    }

    friend RowSet operator|(const RowSet& a, const RowSet& b) {
        assert(a.size_ == b.size_);
        RowSet out(a.size_);
        const std::uint64_t* x = a.words();
        const std::uint64_t* y = b.words();
        std::uint64_t* z = out.words();
        for (std::size_t i = 0; i < a.nwords_; ++i) z[i] = x[i] | y[i];
        return out;
    }

    RowSet& operator|=(const RowSet& other) {
        assert(size_ == other.size_);
        std::uint64_t* a = words();
        const std::uint64_t* b = other.words();
        for (std::size_t i = 0; i < nwords_; ++i) a[i] |= b[i];
        return *this;
    }

    RowSet& operator&=(const RowSet& other) {
        assert(size_ == other.size_);
        std::uint64_t* a = words();
        const std::uint64_t* b = other.words();
        for (std::size_t i = 0; i < nwords_; ++i) a[i] &= b[i];
        return *this;
    }

    RowSet minus(const RowSet& other) const {
        assert(size_ == other.size_);
        RowSet out(size_);
        const std::uint64_t* a = words();
        const std::uint64_t* b = other.words();
        std::uint64_t* z = out.words();
        for (std::size_t i = 0; i < nwords_; ++i) z[i] = a[i] & ~b[i];
        return out;
    }

    RowSet complement() const {
        RowSet out(size_);
        const std::uint64_t* a = words();
        std::uint64_t* z = out.words();
        for (std::size_t i = 0; i < nwords_; ++i) z[i] = ~a[i];
        out.mask_top();
        return out;
    }

    friend bool operator==(const RowSet& a, const RowSet& b) {
        if (a.size_ != b.size_) return false;
        const std::uint64_t* x = a.words();
        const std::uint64_t* y = b.words();
        for (std::size_t i = 0; i < a.nwords_; ++i) {
            if (x[i] != y[i]) return false;
        }
        return true;
    }

    friend bool operator!=(const RowSet& a, const RowSet& b) { return !(a == b); }

    template <typename F>
    void for_each(F&& fn) const {
        const std::uint64_t* w = words();
        for (std::size_t i = 0; i < nwords_; ++i) {
            std::uint64_t bits = w[i];
            while (bits) {
                std::size_t row = i * 64 + __builtin_ctzll(bits);
                fn(row);
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t row) { out.push_back(row); });
        return out;
    }

private:
    static constexpr std::size_t kInline = 2;

    std::uint64_t* words() { return nwords_ <= kInline ? inline_ : heap_.get(); }
    const std::uint64_t* words() const { return nwords_ <= kInline ? inline_ : heap_.get(); }

    void mask_top() {
        if (size_ % 64 != 0 && nwords_ > 0) {
            words()[nwords_ - 1] &= (std::uint64_t{1} << (size_ % 64)) - 1;
        }
    }

    std::size_t size_;
    std::size_t nwords_;
    std::uint64_t inline_[kInline] = {0, 0};
    std::unique_ptr<std::uint64_t[]> heap_;
};

}  // namespace teamind
