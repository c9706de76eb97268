#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "teamind/error.hpp"

namespace teamind {

/// A binary word of length up to 64, packed with the first character in the
/// most significant of the used bits. Words name basic cylinders of Cantor
/// space; longer words would overflow the packing and raise CapacityError.
struct Word {
    std::uint8_t len = 0;
    std::uint64_t bits = 0;

    static Word empty() { return {}; }

    static Word from_string(const std::string& s) {
        if (s.size() > 64) {
            throw CapacityError("binary word longer than 64: " + std::to_string(s.size()));
        }
        Word w;
        for (char ch : s) {
            if (ch != '0' && ch != '1') {
                throw InputError(std::string("bad character in binary word: '") + ch + "'");
            }
            w = w.child(ch == '1');
        }
        return w;
    }

    Word child(bool bit) const {
        if (len >= 64) {
            throw CapacityError("binary word longer than 64");
        }
        return Word{static_cast<std::uint8_t>(len + 1), (bits << 1) | (bit ? 1u : 0u)};
    }

    bool bit(std::size_t i) const { return (bits >> (len - 1 - i)) & 1; }

    bool first_bit() const { return bit(0); }

    Word tail() const {
        Word w;
        w.len = static_cast<std::uint8_t>(len - 1);
        w.bits = w.len == 0 ? 0 : bits & ((std::uint64_t{1} << w.len) - 1);
        return w;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(len);
        for (std::size_t i = 0; i < len; ++i) s += bit(i) ? '1' : '0';
        return s;
    }

    // Lexicographic on the tree: compare aligned prefixes, shorter first on
    // ties (ties only occur transiently, never inside an antichain).
    friend bool operator<(const Word& a, const Word& b) {
        std::uint64_t la = a.len ? a.bits << (64 - a.len) : 0;
        std::uint64_t lb = b.len ? b.bits << (64 - b.len) : 0;
        if (la != lb) return la < lb;
        return a.len < b.len;
    }
    friend bool operator==(const Word& a, const Word& b) {
        return a.len == b.len && a.bits == b.bits;
    }
};

/// An element of the clopen algebra of Cantor space: a finite union of
/// basic cylinders, held in normal form as a sorted prefix-free antichain
/// with no two sibling words (any such pair is merged into the parent).
/// Equal values have identical normal forms, so operator== decides value
/// equality. 0 is the empty list and 1 is the single empty word.
class ClopenSet {
public:
    ClopenSet() = default;

    static ClopenSet zero() { return ClopenSet(); }
    static ClopenSet one() { return ClopenSet({Word::empty()}); }
    static ClopenSet cylinder(const Word& w) { return ClopenSet({w}); }
    static ClopenSet cylinder(const std::string& bits) {
        return cylinder(Word::from_string(bits));
    }

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0].len == 0; }

    const std::vector<Word>& words() const { return words_; }

    /// Lexicographically least word of the normal form; requires a nonzero
    /// value.
    const Word& least_word() const {
        if (words_.empty()) {
            throw PreconditionError("least_word of the zero element");
        }
        return words_.front();
    }

    std::size_t depth() const {
        std::size_t d = 0;
        for (const Word& w : words_) {
            if (w.len > d) d = w.len;
        }
        return d;
    }

    friend ClopenSet meet(const ClopenSet& a, const ClopenSet& b);
    friend ClopenSet join(const ClopenSet& a, const ClopenSet& b);
    friend ClopenSet complement(const ClopenSet& a);

    friend bool operator==(const ClopenSet& a, const ClopenSet& b) {
        return a.words_ == b.words_;
    }
    friend bool operator!=(const ClopenSet& a, const ClopenSet& b) { return !(a == b); }

private:
    explicit ClopenSet(std::vector<Word> words) : words_(std::move(words)) {}

    std::vector<Word> words_;
};

ClopenSet meet(const ClopenSet& a, const ClopenSet& b);
ClopenSet join(const ClopenSet& a, const ClopenSet& b);
ClopenSet complement(const ClopenSet& a);

inline ClopenSet minus(const ClopenSet& a, const ClopenSet& b) {
    return meet(a, complement(b));
}

inline bool leq(const ClopenSet& a, const ClopenSet& b) {
    return minus(a, b).is_zero();
}

/// Strict order: a <= b and a != b.
inline bool lt(const ClopenSet& a, const ClopenSet& b) {
    return leq(a, b) && a != b;
}

/// Literal syntax: comma-separated binary words joined as cylinders, with
/// "e" for the empty word (the unit) and a sole "-" for the zero element.
ClopenSet parse_clopen(const std::string& text);
std::string print_clopen(const ClopenSet& a);

}  // namespace teamind
