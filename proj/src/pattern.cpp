#include "teamind/pattern.hpp"

#include "teamind/error.hpp"

namespace teamind {

ClopenSet ZeroPattern::cell_value(const std::vector<ClopenSet>& elements, std::size_t index) {
    ClopenSet acc = ClopenSet::one();
    for (std::size_t j = 0; j < elements.size(); ++j) {
        bool positive = (index >> j) & 1;
        acc = meet(acc, positive ? elements[j] : complement(elements[j]));
        if (acc.is_zero()) break;
    }
    return acc;
}

namespace {

// Depth-first over sign choices, sharing meet prefixes and pruning once the
// accumulator hits zero (the whole subtree of completions is then zero).
void fill_cells(const std::vector<ClopenSet>& elements, std::size_t j, std::size_t index,
                const ClopenSet& acc, std::vector<bool>& zero) {
    if (acc.is_zero()) {
        std::size_t count = std::size_t{1} << (elements.size() - j);
        for (std::size_t t = 0; t < count; ++t) {
            zero[index | (t << j)] = true;
        }
        return;
    }
    if (j == elements.size()) {
        zero[index] = false;
        return;
    }
    fill_cells(elements, j + 1, index, meet(acc, complement(elements[j])), zero);
    fill_cells(elements, j + 1, index | (std::size_t{1} << j), meet(acc, elements[j]), zero);
}

}  // namespace

ZeroPattern qf_type(const std::vector<ClopenSet>& tuple, const std::vector<ClopenSet>& base) {
    ZeroPattern p;
    p.tuple_size = tuple.size();
    p.base_size = base.size();
    std::vector<ClopenSet> elements = tuple;
    elements.insert(elements.end(), base.begin(), base.end());
    if (elements.size() > 24) {
        throw CapacityError("qf_type over " + std::to_string(elements.size()) +
                            " elements: cell table too large");
    }
    p.zero.assign(std::size_t{1} << elements.size(), false);
    fill_cells(elements, 0, 0, ClopenSet::one(), p.zero);
    return p;
}

IndiscernibilityResult indiscernible_check(const WitnessSequence& seq, std::size_t window) {
    if (window < 1) {
        throw InputError("indiscernibility window must be at least 1");
    }
    if (seq.seq.size() < 2) {
        throw InputError("indiscernibility needs a sequence of length at least 2");
    }
    IndiscernibilityResult result;
    const std::size_t n = seq.seq.size();
    for (std::size_t len = 1; len <= window && len <= n; ++len) {
        // Increasing index tuples in lexicographic order.
        std::vector<std::size_t> idx(len);
        for (std::size_t i = 0; i < len; ++i) idx[i] = i;
        bool have_ref = false;
        ZeroPattern ref;
        while (true) {
            std::vector<ClopenSet> sub;
            sub.reserve(len);
            for (std::size_t i : idx) sub.push_back(seq.seq[i]);
            ZeroPattern p = qf_type(sub, seq.base);
            if (!have_ref) {
                ref = std::move(p);
                have_ref = true;
            } else if (!(p == ref)) {
                result.ok = false;
                result.violator = idx;
                result.length = len;
                return result;
            }
            // Advance to the next combination.
            std::size_t k = len;
            while (k > 0 && idx[k - 1] == n - len + (k - 1)) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t i = k; i < len; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return result;
}

}  // namespace teamind
