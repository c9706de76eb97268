#pragma once

#include <cstddef>
#include <vector>

#include "teamind/clopen.hpp"

namespace teamind {

/// Quantifier-free type certificate of a tuple over a base: for every
/// sign-vector over tuple followed by base, whether the correspondingly
/// signed meet vanishes. Two tuples have the same QF type over the base iff
/// their patterns are equal. Cell index bit j (counting tuple elements
/// first, then base elements) is 1 when element j occurs positively.
struct ZeroPattern {
    std::size_t tuple_size = 0;
    std::size_t base_size = 0;
    std::vector<bool> zero;  // 2^(tuple_size + base_size) cells

    bool operator==(const ZeroPattern&) const = default;

    /// The signed meet of a cell, recomputed from the inputs of qf_type.
    static ClopenSet cell_value(const std::vector<ClopenSet>& elements, std::size_t index);
};

ZeroPattern qf_type(const std::vector<ClopenSet>& tuple, const std::vector<ClopenSet>& base);

enum class SequenceKind { dividing_witness, extension_input };

/// A finite sequence over a base, with the indiscernibility-certificate
/// invariant: all order-increasing subtuples of equal length up to the
/// configured window share a ZeroPattern.
struct WitnessSequence {
    std::vector<ClopenSet> base;
    std::vector<ClopenSet> seq;
    SequenceKind kind = SequenceKind::extension_input;
};

struct IndiscernibilityResult {
    bool ok = true;
    std::vector<std::size_t> violator;  // first offending subtuple, empty when ok
    std::size_t length = 0;             // its length
};

/// Checks that for each length l <= min(window, |seq|), every increasing
/// l-subtuple of the sequence has the same QF type over the base.
/// Subtuples are enumerated in lexicographic index order and the first
/// mismatch is reported. Requires window >= 1 and |seq| >= 2.
IndiscernibilityResult indiscernible_check(const WitnessSequence& seq, std::size_t window);

}  // namespace teamind
