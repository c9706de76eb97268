#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "teamind/finite_algebra.hpp"

namespace teamind {

/// One exhaustively enumerated candidate a' = q0 v q1 (two atoms of the
/// ambient algebra) whose capped atom-count descriptors match tp(a/b_0):
/// one atom inside b_0, one outside. fails_at is the least i >= 1 with
/// a' & b_i = 0, which always exists and breaks indiscernibility of the
/// sequence over a'.
struct AtbaCandidate {
    std::uint32_t q0 = 0;
    std::uint32_t q1 = 0;
    std::size_t fails_at = 0;
};

struct AtbaReport {
    std::size_t n = 0;
    std::size_t m = 0;
    bool independent = false;      // <a> and <b_0> over 2, fast route
    OracleVerdicts oracles;        // the three enumeration routes
    std::vector<AtbaCandidate> candidates;
    bool all_fail = false;
};

/// The finite counterexample showing why the dichotomy lives in atomless
/// algebras: over atoms c, d, e, f, p_0..p_{m-1} take a = c v d,
/// b_0 = c v e, b_i = p_{2i-2} v p_{2i-1}. Independence of <a> and <b_0>
/// over 2 holds by every route, yet each of the 2(m+2) type-correct
/// candidates a' (one atom in b_0, one outside; atom-count descriptors
/// capped at 2) misses some b_i entirely, because a two-atom element meets
/// at most one of the pairwise disjoint b_1..b_{n-1} and n >= 3 provides at
/// least two of them. Requires n >= 3 and m >= 2n.
AtbaReport atba_demo(std::size_t m, std::size_t n);

}  // namespace teamind
