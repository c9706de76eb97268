#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "teamind/clopen.hpp"
#include "teamind/finite_algebra.hpp"
#include "teamind/pattern.hpp"

namespace teamind {

/// Splitting construction: p_0, ..., p_{k-1} inside a nonzero a, built from
/// the lexicographically least word s of a's normal form as the cylinders
/// s 1^i 0. For every prefix m < k the pieces are nonzero, pairwise
/// disjoint, and join to a strict subelement of a; the operation re-checks
/// all three conditions before returning. a = 0 raises PreconditionError.
std::vector<ClopenSet> split(const ClopenSet& a, std::size_t k);

/// The atoms of the finite algebra generated by `base`: the nonzero signed
/// meets of the generators, in ascending sign-vector order (an empty base
/// yields the single atom 1).
std::vector<ClopenSet> base_atoms(const std::vector<ClopenSet>& base);

/// Certificate that tp(a/C b) divides over C: an indiscernible sequence of
/// disjoint copies of b* below the witnessing atom, plus the replacement
/// bookkeeping. The constraints {x <= b_i, x != 0} instantiate one formula
/// of tp(a*/C b*) per sequence member and are pairwise contradictory, which
/// is the 2-inconsistency.
struct DividingWitness {
    WitnessSequence seq;    // seq.seq[0] = b_star
    ClopenSet atom;         // atom of <base> carrying the failure
    ClopenSet a_star;       // a & atom or atom \ a, nonzero, <= b_star
    ClopenSet b_star;       // b & atom or atom \ b, strictly below atom
    bool replaced_a = false;
    bool replaced_b = false;
};

/// Re-verifies every postcondition of dividing_witness: membership of a*
/// and b* in the generated algebras, 0 < a* <= b* < atom, pairwise-disjoint
/// sequence starting at b*, uniform QF type over the base, and window-3
/// indiscernibility.
bool validate_dividing(const DividingWitness& w);

/// Main-theorem left-to-right direction at desk scale. Finds an atom c of
/// <base> where a and b have nontrivial comparable traces (after the
/// standard replacements a -> c & ~a, b -> c & ~b), then returns b* = b_0
/// together with n-1 further disjoint copies split out of c \ b*, all with
/// the QF type of b* over the base. Raises NotApplicableError when the
/// independence condition holds at every atom (then no witness exists), and
/// InputError for n < 2.
DividingWitness dividing_witness(const ClopenSet& a, const ClopenSet& b,
                                 const std::vector<ClopenSet>& base, std::size_t n);

/// A test sequence with b_0 = b for the non-forking direction: per atom c
/// of <base>, constant (equal traces) where b's trace is trivial, and
/// otherwise b's trace followed by disjoint split pieces of c \ b. The
/// result is indiscernible over the base at any window.
WitnessSequence make_witness_sequence(const ClopenSet& b, const std::vector<ClopenSet>& base,
                                      std::size_t n);

/// Main-theorem right-to-left direction: extends a to a' realizing the
/// nonforking type over base and the whole sequence, i.e.
/// qf_type((a'), base + {b_i}) = qf_type((a), base + {b_0}) for every i,
/// with the sequence staying window-3 indiscernible over base + {a'}.
/// Preconditions: seq passes indiscernible_check over the base, and the
/// independence condition holds between <base, a> and <base, b_0> (else
/// PreconditionError). Per atom the sequence traces must be all equal or
/// pairwise disjoint; other shapes go to a bounded search over unions of
/// once-split cells when use_fallback is set (NotFoundError when the search
/// exhausts) and raise UnsupportedShapeError otherwise. The construction
/// re-checks its contract before returning.
ClopenSet nonforking_extension(const ClopenSet& a, const std::vector<ClopenSet>& base,
                               const WitnessSequence& seq, std::size_t window = 3,
                               bool use_fallback = true);

/// The finite-algebra picture of a workbench configuration: one row per
/// nonzero cell of <base + {a, b}>, with A = <base, a>, B = <base, b>,
/// C = <base> as partition algebras over those rows. Dividing/nonforking on
/// the clopen side corresponds to failure/success of independence here.
struct FiniteConfiguration {
    Universe universe;
    FinitePartitionAlgebra algebra_a;
    FinitePartitionAlgebra algebra_b;
    FinitePartitionAlgebra algebra_c;
};

FiniteConfiguration finite_configuration(const ClopenSet& a, const ClopenSet& b,
                                         const std::vector<ClopenSet>& base);

}  // namespace teamind
