#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "teamind/atom.hpp"
#include "teamind/finite_algebra.hpp"
#include "teamind/team.hpp"

namespace teamind {

struct CheckStats {
    std::size_t rows = 0;
    std::size_t groups = 0;
    std::int64_t micros = 0;
};

/// Failure evidence: the offending row pair (t0, t1) and their full value
/// tuples.
struct CheckWitness {
    std::vector<std::size_t> rows;
    std::vector<std::vector<std::string>> row_values;
};

struct CheckReport {
    DependencyAtom atom;
    bool satisfied = false;
    std::optional<CheckWitness> witness;  // present iff !satisfied
    CheckStats stats;
};

enum class EmvdMode { fast, bruteforce };

/// x -> y: every two rows agreeing on x agree on y. Hash scan, linear
/// expected time. Witness: the lexicographically least conflicting ordered
/// pair (t0, t1), which the scan recovers as (group-first row, first row of
/// the group with a second y-value).
CheckReport check_fd(const Team& team, const AttributeTuple& x, const AttributeTuple& y);

/// z ->> x | y: for all t0, t1 agreeing on z there is t2 with t2(z)=t0(z),
/// t2(x)=t0(x), t2(y)=t1(y). Fast mode groups by z and compares observed
/// (x,y) pairs against the product of the per-group x and y value sets;
/// bruteforce mode runs the definition's triple loop and is the oracle.
/// Both modes report the lexicographically least failing ordered pair.
CheckReport check_emvd(const Team& team, const AttributeTuple& z, const AttributeTuple& x,
                       const AttributeTuple& y, EmvdMode mode);

/// Dispatch: FD and dep(u;v) go to check_fd, EMVD and u _||_{w} v go to
/// check_emvd. The report keeps the original atom.
CheckReport check_atom(const Team& team, const DependencyAtom& atom, EmvdMode mode);

/// The quantifier definition of tuple independence, evaluated literally
/// over row-id pairs with f = x-projection, g = y-projection,
/// h = z-projection: for all p, q with h(p) = h(q) there is t with
/// h(t) = h(p), f(t) = f(p), g(t) = g(q). Quadratic reference
/// implementation; a second oracle beside the bruteforce EMVD loop.
bool tuple_independence(const Team& team, const AttributeTuple& x, const AttributeTuple& y,
                        const AttributeTuple& z);

/// All verdicts of the reduction chain for z ->> x | y, computed by
/// independent routes.
struct ConsistencyReport {
    DependencyAtom atom;
    bool emvd_fast = false;
    bool emvd_bruteforce = false;
    bool tuple_ind = false;
    bool algebra_fast = false;
    std::optional<OracleVerdicts> oracles;  // absent when atom counts exceed the cap
    bool subalgebra_xz_ok = false;          // kernel(z) <= kernel(xz)
    bool subalgebra_yz_ok = false;          // kernel(z) <= kernel(yz)
    bool agreement = false;
    CheckStats stats;
};

/// Runs (1) fast EMVD, (2) bruteforce EMVD, (3) tuple independence,
/// (4) independence_fast on the kernel algebras pi(xz), pi(yz) over pi(z),
/// and, when both atom counts are within cap_atoms, (5) the three
/// element-enumeration oracles. cap_atoms = 0 always skips (5). Also
/// verifies the refinement pi(z) <= pi(xz), pi(z) <= pi(yz). agreement is
/// true iff every computed verdict coincides and both refinements hold.
ConsistencyReport verify_reduction(const Team& team, const AttributeTuple& z,
                                   const AttributeTuple& x, const AttributeTuple& y,
                                   std::size_t cap_atoms = 16);

}  // namespace teamind
