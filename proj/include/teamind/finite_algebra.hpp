#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "teamind/error.hpp"
#include "teamind/rowset.hpp"

namespace teamind {

/// The ambient row universe {0..size-1}. Size 0 is admitted and yields the
/// one-element algebra where 0 = 1.
struct Universe {
    std::size_t size = 0;
    bool operator==(const Universe&) const = default;
};

/// A finite field of sets over an explicit row universe, stored as its atom
/// partition. Blocks are pairwise disjoint, nonempty, cover the universe,
/// and are kept in canonical order (sorted by least contained row). Every
/// element of the algebra is exactly a union of blocks, so the algebra has
/// 2^|blocks| elements and is atomic by construction.
///
/// Because all suprema in a finite algebra are finite joins, every
/// subalgebra is regular and has least upper elements (finite meets); see
/// is_regular_subalgebra / sits_nicely below.
class FinitePartitionAlgebra {
public:
    /// Validates and canonicalizes the block list. Throws InputError if the
    /// blocks are not a partition of the universe.
    FinitePartitionAlgebra(Universe universe, std::vector<RowSet> blocks);

    /// The two-element algebra {0, 1} (a single block; no blocks when the
    /// universe is empty).
    static FinitePartitionAlgebra trivial(Universe universe);

    /// The full power-set algebra (singleton blocks).
    static FinitePartitionAlgebra discrete(Universe universe);

    const Universe& universe() const { return universe_; }
    std::size_t atom_count() const { return blocks_.size(); }
    const RowSet& atom(std::size_t i) const { return blocks_[i]; }
    const std::vector<RowSet>& atoms() const { return blocks_; }

    /// Index of the block containing a row.
    std::uint32_t block_of(std::size_t row) const { return block_of_[row]; }

    /// Whether a row set is an element of this algebra (a union of blocks).
    bool contains(const RowSet& element) const;

    /// Indices of the blocks meeting a row set, ascending.
    std::vector<std::uint32_t> blocks_meeting(const RowSet& element) const;

private:
    Universe universe_;
    std::vector<RowSet> blocks_;
    std::vector<std::uint32_t> block_of_;
};

/// Refinement map of a verified subalgebra pair C <= A: for each block of
/// the finer algebra A, the index of the unique block of C containing it.
struct SubalgebraWitness {
    std::vector<std::uint32_t> refinement_map;
};

/// Which characterization produced an independence verdict.
enum class IndependenceRoute { fast, topological, referee, pushout };

/// On failure, the violating pair: either a compatible atom pair with empty
/// meet (fast/push-out view) or a comparable nontrivial pair below an atom
/// of C (referee view).
struct IndependenceWitness {
    enum class Kind { empty_compatible_meet, comparable_below_atom };
    Kind kind;
    RowSet a;
    RowSet b;
    std::size_t c_atom = RowSet::npos;
};

struct IndependenceVerdict {
    bool independent = false;
    IndependenceRoute route = IndependenceRoute::fast;
    std::optional<IndependenceWitness> witness;  // present iff !independent
};

/// Per-route verdicts of the element-enumerating oracles.
struct OracleVerdicts {
    bool topological = false;
    bool referee = false;
    bool pushout = false;
    bool agree(bool fast) const {
        return topological == fast && referee == fast && pushout == fast;
    }
};

/// The free amalgam A (x)_C B realized as a partition algebra over a fresh
/// universe with one row per compatible atom pair, plus the two canonical
/// embeddings (per original atom, the set of pair-rows it maps to).
struct FreeAmalgam {
    FinitePartitionAlgebra algebra;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // (atom of A, atom of B)

    RowSet embed_atom_of_a(std::uint32_t a_atom) const;
    RowSet embed_atom_of_b(std::uint32_t b_atom) const;
};

/// Partition of the universe into the equivalence classes of "same
/// membership pattern across all generators". The generated field of sets
/// is exactly the unions of these blocks.
FinitePartitionAlgebra generate_subalgebra(Universe universe, std::span<const RowSet> generators);

/// Succeeds iff every block of `coarse` is a union of blocks of `fine`,
/// returning the refinement map; nullopt otherwise. Throws InputError when
/// the universes differ. In the finite case success also certifies
/// regularity and the sits-nicely property (see below).
std::optional<SubalgebraWitness> is_subalgebra(const FinitePartitionAlgebra& coarse,
                                               const FinitePartitionAlgebra& fine);

/// The least element of C above `a`: the union of all C-blocks meeting `a`.
/// For an atom dominated by one block this is that block.
RowSet atom_projection(const FinitePartitionAlgebra& c, const RowSet& a);

/// Atom-pair characterization: independent iff every atom a of A with
/// a <= atom_projection(C, b) meets b, for all atoms b of B. Polynomial in
/// the atom counts. Failure returns the first violating pair in canonical
/// block order. Throws InputError unless C <= A and C <= B over one
/// universe.
IndependenceVerdict independence_fast(const FinitePartitionAlgebra& a,
                                      const FinitePartitionAlgebra& b,
                                      const FinitePartitionAlgebra& c);

/// Three independently computed verdicts:
///  - topological: every element pair a <= b admits an interposed c in C;
///  - referee: no atom of C has a comparable nontrivial element pair under it;
///  - push-out: |At(<A u B>)| equals the compatible-pair count of A (x)_C B.
/// The first two enumerate up to 2^|At| elements, so atom counts of A and B
/// above `cap_atoms` raise CapacityError naming the route.
OracleVerdicts independence_oracles(const FinitePartitionAlgebra& a,
                                    const FinitePartitionAlgebra& b,
                                    const FinitePartitionAlgebra& c,
                                    const Universe& ambient,
                                    std::size_t cap_atoms = 16);

/// Builds the free amalgam over a fresh universe of compatible atom pairs.
FreeAmalgam free_amalgam(const FinitePartitionAlgebra& a,
                         const FinitePartitionAlgebra& b,
                         const FinitePartitionAlgebra& c);

/// Every subalgebra of a finite field of sets is regular: all suprema are
/// finite joins, and finite joins agree between subalgebra and ambient
/// algebra. True by construction; kept as a named predicate so call sites
/// can state the hypothesis they rely on.
inline bool is_regular_subalgebra(const FinitePartitionAlgebra&, const FinitePartitionAlgebra&) {
    return true;
}

/// A finite subalgebra always sits nicely: it is regular and the least
/// element above any ambient element exists as the (finite) meet of all
/// elements above it, computed concretely by atom_projection.
inline bool sits_nicely(const FinitePartitionAlgebra&, const FinitePartitionAlgebra&) {
    return true;
}

}  // namespace teamind
