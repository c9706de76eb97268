#include "teamind/finite_algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

namespace teamind {

namespace {

void require_same_universe(const Universe& u, const FinitePartitionAlgebra& alg,
                           const char* name) {
    if (alg.universe().size != u.size) {
        throw InputError(std::string(name) + ": universe size mismatch (" +
                         std::to_string(alg.universe().size) + " vs " +
                         std::to_string(u.size) + ")");
    }
}

}  // namespace

FinitePartitionAlgebra::FinitePartitionAlgebra(Universe universe, std::vector<RowSet> blocks)
    : universe_(universe), blocks_(std::move(blocks)), block_of_(universe.size, UINT32_MAX) {
    for (const auto& b : blocks_) {
        if (b.universe_size() != universe_.size) {
            throw InputError("block universe size mismatch");
        }
        if (b.empty()) {
            throw InputError("empty block in partition");
        }
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const RowSet& x, const RowSet& y) { return x.least() < y.least(); });
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        blocks_[i].for_each([&](std::size_t row) {
            if (block_of_[row] != UINT32_MAX) {
                throw InputError("blocks overlap at row " + std::to_string(row));
            }
            block_of_[row] = static_cast<std::uint32_t>(i);
        });
    }
    for (std::size_t row = 0; row < universe_.size; ++row) {
        if (block_of_[row] == UINT32_MAX) {
            throw InputError("blocks do not cover row " + std::to_string(row));
        }
    }
}

FinitePartitionAlgebra FinitePartitionAlgebra::trivial(Universe universe) {
    std::vector<RowSet> blocks;
    if (universe.size > 0) {
        blocks.push_back(RowSet::full(universe.size));
    }
    return FinitePartitionAlgebra(universe, std::move(blocks));
}

FinitePartitionAlgebra FinitePartitionAlgebra::discrete(Universe universe) {
    std::vector<RowSet> blocks;
    blocks.reserve(universe.size);
    for (std::size_t row = 0; row < universe.size; ++row) {
        RowSet b(universe.size);
        b.set(row);
        blocks.push_back(std::move(b));
    }
    return FinitePartitionAlgebra(universe, std::move(blocks));
}

bool FinitePartitionAlgebra::contains(const RowSet& element) const {
    if (element.universe_size() != universe_.size) {
        throw InputError("element universe size mismatch");
    }
    for (const auto& b : blocks_) {
        if (b.intersects(element) && !b.is_subset_of(element)) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> FinitePartitionAlgebra::blocks_meeting(const RowSet& element) const {
    if (element.universe_size() != universe_.size) {
        throw InputError("element universe size mismatch");
    }
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].intersects(element)) {
            out.push_back(static_cast<std::uint32_t>(i));
        }
    }
    return out;
}

FinitePartitionAlgebra generate_subalgebra(Universe universe,
                                           std::span<const RowSet> generators) {
    for (const auto& g : generators) {
        if (g.universe_size() != universe.size) {
            throw InputError("generator universe size mismatch");
        }
    }
    // Rows are equivalent iff they share a membership pattern across all
    // generators. Group rows by pattern; patterns are vectors of bools.
    std::map<std::vector<bool>, RowSet> groups;
    for (std::size_t row = 0; row < universe.size; ++row) {
        std::vector<bool> pattern;
        pattern.reserve(generators.size());
        for (const auto& g : generators) {
            pattern.push_back(g.test(row));
        }
        auto [it, inserted] = groups.try_emplace(std::move(pattern), RowSet(universe.size));
        it->second.set(row);
    }
    std::vector<RowSet> blocks;
    blocks.reserve(groups.size());
    for (auto& [pattern, rows] : groups) {
        blocks.push_back(std::move(rows));
    }
    return FinitePartitionAlgebra(universe, std::move(blocks));
}

std::optional<SubalgebraWitness> is_subalgebra(const FinitePartitionAlgebra& coarse,
                                               const FinitePartitionAlgebra& fine) {
    if (coarse.universe().size != fine.universe().size) {
        throw InputError("is_subalgebra: universe size mismatch");
    }
    SubalgebraWitness w;
    w.refinement_map.resize(fine.atom_count());
    for (std::size_t i = 0; i < fine.atom_count(); ++i) {
        const RowSet& fb = fine.atom(i);
        std::uint32_t target = coarse.block_of(fb.least());
        if (!fb.is_subset_of(coarse.atom(target))) {
            return std::nullopt;
        }
        w.refinement_map[i] = target;
    }
    return w;
}

RowSet atom_projection(const FinitePartitionAlgebra& c, const RowSet& a) {
    if (a.universe_size() != c.universe().size) {
        throw InputError("atom_projection: universe size mismatch");
    }
    RowSet out(c.universe().size);
    for (const auto& block : c.atoms()) {
        if (block.intersects(a)) {
            out |= block;
        }
    }
    return out;
}

IndependenceVerdict independence_fast(const FinitePartitionAlgebra& a,
                                      const FinitePartitionAlgebra& b,
                                      const FinitePartitionAlgebra& c) {
    Universe u = a.universe();
    require_same_universe(u, b, "independence_fast");
    require_same_universe(u, c, "independence_fast");
    if (!is_subalgebra(c, a) || !is_subalgebra(c, b)) {
        throw InputError("independence_fast: C is not a subalgebra of both arguments");
    }
    IndependenceVerdict v;
    v.route = IndependenceRoute::fast;
    // Independent iff each atom of A below the C-projection of an atom of B
    // actually meets that atom. Compatibility of an atom pair means sharing
    // a C-block, which for atoms is exactly inclusion under the projection.
    // Witness tie-break: lexicographically first (a, b) in canonical order.
    std::vector<RowSet> proj;
    proj.reserve(b.atom_count());
    for (const auto& batom : b.atoms()) {
        proj.push_back(atom_projection(c, batom));
    }
    for (std::size_t ai = 0; ai < a.atom_count(); ++ai) {
        const RowSet& aatom = a.atom(ai);
        for (std::size_t bi = 0; bi < b.atom_count(); ++bi) {
            const RowSet& batom = b.atom(bi);
            if (aatom.is_subset_of(proj[bi]) && !aatom.intersects(batom)) {
                v.independent = false;
                v.witness = IndependenceWitness{
                    IndependenceWitness::Kind::empty_compatible_meet, aatom, batom,
                    RowSet::npos};
                return v;
            }
        }
    }
    v.independent = true;
    return v;
}

namespace {

// The union of fine-algebra blocks selected by a subset mask.
RowSet element_of_mask(const FinitePartitionAlgebra& alg, std::uint64_t mask) {
    RowSet out(alg.universe().size);
    for (std::size_t i = 0; i < alg.atom_count(); ++i) {
        if (mask & (std::uint64_t{1} << i)) {
            out |= alg.atom(i);
        }
    }
    return out;
}

// Least element of C above x (same computation as atom_projection; local
// alias for readability in the oracles below).
RowSet least_upper_in(const FinitePartitionAlgebra& c, const RowSet& x) {
    return atom_projection(c, x);
}

// Every pair a <= b with a in A, b in B admits some c in C between them.
// Monotonicity of the least upper element lets one check, per element b of
// B, only the largest A-element below b: interposition holds for a_max iff
// it holds for every A-element below b.
bool topological_oracle(const FinitePartitionAlgebra& a, const FinitePartitionAlgebra& b,
                        const FinitePartitionAlgebra& c, const Universe& u) {
    const std::size_t nb = b.atom_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nb); ++mask) {
        RowSet belem = element_of_mask(b, mask);
        RowSet a_max(u.size);
        for (const auto& aatom : a.atoms()) {
            if (aatom.is_subset_of(belem)) {
                a_max |= aatom;
            }
        }
        if (a_max.empty()) {
            continue;  // 0 <= 0 <= b always interposes
        }
        if (!least_upper_in(c, a_max).is_subset_of(belem)) {
            return false;
        }
    }
    return true;
}

// No atom of C admits a comparable pair of nontrivial elements
// a & atom <= b & atom (or the reverse) with a in A, b in B both cutting the
// atom properly. Checked per atom via largest-element arguments: for each
// element b of B with 0 < b & atom < atom, the largest A-trace inside
// b & atom and the largest A-trace inside the complement bound all
// comparable pairs in the two directions.
bool referee_oracle(const FinitePartitionAlgebra& a, const FinitePartitionAlgebra& b,
                    const FinitePartitionAlgebra& c, const Universe& u) {
    const std::size_t nb = b.atom_count();
    for (const auto& catom : c.atoms()) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nb); ++mask) {
            RowSet belem = element_of_mask(b, mask);
            RowSet btrace = belem & catom;
            if (btrace.empty() || btrace == catom) {
                continue;
            }
            // a <= b direction: the largest A-element trace inside btrace.
            RowSet a_in(u.size);
            // b <= a direction: smallest A-trace containing btrace is the
            // complement of the largest A-trace avoiding btrace.
            RowSet a_avoid(u.size);
            for (const auto& aatom : a.atoms()) {
                RowSet atrace = aatom & catom;
                if (atrace.empty()) {
                    continue;
                }
                if (atrace.is_subset_of(btrace)) {
                    a_in |= atrace;
                }
                if (!atrace.intersects(btrace)) {
                    a_avoid |= atrace;
                }
            }
            if (!a_in.empty()) {
                return false;  // nontrivial a-trace below nontrivial b-trace
            }
            RowSet a_min = catom.minus(a_avoid);
            if (a_min != catom) {
                // btrace <= a_min < catom with both nontrivial.
                return false;
            }
        }
    }
    return true;
}

bool pushout_oracle(const FinitePartitionAlgebra& a, const FinitePartitionAlgebra& b,
                    const FinitePartitionAlgebra& c, const Universe& u) {
    std::vector<RowSet> gens;
    gens.reserve(a.atom_count() + b.atom_count());
    for (const auto& x : a.atoms()) gens.push_back(x);
    for (const auto& x : b.atoms()) gens.push_back(x);
    FinitePartitionAlgebra joined = generate_subalgebra(u, gens);
    FreeAmalgam am = free_amalgam(a, b, c);
    return joined.atom_count() == am.pairs.size();
}

}  // namespace

OracleVerdicts independence_oracles(const FinitePartitionAlgebra& a,
                                    const FinitePartitionAlgebra& b,
                                    const FinitePartitionAlgebra& c,
                                    const Universe& ambient,
                                    std::size_t cap_atoms) {
    require_same_universe(ambient, a, "independence_oracles");
    require_same_universe(ambient, b, "independence_oracles");
    require_same_universe(ambient, c, "independence_oracles");
    if (!is_subalgebra(c, a) || !is_subalgebra(c, b)) {
        throw InputError("independence_oracles: C is not a subalgebra of both arguments");
    }
    if (a.atom_count() > cap_atoms || b.atom_count() > cap_atoms) {
        throw CapacityError("independence_oracles: atom count exceeds cap " +
                            std::to_string(cap_atoms) +
                            " for element enumeration (topological/referee routes)");
    }
    OracleVerdicts v;
    v.topological = topological_oracle(a, b, c, ambient);
    v.referee = referee_oracle(a, b, c, ambient);
    v.pushout = pushout_oracle(a, b, c, ambient);
    return v;
}

FreeAmalgam free_amalgam(const FinitePartitionAlgebra& a,
                         const FinitePartitionAlgebra& b,
                         const FinitePartitionAlgebra& c) {
    Universe u = a.universe();
    require_same_universe(u, b, "free_amalgam");
    require_same_universe(u, c, "free_amalgam");
    auto wa = is_subalgebra(c, a);
    auto wb = is_subalgebra(c, b);
    if (!wa || !wb) {
        throw InputError("free_amalgam: C is not a subalgebra of both arguments");
    }
    // Atoms of the amalgam are the compatible pairs: atoms of A and B lying
    // in the same C-block. Fresh universe, one row per pair, pairs ordered
    // lexicographically so the construction is deterministic.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t ai = 0; ai < a.atom_count(); ++ai) {
        for (std::uint32_t bi = 0; bi < b.atom_count(); ++bi) {
            if (wa->refinement_map[ai] == wb->refinement_map[bi]) {
                pairs.emplace_back(ai, bi);
            }
        }
    }
    Universe fresh{pairs.size()};
    FreeAmalgam out{FinitePartitionAlgebra::discrete(fresh), std::move(pairs)};
    return out;
}

RowSet FreeAmalgam::embed_atom_of_a(std::uint32_t a_atom) const {
    RowSet out(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].first == a_atom) {
            out.set(i);
        }
    }
    return out;
}

RowSet FreeAmalgam::embed_atom_of_b(std::uint32_t b_atom) const {
    RowSet out(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].second == b_atom) {
            out.set(i);
        }
    }
    return out;
}

}  // namespace teamind
