#include "doctest.h"

#include <random>
#include <span>
#include <vector>

#include "teamind/finite_algebra.hpp"

using namespace teamind;

namespace {

RowSet of(std::size_t universe, std::initializer_list<std::size_t> rows) {
    return RowSet::of(universe, rows);
}

FinitePartitionAlgebra gen(std::size_t universe, std::vector<RowSet> generators) {
    return generate_subalgebra(Universe{universe}, generators);
}

// Random refinement of `coarse`: every block is either kept or split into
// two nonempty halves.
FinitePartitionAlgebra refine(const FinitePartitionAlgebra& coarse, std::mt19937_64& rng) {
    std::vector<RowSet> blocks;
    for (const RowSet& block : coarse.atoms()) {
        std::vector<std::size_t> rows = block.to_vector();
        if (rows.size() >= 2 && rng() % 2) {
            std::size_t cut = 1 + static_cast<std::size_t>(rng() % (rows.size() - 1));
            RowSet lo(coarse.universe().size), hi(coarse.universe().size);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                (i < cut ? lo : hi).set(rows[i]);
            }
            blocks.push_back(lo);
            blocks.push_back(hi);
        } else {
            blocks.push_back(block);
        }
    }
    return FinitePartitionAlgebra(coarse.universe(), std::move(blocks));
}

FinitePartitionAlgebra random_partition(std::size_t universe, std::size_t max_blocks,
                                        std::mt19937_64& rng) {
    std::size_t want = 1 + static_cast<std::size_t>(rng() % max_blocks);
    std::vector<RowSet> blocks(std::min(want, universe), RowSet(universe));
    for (std::size_t r = 0; r < universe; ++r) {
        blocks[r < blocks.size() ? r : rng() % blocks.size()].set(r);
    }
    return FinitePartitionAlgebra(Universe{universe}, std::move(blocks));
}

}  // namespace

TEST_CASE("generated subalgebra separates rows by membership pattern") {
    FinitePartitionAlgebra one_gen = gen(4, {of(4, {0, 1})});
    REQUIRE(one_gen.atom_count() == 2);
    CHECK(one_gen.atom(0) == of(4, {0, 1}));
    CHECK(one_gen.atom(1) == of(4, {2, 3}));

    FinitePartitionAlgebra two_gen = gen(4, {of(4, {0, 1}), of(4, {0, 2})});
    REQUIRE(two_gen.atom_count() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(two_gen.atom(i) == of(4, {i}));

    FinitePartitionAlgebra no_gen = gen(4, {});
    REQUIRE(no_gen.atom_count() == 1);
    CHECK(no_gen.atom(0) == RowSet::full(4));
}

TEST_CASE("constructor rejects non-partitions") {
    CHECK_THROWS_AS(FinitePartitionAlgebra(Universe{4}, {of(4, {0, 1}), of(4, {1, 2, 3})}),
                    InputError);
    CHECK_THROWS_AS(FinitePartitionAlgebra(Universe{4}, {of(4, {0, 1})}), InputError);
    CHECK_THROWS_AS(FinitePartitionAlgebra(Universe{4}, {of(4, {0, 1, 2, 3}), RowSet(4)}),
                    InputError);
}

TEST_CASE("blocks are canonically ordered by least row") {
    FinitePartitionAlgebra alg(Universe{4}, {of(4, {2, 3}), of(4, {0, 1})});
    CHECK(alg.atom(0) == of(4, {0, 1}));
    CHECK(alg.atom(1) == of(4, {2, 3}));
}

TEST_CASE("subalgebra detection and refinement maps") {
    FinitePartitionAlgebra c(Universe{4}, {of(4, {0, 1}), of(4, {2, 3})});
    FinitePartitionAlgebra a(Universe{4}, {of(4, {0}), of(4, {1}), of(4, {2, 3})});
    auto witness = is_subalgebra(c, a);
    REQUIRE(witness.has_value());
    CHECK(witness->refinement_map == std::vector<std::uint32_t>{0, 0, 1});

    auto identity = is_subalgebra(c, c);
    REQUIRE(identity.has_value());
    CHECK(identity->refinement_map == std::vector<std::uint32_t>{0, 1});

    FinitePartitionAlgebra crossed(Universe{4}, {of(4, {0, 2}), of(4, {1, 3})});
    CHECK_FALSE(is_subalgebra(crossed, c).has_value());

    FinitePartitionAlgebra other(Universe{5}, {RowSet::full(5)});
    CHECK_THROWS_AS(is_subalgebra(other, c), InputError);
}

TEST_CASE("atom projection is the least covering element") {
    FinitePartitionAlgebra c(Universe{4}, {of(4, {0, 1}), of(4, {2, 3})});
    CHECK(atom_projection(c, of(4, {0})) == of(4, {0, 1}));
    CHECK(atom_projection(c, of(4, {0, 2})) == RowSet::full(4));
    CHECK(atom_projection(c, RowSet(4)) == RowSet(4));
}

TEST_CASE("fast independence on the pinned configurations") {
    FinitePartitionAlgebra two = FinitePartitionAlgebra::trivial(Universe{4});
    FinitePartitionAlgebra a = gen(4, {of(4, {0, 1})});
    FinitePartitionAlgebra b = gen(4, {of(4, {0, 2})});

    CHECK(independence_fast(a, b, two).independent);

    IndependenceVerdict dep = independence_fast(a, a, two);
    REQUIRE_FALSE(dep.independent);
    REQUIRE(dep.witness.has_value());
    CHECK(dep.witness->a == of(4, {0, 1}));
    CHECK(dep.witness->b == of(4, {2, 3}));

    FinitePartitionAlgebra fine = gen(4, {of(4, {0, 1}), of(4, {0, 2})});
    CHECK(independence_fast(a, fine, a).independent);
}

TEST_CASE("independence requires the common-subalgebra precondition") {
    FinitePartitionAlgebra a = gen(4, {of(4, {0, 1})});
    FinitePartitionAlgebra c = gen(4, {of(4, {0, 2})});
    CHECK_THROWS_AS(independence_fast(a, a, c), InputError);
}

TEST_CASE("oracle routes on the pinned configurations") {
    FinitePartitionAlgebra two = FinitePartitionAlgebra::trivial(Universe{4});
    FinitePartitionAlgebra a = gen(4, {of(4, {0, 1})});
    FinitePartitionAlgebra b = gen(4, {of(4, {0, 2})});
    OracleVerdicts good = independence_oracles(a, b, two, Universe{4});
    CHECK(good.topological);
    CHECK(good.referee);
    CHECK(good.pushout);
    CHECK(good.agree(true));

    FinitePartitionAlgebra two3 = FinitePartitionAlgebra::trivial(Universe{3});
    FinitePartitionAlgebra a3 = gen(3, {of(3, {0})});
    FinitePartitionAlgebra b3 = gen(3, {of(3, {0, 1})});
    OracleVerdicts bad = independence_oracles(a3, b3, two3, Universe{3});
    CHECK_FALSE(bad.topological);
    CHECK_FALSE(bad.referee);
    CHECK_FALSE(bad.pushout);
    CHECK(bad.agree(false));
}

TEST_CASE("oracles refuse above the atom cap") {
    std::size_t n = 20;
    FinitePartitionAlgebra discrete = FinitePartitionAlgebra::discrete(Universe{n});
    FinitePartitionAlgebra two = FinitePartitionAlgebra::trivial(Universe{n});
    CHECK_THROWS_AS(independence_oracles(discrete, discrete, two, Universe{n}, 16),
                    CapacityError);
}

TEST_CASE("free amalgam atom counts") {
    FinitePartitionAlgebra two = FinitePartitionAlgebra::trivial(Universe{4});
    FinitePartitionAlgebra a = gen(4, {of(4, {0, 1})});
    FinitePartitionAlgebra b = gen(4, {of(4, {0, 2})});
    FreeAmalgam amalgam = free_amalgam(a, b, two);
    CHECK(amalgam.algebra.atom_count() == 4);
    CHECK(amalgam.pairs.size() == 4);

    FinitePartitionAlgebra fine = gen(4, {of(4, {0, 1}), of(4, {0, 2})});
    FreeAmalgam over_self = free_amalgam(a, fine, a);
    // C = A: compatible pairs are (containing A-atom, B-atom), one per B-atom.
    CHECK(over_self.algebra.atom_count() == fine.atom_count());

    FinitePartitionAlgebra c2(Universe{4}, {of(4, {0, 1}), of(4, {2, 3})});
    FinitePartitionAlgebra fine_a(Universe{4}, {of(4, {0}), of(4, {1}), of(4, {2, 3})});
    FinitePartitionAlgebra fine_b(Universe{4}, {of(4, {0, 1}), of(4, {2}), of(4, {3})});
    CHECK(free_amalgam(fine_a, fine_b, c2).algebra.atom_count() == 4);
}

TEST_CASE("amalgam embeddings cover the fresh universe compatibly") {
    FinitePartitionAlgebra c(Universe{6}, {of(6, {0, 1, 2}), of(6, {3, 4, 5})});
    std::mt19937_64 rng(11);
    FinitePartitionAlgebra a = refine(c, rng);
    FinitePartitionAlgebra b = refine(c, rng);
    FreeAmalgam amalgam = free_amalgam(a, b, c);
    RowSet all_a(amalgam.algebra.universe().size);
    for (std::uint32_t i = 0; i < a.atom_count(); ++i) {
        all_a |= amalgam.embed_atom_of_a(i);
    }
    CHECK(all_a == RowSet::full(amalgam.algebra.universe().size));
    for (std::size_t p = 0; p < amalgam.pairs.size(); ++p) {
        auto [ai, bi] = amalgam.pairs[p];
        CHECK(atom_projection(c, a.atom(ai)) == atom_projection(c, b.atom(bi)));
        CHECK(amalgam.embed_atom_of_a(ai).test(p));
        CHECK(amalgam.embed_atom_of_b(bi).test(p));
    }
}

TEST_CASE("partition laws and atom laws hold on random algebras") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t universe = 1 + static_cast<std::size_t>(rng() % 12);
        FinitePartitionAlgebra alg = random_partition(universe, 6, rng);
        RowSet seen(universe);
        for (const RowSet& block : alg.atoms()) {
            CHECK_FALSE(block.empty());
            CHECK_FALSE(seen.intersects(block));
            seen |= block;
        }
        CHECK(seen == RowSet::full(universe));

        // Atom law against a random element of the algebra.
        RowSet element(universe);
        for (const RowSet& block : alg.atoms()) {
            if (rng() % 2) element |= block;
        }
        CHECK(alg.contains(element));
        for (const RowSet& block : alg.atoms()) {
            bool below = block.is_subset_of(element);
            bool apart = !block.intersects(element);
            CHECK(below != apart);
        }
    }
}

TEST_CASE("four independence routes agree on random triples") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t universe = 2 + static_cast<std::size_t>(rng() % 9);
        FinitePartitionAlgebra c = random_partition(universe, 3, rng);
        FinitePartitionAlgebra a = refine(c, rng);
        FinitePartitionAlgebra b = refine(c, rng);
        bool fast = independence_fast(a, b, c).independent;
        OracleVerdicts oracles = independence_oracles(a, b, c, Universe{universe});
        CHECK(oracles.agree(fast));
        // Symmetry.
        CHECK(independence_fast(b, a, c).independent == fast);
    }
}

TEST_CASE("independence is monotone under shrinking the sides") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t universe = 2 + static_cast<std::size_t>(rng() % 9);
        FinitePartitionAlgebra c = random_partition(universe, 3, rng);
        FinitePartitionAlgebra a_small = refine(c, rng);
        FinitePartitionAlgebra a = refine(a_small, rng);
        FinitePartitionAlgebra b_small = refine(c, rng);
        FinitePartitionAlgebra b = refine(b_small, rng);
        if (independence_fast(a, b, c).independent) {
            CHECK(independence_fast(a_small, b_small, c).independent);
        }
    }
}

TEST_CASE("degenerate universes") {
    FinitePartitionAlgebra empty = FinitePartitionAlgebra::trivial(Universe{0});
    CHECK(empty.atom_count() == 0);
    CHECK(independence_fast(empty, empty, empty).independent);

    FinitePartitionAlgebra one = FinitePartitionAlgebra::trivial(Universe{1});
    CHECK(independence_fast(one, one, one).independent);
}
