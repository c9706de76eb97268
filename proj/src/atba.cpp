#include "teamind/atba.hpp"

#include <array>
#include <span>

#include "teamind/error.hpp"

namespace teamind {

namespace {

// Atom counts of the four cells of x against b0, each capped at 2. Two
// elements with equal descriptors have the same quantifier-free type over
// {b_0} in the language of the capped domination predicates.
std::array<std::size_t, 4> capped_descriptor(const RowSet& x, const RowSet& b0) {
    auto cap2 = [](std::size_t v) { return v > 2 ? std::size_t{2} : v; };
    RowSet nx = x.complement();
    RowSet nb = b0.complement();
    return {cap2((x & b0).count()), cap2((x & nb).count()),
            cap2((nx & b0).count()), cap2((nx & nb).count())};
}

}  // namespace

AtbaReport atba_demo(std::size_t m, std::size_t n) {
    if (n < 3) {
        throw InputError("atba_demo requires a sequence length of at least 3");
    }
    if (m < 2 * n) {
        throw InputError("atba_demo requires at least 2n spare atoms");
    }

    // Rows are the atoms: c = 0, d = 1, e = 2, f = 3, p_j = 4 + j.
    Universe universe{4 + m};
    RowSet a(universe.size);
    a.set(0);
    a.set(1);
    RowSet b0(universe.size);
    b0.set(0);
    b0.set(2);
    std::vector<RowSet> seq;
    seq.reserve(n);
    seq.push_back(b0);
    for (std::size_t i = 1; i < n; ++i) {
        RowSet bi(universe.size);
        bi.set(2 + 2 * i);
        bi.set(3 + 2 * i);
        seq.push_back(bi);
    }

    AtbaReport report;
    report.n = n;
    report.m = m;

    FinitePartitionAlgebra alg_a = generate_subalgebra(universe, std::span(&a, 1));
    FinitePartitionAlgebra alg_b = generate_subalgebra(universe, std::span(&b0, 1));
    FinitePartitionAlgebra two = FinitePartitionAlgebra::trivial(universe);
    report.independent = independence_fast(alg_a, alg_b, two).independent;
    report.oracles = independence_oracles(alg_a, alg_b, two, universe);

    // Every join of two atoms whose capped descriptor equals that of a is a
    // type-correct candidate; each must miss some b_i with i >= 1 because a
    // two-atom element meets at most one of the disjoint b_1..b_{n-1}.
    std::array<std::size_t, 4> target = capped_descriptor(a, b0);
    report.all_fail = true;
    for (std::uint32_t q0 = 0; q0 < universe.size; ++q0) {
        for (std::uint32_t q1 = q0 + 1; q1 < universe.size; ++q1) {
            RowSet cand(universe.size);
            cand.set(q0);
            cand.set(q1);
            if (capped_descriptor(cand, b0) != target) continue;
            AtbaCandidate entry{q0, q1, 0};
            for (std::size_t i = 1; i < n; ++i) {
                if (!cand.intersects(seq[i])) {
                    entry.fails_at = i;
                    break;
                }
            }
            if (entry.fails_at == 0) report.all_fail = false;
            report.candidates.push_back(entry);
        }
    }
    return report;
}

}  // namespace teamind
