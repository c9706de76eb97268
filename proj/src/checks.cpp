#include "teamind/checks.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>
#include <unordered_set>

namespace teamind {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start)
        .count();
}

// Per-row projection keys compressed to dense ids in first-seen order.
// Values are compared as exact strings; ids only speed up the loops.
struct InternedColumn {
    std::vector<std::uint32_t> id;
    std::uint32_t distinct = 0;
};

InternedColumn intern(const Team& team, const AttributeTuple& tuple) {
    std::vector<std::size_t> cols = team.resolve(tuple);
    InternedColumn out;
    out.id.reserve(team.row_count());
    std::unordered_map<std::string, std::uint32_t> ids;
    for (std::size_t i = 0; i < team.row_count(); ++i) {
        auto [it, inserted] =
            ids.try_emplace(team.project_key(i, cols), static_cast<std::uint32_t>(ids.size()));
        out.id.push_back(it->second);
    }
    out.distinct = static_cast<std::uint32_t>(ids.size());
    return out;
}

CheckWitness make_pair_witness(const Team& team, std::size_t t0, std::size_t t1) {
    CheckWitness w;
    w.rows = {t0, t1};
    w.row_values = {team.row(t0), team.row(t1)};
    return w;
}

std::uint64_t pack(std::uint32_t hi, std::uint32_t lo) {
    return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

}  // namespace

CheckReport check_fd(const Team& team, const AttributeTuple& x, const AttributeTuple& y) {
    auto start = Clock::now();
    InternedColumn xs = intern(team, x);
    InternedColumn ys = intern(team, y);
    const std::size_t n = team.row_count();

    struct Group {
        std::size_t first_row;
        std::uint32_t first_y;
        std::size_t conflict_row;
    };
    std::vector<Group> groups(xs.distinct, Group{0, 0, RowSet::npos});
    std::vector<bool> seen(xs.distinct, false);
    for (std::size_t i = 0; i < n; ++i) {
        Group& g = groups[xs.id[i]];
        if (!seen[xs.id[i]]) {
            seen[xs.id[i]] = true;
            g.first_row = i;
            g.first_y = ys.id[i];
        } else if (ys.id[i] != g.first_y && g.conflict_row == RowSet::npos) {
            g.conflict_row = i;
        }
    }

    CheckReport report;
    report.atom = DependencyAtom::fd(x, y);
    report.stats.rows = n;
    report.stats.groups = xs.distinct;
    // The least conflicting ordered pair overall comes from the group with
    // the smallest first row among those holding two y-values.
    const Group* winner = nullptr;
    for (const Group& g : groups) {
        if (g.conflict_row == RowSet::npos) continue;
        if (winner == nullptr || g.first_row < winner->first_row) {
            winner = &g;
        }
    }
    if (winner == nullptr) {
        report.satisfied = true;
    } else {
        report.satisfied = false;
        report.witness = make_pair_witness(team, winner->first_row, winner->conflict_row);
    }
    report.stats.micros = micros_since(start);
    return report;
}

namespace {

CheckReport emvd_fast(const Team& team, const AttributeTuple& z, const AttributeTuple& x,
                      const AttributeTuple& y) {
    auto start = Clock::now();
    InternedColumn zs = intern(team, z);
    InternedColumn xs = intern(team, x);
    InternedColumn ys = intern(team, y);
    const std::size_t n = team.row_count();

    std::vector<std::uint64_t> xcount(zs.distinct, 0);
    std::vector<std::uint64_t> ycount(zs.distinct, 0);
    std::vector<std::uint64_t> paircount(zs.distinct, 0);
    std::unordered_set<std::uint64_t> zx;
    std::unordered_set<std::uint64_t> zy;
    std::unordered_map<std::uint64_t, std::uint32_t> pair_ids;
    std::unordered_set<std::uint64_t> zxy;
    zx.reserve(n * 2);
    zy.reserve(n * 2);
    zxy.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t zi = zs.id[i];
        if (zx.insert(pack(zi, xs.id[i])).second) ++xcount[zi];
        if (zy.insert(pack(zi, ys.id[i])).second) ++ycount[zi];
        auto [it, inserted] = pair_ids.try_emplace(pack(xs.id[i], ys.id[i]),
                                                   static_cast<std::uint32_t>(pair_ids.size()));
        if (zxy.insert(pack(zi, it->second)).second) ++paircount[zi];
    }

    CheckReport report;
    report.atom = DependencyAtom::emvd(z, x, y);
    report.stats.rows = n;
    report.stats.groups = zs.distinct;
    report.satisfied = true;
    std::vector<std::uint32_t> failing;
    for (std::uint32_t g = 0; g < zs.distinct; ++g) {
        if (paircount[g] != xcount[g] * ycount[g]) {
            report.satisfied = false;
            failing.push_back(g);
        }
    }
    if (!report.satisfied) {
        // Reconstruct the least failing ordered pair: per failing group the
        // first t0 owning a missing (x(t0), y(t1)) combination, minimized
        // across groups by (t0, t1). Group row lists are built on demand.
        std::vector<std::vector<std::uint32_t>> rows_of(zs.distinct);
        std::vector<bool> is_failing(zs.distinct, false);
        for (std::uint32_t g : failing) is_failing[g] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (is_failing[zs.id[i]]) rows_of[zs.id[i]].push_back(static_cast<std::uint32_t>(i));
        }
        std::sort(failing.begin(), failing.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return rows_of[a][0] < rows_of[b][0]; });
        std::size_t best_t0 = RowSet::npos;
        std::size_t best_t1 = RowSet::npos;
        for (std::uint32_t g : failing) {
            const auto& rows = rows_of[g];
            if (best_t0 != RowSet::npos && rows[0] > best_t0) break;
            bool found = false;
            for (std::uint32_t t0 : rows) {
                if (best_t0 != RowSet::npos && t0 >= best_t0) break;
                for (std::uint32_t t1 : rows) {
                    auto it = pair_ids.find(pack(xs.id[t0], ys.id[t1]));
                    bool present =
                        it != pair_ids.end() && zxy.count(pack(g, it->second)) > 0;
                    if (!present) {
                        best_t0 = t0;
                        best_t1 = t1;
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
        }
        report.witness = make_pair_witness(team, best_t0, best_t1);
    }
    report.stats.micros = micros_since(start);
    return report;
}

CheckReport emvd_bruteforce(const Team& team, const AttributeTuple& z, const AttributeTuple& x,
                            const AttributeTuple& y) {
    auto start = Clock::now();
    InternedColumn zs = intern(team, z);
    InternedColumn xs = intern(team, x);
    InternedColumn ys = intern(team, y);
    const std::size_t n = team.row_count();
    const std::uint32_t* zv = zs.id.data();
    const std::uint32_t* xv = xs.id.data();
    const std::uint32_t* yv = ys.id.data();

    CheckReport report;
    report.atom = DependencyAtom::emvd(z, x, y);
    report.stats.rows = n;
    report.stats.groups = zs.distinct;
    report.satisfied = true;
    for (std::size_t t0 = 0; t0 < n && report.satisfied; ++t0) {
        for (std::size_t t1 = 0; t1 < n; ++t1) {
            if (zv[t0] != zv[t1]) continue;
            bool found = false;
            for (std::size_t t2 = 0; t2 < n; ++t2) {
                if (zv[t2] == zv[t0] && xv[t2] == xv[t0] && yv[t2] == yv[t1]) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                report.satisfied = false;
                report.witness = make_pair_witness(team, t0, t1);
                break;
            }
        }
    }
    report.stats.micros = micros_since(start);
    return report;
}

}  // namespace

CheckReport check_emvd(const Team& team, const AttributeTuple& z, const AttributeTuple& x,
                       const AttributeTuple& y, EmvdMode mode) {
    return mode == EmvdMode::fast ? emvd_fast(team, z, x, y)
                                  : emvd_bruteforce(team, z, x, y);
}

CheckReport check_atom(const Team& team, const DependencyAtom& atom, EmvdMode mode) {
    CheckReport report;
    switch (atom.kind) {
        case DependencyAtom::Kind::fd:
            report = check_fd(team, atom.tuples[0], atom.tuples[1]);
            break;
        case DependencyAtom::Kind::dep:
            report = check_fd(team, atom.tuples[0], atom.tuples[1]);
            break;
        case DependencyAtom::Kind::emvd:
            report = check_emvd(team, atom.tuples[0], atom.tuples[1], atom.tuples[2], mode);
            break;
        case DependencyAtom::Kind::ind:
            // u _||_{w} v is z ->> x | y with z = w, x = u, y = v.
            report = check_emvd(team, atom.tuples[1], atom.tuples[0], atom.tuples[2], mode);
            break;
    }
    report.atom = atom;
    return report;
}

bool tuple_independence(const Team& team, const AttributeTuple& x, const AttributeTuple& y,
                        const AttributeTuple& z) {
    InternedColumn zs = intern(team, z);
    InternedColumn xs = intern(team, x);
    InternedColumn ys = intern(team, y);
    const std::size_t n = team.row_count();

    std::unordered_map<std::uint64_t, std::uint32_t> pair_ids;
    std::unordered_set<std::uint64_t> zxy;
    zxy.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, inserted] = pair_ids.try_emplace(pack(xs.id[i], ys.id[i]),
                                                   static_cast<std::uint32_t>(pair_ids.size()));
        zxy.insert(pack(zs.id[i], it->second));
    }
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (zs.id[p] != zs.id[q]) continue;
            auto it = pair_ids.find(pack(xs.id[p], ys.id[q]));
            if (it == pair_ids.end() || zxy.count(pack(zs.id[p], it->second)) == 0) {
                return false;
            }
        }
    }
    return true;
}

ConsistencyReport verify_reduction(const Team& team, const AttributeTuple& z,
                                   const AttributeTuple& x, const AttributeTuple& y,
                                   std::size_t cap_atoms) {
    auto start = Clock::now();
    ConsistencyReport r;
    r.atom = DependencyAtom::emvd(z, x, y);

    CheckReport fast = check_emvd(team, z, x, y, EmvdMode::fast);
    CheckReport brute = check_emvd(team, z, x, y, EmvdMode::bruteforce);
    r.emvd_fast = fast.satisfied;
    r.emvd_bruteforce = brute.satisfied;
    r.tuple_ind = tuple_independence(team, x, y, z);

    AttributeTuple xz;
    xz.names = x.names;
    xz.names.insert(xz.names.end(), z.names.begin(), z.names.end());
    AttributeTuple yz;
    yz.names = y.names;
    yz.names.insert(yz.names.end(), z.names.begin(), z.names.end());

    FinitePartitionAlgebra pz = kernel_algebra(team, z);
    FinitePartitionAlgebra pxz = kernel_algebra(team, xz);
    FinitePartitionAlgebra pyz = kernel_algebra(team, yz);

    r.subalgebra_xz_ok = is_subalgebra(pz, pxz).has_value();
    r.subalgebra_yz_ok = is_subalgebra(pz, pyz).has_value();
    r.algebra_fast = independence_fast(pxz, pyz, pz).independent;

    if (cap_atoms > 0 && pxz.atom_count() <= cap_atoms && pyz.atom_count() <= cap_atoms) {
        r.oracles = independence_oracles(pxz, pyz, pz, team.universe(), cap_atoms);
    }

    bool verdicts_agree = r.emvd_fast == r.emvd_bruteforce && r.emvd_fast == r.tuple_ind &&
                          r.emvd_fast == r.algebra_fast;
    if (r.oracles) {
        verdicts_agree = verdicts_agree && r.oracles->agree(r.emvd_fast);
    }
    r.agreement = verdicts_agree && r.subalgebra_xz_ok && r.subalgebra_yz_ok;

    r.stats.rows = team.row_count();
    r.stats.groups = fast.stats.groups;
    r.stats.micros = micros_since(start);
    return r;
}

}  // namespace teamind
