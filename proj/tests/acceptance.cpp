// Acceptance gate. argv[1] selects a criterion 1..9; each run prints exactly
// one PASS/FAIL line with the measured statistics and enforces its runtime
// budget in-process. Exit 0 on pass, 1 on fail, 2 on usage.

#include <sys/wait.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "teamind/atba.hpp"
#include "teamind/checks.hpp"
#include "teamind/clopen.hpp"
#include "teamind/dividing.hpp"
#include "teamind/error.hpp"
#include "teamind/finite_algebra.hpp"
#include "teamind/pattern.hpp"
#include "teamind/team.hpp"
#include "teamind/teamgen.hpp"

namespace {

using namespace teamind;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Shared corpus for criteria 1, 3 and 7: the stream of rng draws is identical
// across the three, so they see the same teams and the same tuple samples.
Team random_team(std::mt19937_64& rng) {
    std::size_t width = 2 + rng() % 5;
    std::size_t rows = 1 + rng() % 200;
    Schema schema;
    for (std::size_t c = 0; c < width; ++c) schema.attributes.push_back("a" + std::to_string(c));
    std::vector<std::vector<std::string>> data;
    data.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<std::string> row;
        row.reserve(width);
        for (std::size_t c = 0; c < width; ++c) row.push_back(std::to_string(rng() % 8));
        data.push_back(std::move(row));
    }
    return Team(std::move(schema), std::move(data));
}

AttributeTuple random_tuple(const Team& team, std::mt19937_64& rng) {
    AttributeTuple t;
    std::size_t len = rng() % 3;
    for (std::size_t i = 0; i < len; ++i) {
        t.names.push_back(team.schema().attributes[rng() % team.schema().attributes.size()]);
    }
    return t;
}

template <typename Fn>
void for_each_team_sample(std::uint64_t seed, std::size_t teams, std::size_t samples, Fn&& fn) {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < teams; ++t) {
        Team team = random_team(rng);
        for (std::size_t s = 0; s < samples; ++s) {
            AttributeTuple z = random_tuple(team, rng);
            AttributeTuple x = random_tuple(team, rng);
            AttributeTuple y = random_tuple(team, rng);
            fn(team, z, x, y);
        }
    }
}

FinitePartitionAlgebra random_partition(Universe universe, std::size_t max_blocks,
                                        std::mt19937_64& rng) {
    std::size_t labels = 1 + rng() % max_blocks;
    std::vector<RowSet> buckets(labels, RowSet(universe.size));
    for (std::size_t row = 0; row < universe.size; ++row) buckets[rng() % labels].set(row);
    std::vector<RowSet> blocks;
    for (RowSet& b : buckets) {
        if (b.any()) blocks.push_back(std::move(b));
    }
    return FinitePartitionAlgebra(universe, std::move(blocks));
}

FinitePartitionAlgebra refine_partition(const FinitePartitionAlgebra& coarse,
                                        std::mt19937_64& rng) {
    std::vector<RowSet> blocks;
    for (const RowSet& block : coarse.atoms()) {
        std::size_t labels = 1 + rng() % 3;
        std::vector<RowSet> buckets(labels, RowSet(coarse.universe().size));
        for (std::size_t row = 0; row < coarse.universe().size; ++row) {
            if (block.test(row)) buckets[rng() % labels].set(row);
        }
        for (RowSet& b : buckets) {
            if (b.any()) blocks.push_back(std::move(b));
        }
    }
    return FinitePartitionAlgebra(coarse.universe(), std::move(blocks));
}

ClopenSet random_cylinder(std::mt19937_64& rng, std::size_t max_depth) {
    std::size_t len = rng() % (max_depth + 1);
    std::string bits;
    for (std::size_t i = 0; i < len; ++i) bits += (rng() & 1) ? '1' : '0';
    return ClopenSet::cylinder(Word::from_string(bits));
}

ClopenSet random_clopen(std::mt19937_64& rng, std::size_t max_depth) {
    ClopenSet s = random_cylinder(rng, max_depth);
    std::size_t ops = rng() % 5;
    for (std::size_t i = 0; i < ops; ++i) {
        ClopenSet t = random_cylinder(rng, max_depth);
        switch (rng() % 4) {
            case 0: s = meet(s, t); break;
            case 1: s = join(s, t); break;
            case 2: s = minus(s, t); break;
            default: s = complement(s); break;
        }
    }
    return s;
}

ClopenSet random_nonzero_clopen(std::mt19937_64& rng, std::size_t max_depth) {
    for (std::size_t attempt = 0; attempt < 1000; ++attempt) {
        ClopenSet s = random_clopen(rng, max_depth);
        if (!s.is_zero()) return s;
    }
    return ClopenSet::cylinder("0");
}

bool criterion_1() {
    auto start = Clock::now();
    std::size_t checks = 0;
    std::size_t disagreements = 0;
    for_each_team_sample(101, 1000, 10,
                         [&](const Team& team, const AttributeTuple& z, const AttributeTuple& x,
                             const AttributeTuple& y) {
                             ConsistencyReport r = verify_reduction(team, z, x, y, 0);
                             ++checks;
                             if (!r.agreement) ++disagreements;
                         });
    double secs = seconds_since(start);
    bool ok = checks >= 10000 && disagreements == 0 && secs < 60.0;
    std::printf(
        "%s criterion 1: emvd_fast/emvd_bruteforce/tuple_independence/algebra_fast on %zu checks "
        "over 1000 teams, %zu disagreements, %.2fs (budget 60s)\n",
        ok ? "PASS" : "FAIL", checks, disagreements, secs);
    return ok;
}

bool criterion_2() {
    auto start = Clock::now();
    std::mt19937_64 rng(202);
    const std::size_t trials = 1000;
    std::size_t disagreements = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Universe universe{2 + rng() % 11};
        FinitePartitionAlgebra c = random_partition(universe, 4, rng);
        FinitePartitionAlgebra a = refine_partition(c, rng);
        FinitePartitionAlgebra b = refine_partition(c, rng);
        IndependenceVerdict fast = independence_fast(a, b, c);
        OracleVerdicts oracles = independence_oracles(a, b, c, universe, 12);
        if (!oracles.agree(fast.independent)) ++disagreements;
    }
    double secs = seconds_since(start);
    bool ok = disagreements == 0 && secs < 60.0;
    std::printf(
        "%s criterion 2: fast/topological/referee/pushout on %zu random triples C <= A, B, "
        "%zu disagreements, %.2fs (budget 60s)\n",
        ok ? "PASS" : "FAIL", trials, disagreements, secs);
    return ok;
}

bool criterion_3() {
    auto start = Clock::now();
    std::size_t checks = 0;
    std::size_t disagreements = 0;
    for_each_team_sample(
        101, 1000, 10,
        [&](const Team& team, const AttributeTuple& z, const AttributeTuple& x,
            const AttributeTuple& y) {
            (void)z;
            CheckReport fd = check_fd(team, x, y);
            CheckReport emvd = check_emvd(team, x, y, y, EmvdMode::fast);
            bool same = fd.satisfied == emvd.satisfied;
            if (same && !fd.satisfied) same = fd.witness->rows == emvd.witness->rows;
            if (!same) ++disagreements;

            CheckReport dep = check_atom(team, DependencyAtom::dep(x, y), EmvdMode::fast);
            CheckReport ind = check_atom(team, DependencyAtom::ind(y, x, y), EmvdMode::fast);
            bool same2 = dep.satisfied == ind.satisfied;
            if (same2 && !dep.satisfied) same2 = dep.witness->rows == ind.witness->rows;
            if (!same2) ++disagreements;
            checks += 2;
        });
    double secs = seconds_since(start);
    bool ok = checks >= 20000 && disagreements == 0;
    std::printf(
        "%s criterion 3: fd-as-emvd and dep-as-ind on %zu checks over the criterion-1 corpus, "
        "%zu disagreements, %.2fs\n",
        ok ? "PASS" : "FAIL", checks, disagreements, secs);
    return ok;
}

bool criterion_4() {
    auto start = Clock::now();
    std::mt19937_64 rng(404);
    const std::size_t trials = 100;
    const std::size_t k = 50;
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        ClopenSet a = random_nonzero_clopen(rng, 6);
        std::vector<ClopenSet> pieces = split(a, k);
        bool ok = pieces.size() == k;
        ClopenSet joined = ClopenSet::zero();
        for (std::size_t i = 0; ok && i < pieces.size(); ++i) {
            if (pieces[i].is_zero()) ok = false;
            for (std::size_t j = 0; ok && j < i; ++j) {
                if (!meet(pieces[i], pieces[j]).is_zero()) ok = false;
            }
            joined = join(joined, pieces[i]);
            if (!(leq(joined, a) && joined != a)) ok = false;
        }
        if (!ok) ++failures;
    }
    double secs = seconds_since(start);
    bool ok = failures == 0 && secs < 5.0;
    std::printf(
        "%s criterion 4: split conditions (i)-(iii) at every prefix, %zu sets, k=%zu, "
        "%zu failures, %.2fs (budget 5s)\n",
        ok ? "PASS" : "FAIL", trials, k, failures, secs);
    return ok;
}

bool criterion_5() {
    auto start = Clock::now();
    std::mt19937_64 rng(505);
    const std::size_t trials = 200;
    const std::size_t n = 8;
    std::size_t failures = 0;
    std::size_t divided = 0;
    std::size_t extended = 0;
    std::string first_error;

    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<ClopenSet> base;
        std::size_t gens = rng() % 5;
        for (std::size_t g = 0; g < gens; ++g) base.push_back(random_clopen(rng, 6));
        ClopenSet a = random_clopen(rng, 6);
        ClopenSet b = random_clopen(rng, 6);

        bool trial_ok = true;
        auto fail_trial = [&](const std::string& why) {
            trial_ok = false;
            if (first_error.empty()) first_error = why + " (trial " + std::to_string(t) + ")";
        };

        FiniteConfiguration cfg = finite_configuration(a, b, base);
        bool independent =
            independence_fast(cfg.algebra_a, cfg.algebra_b, cfg.algebra_c).independent;

        bool witness_ok = false;
        try {
            DividingWitness w = dividing_witness(a, b, base, n);
            witness_ok = true;
            if (w.seq.seq.size() != n) fail_trial("dividing sequence has wrong length");
            if (!(w.seq.seq[0] == w.b_star)) fail_trial("sequence does not start at b*");
            if (w.a_star.is_zero() || !leq(w.a_star, w.b_star)) fail_trial("bad a*");
            if (!validate_dividing(w)) fail_trial("dividing witness failed validation");
            if (!indiscernible_check(w.seq, 3).ok) fail_trial("witness sequence not indiscernible");
            for (std::size_t i = 0; i < w.seq.seq.size(); ++i) {
                for (std::size_t j = 0; j < i; ++j) {
                    if (!meet(w.seq.seq[i], w.seq.seq[j]).is_zero()) {
                        fail_trial("witness members overlap");
                    }
                }
            }
            ZeroPattern t0 = qf_type({w.seq.seq[0]}, base);
            for (std::size_t i = 1; i < w.seq.seq.size(); ++i) {
                if (!(qf_type({w.seq.seq[i]}, base) == t0)) fail_trial("type drift in witness");
            }
        } catch (const NotApplicableError&) {
        } catch (const Error& e) {
            fail_trial(std::string("dividing raised: ") + e.what());
        }

        bool extension_ok = false;
        try {
            WitnessSequence seq = make_witness_sequence(b, base, n);
            ClopenSet a2 = nonforking_extension(a, base, seq, 3, true);
            extension_ok = true;
            std::vector<ClopenSet> base_b0 = base;
            base_b0.push_back(seq.seq[0]);
            ZeroPattern target = qf_type({a}, base_b0);
            for (std::size_t i = 0; i < seq.seq.size(); ++i) {
                std::vector<ClopenSet> base_bi = base;
                base_bi.push_back(seq.seq[i]);
                if (!(qf_type({a2}, base_bi) == target)) fail_trial("extension type mismatch");
            }
            WitnessSequence over_a = seq;
            over_a.base.push_back(a2);
            if (!indiscernible_check(over_a, 3).ok) {
                fail_trial("sequence loses indiscernibility over the extension");
            }
        } catch (const PreconditionError&) {
        } catch (const Error& e) {
            fail_trial(std::string("extension raised: ") + e.what());
        }

        if (witness_ok == extension_ok) {
            fail_trial(witness_ok ? "both directions succeeded" : "both directions refused");
        }
        if (witness_ok == independent) fail_trial("successful side contradicts independence_fast");
        if (witness_ok) ++divided;
        if (extension_ok) ++extended;
        if (!trial_ok) ++failures;
    }
    double secs = seconds_since(start);
    bool ok = failures == 0 && divided > 0 && extended > 0 && secs < 120.0;
    std::printf(
        "%s criterion 5: dichotomy on %zu configurations (%zu dividing, %zu nonforking), "
        "%zu failures%s%s, %.2fs (budget 120s)\n",
        ok ? "PASS" : "FAIL", trials, divided, extended, failures,
        first_error.empty() ? "" : ", first: ", first_error.c_str(), secs);
    return ok;
}

bool criterion_6() {
    auto start = Clock::now();
    struct Case {
        std::size_t m;
        std::size_t n;
    };
    const Case cases[] = {{6, 3}, {10, 5}};
    bool ok = true;
    std::size_t total_candidates = 0;
    for (const Case& c : cases) {
        AtbaReport r = atba_demo(c.m, c.n);
        bool good = r.independent && r.oracles.agree(true) && r.all_fail &&
                    r.candidates.size() == 2 * (c.m + 2);
        for (const AtbaCandidate& cand : r.candidates) {
            if (cand.fails_at < 1 || cand.fails_at >= c.n) good = false;
        }
        total_candidates += r.candidates.size();
        if (!good) ok = false;
    }
    double secs = seconds_since(start);
    ok = ok && secs < 5.0;
    std::printf(
        "%s criterion 6: atba demos (m=6,n=3) and (m=10,n=5) independent by all routes, "
        "%zu/%zu candidates fail below n, %.2fs (budget 5s)\n",
        ok ? "PASS" : "FAIL", total_candidates, total_candidates, secs);
    return ok;
}

bool criterion_7() {
    auto start = Clock::now();
    std::size_t checks = 0;
    std::size_t failures = 0;
    for_each_team_sample(
        101, 1000, 10,
        [&](const Team& team, const AttributeTuple& z, const AttributeTuple& x,
            const AttributeTuple& y) {
            (void)y;
            ++checks;
            FinitePartitionAlgebra coarse = kernel_algebra(team, z);
            AttributeTuple xz = x;
            xz.names.insert(xz.names.end(), z.names.begin(), z.names.end());
            FinitePartitionAlgebra fine = kernel_algebra(team, xz);
            auto witness = is_subalgebra(coarse, fine);
            if (!witness || witness->refinement_map.size() != fine.atom_count()) {
                ++failures;
                return;
            }
            std::vector<RowSet> rebuilt(coarse.atom_count(), RowSet(team.row_count()));
            for (std::size_t i = 0; i < fine.atom_count(); ++i) {
                std::uint32_t j = witness->refinement_map[i];
                if (j >= coarse.atom_count() || !fine.atom(i).is_subset_of(coarse.atom(j))) {
                    ++failures;
                    return;
                }
                rebuilt[j] |= fine.atom(i);
            }
            for (std::size_t j = 0; j < coarse.atom_count(); ++j) {
                if (!(rebuilt[j] == coarse.atom(j))) {
                    ++failures;
                    return;
                }
            }
        });
    double secs = seconds_since(start);
    bool ok = checks >= 10000 && failures == 0;
    std::printf(
        "%s criterion 7: kernel(z) <= kernel(xz) with validated refinement maps on %zu checks, "
        "%zu failures, %.2fs\n",
        ok ? "PASS" : "FAIL", checks, failures, secs);
    return ok;
}

bool criterion_8() {
    Team team = bench_team(8080, 1000, 25, 40);
    bool ok = team.row_count() == 1000000 && team.schema().attributes.size() == 5;

    AttributeTuple z{{"z"}};
    AttributeTuple x{{"x"}};
    AttributeTuple y{{"y"}};
    auto start = Clock::now();
    CheckReport fast = check_emvd(team, z, x, y, EmvdMode::fast);
    double fast_secs = seconds_since(start);
    ok = ok && fast.satisfied && fast_secs < 5.0;

    Team sub = subsample(team, 2000, 909);
    CheckReport sub_fast = check_emvd(sub, z, x, y, EmvdMode::fast);
    CheckReport sub_brute = check_emvd(sub, z, x, y, EmvdMode::bruteforce);
    bool agree = sub_fast.satisfied == sub_brute.satisfied;
    if (agree && !sub_fast.satisfied) agree = sub_fast.witness->rows == sub_brute.witness->rows;
    ok = ok && agree;

    std::printf(
        "%s criterion 8: fast emvd on %zu rows in %.3fs (budget 5s), satisfied=%d, "
        "%zu-row subsample fast/bruteforce agree=%d\n",
        ok ? "PASS" : "FAIL", team.row_count(), fast_secs, fast.satisfied ? 1 : 0,
        sub.row_count(), agree ? 1 : 0);
    return ok;
}

std::string read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool criterion_9() {
    const char* bin = std::getenv("TEAMIND_BIN");
    if (bin == nullptr) {
        std::printf("FAIL criterion 9: TEAMIND_BIN is not set\n");
        return false;
    }
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "teamind_acceptance";
    fs::create_directories(dir);
    fs::path csv = dir / "fixture.csv";
    {
        std::ofstream out(csv);
        out << "z,x,y\n0,a,p\n0,a,q\n0,b,p\n0,b,q\n1,a,p\n";
    }

    std::string prefix = std::string("\"") + bin + "\" ";
    const std::vector<std::string> commands = {
        prefix + "check \"z ->> x | y\" --team " + csv.string() + " --json",
        prefix + "check \"x -> y\" --team " + csv.string() + " --mode crosscheck --json --cap-atoms 8",
        prefix + "crosscheck \"x _||_{z} y\" --team " + csv.string() + " --json --cap-atoms 8",
        prefix + "aba split 0,10 -k 5 --json",
        prefix + "aba witness 00 0 --json",
        prefix + "aba extend 00,100 --seq \"0;10;110\" --json",
        prefix + "aba atba-demo -n 3 -m 6 --json",
    };

    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        fs::path out1 = dir / ("out_" + std::to_string(i) + "_run1.json");
        fs::path out2 = dir / ("out_" + std::to_string(i) + "_run2.json");
        int codes[2] = {-1, -1};
        const fs::path* outs[2] = {&out1, &out2};
        bool run_ok = true;
        for (int r = 0; r < 2; ++r) {
            std::string cmd = commands[i] + " > " + outs[r]->string() + " 2>/dev/null";
            int status = std::system(cmd.c_str());
            if (status == -1 || !WIFEXITED(status)) {
                run_ok = false;
                break;
            }
            codes[r] = WEXITSTATUS(status);
        }
        std::string bytes1 = read_file_bytes(out1);
        std::string bytes2 = read_file_bytes(out2);
        if (!run_ok || codes[0] != codes[1] || codes[0] > 1 || bytes1.empty() ||
            bytes1 != bytes2) {
            ++mismatches;
        }
    }
    bool ok = mismatches == 0;
    std::printf(
        "%s criterion 9: byte-identical canonical JSON over two runs of %zu commands, "
        "%zu mismatches\n",
        ok ? "PASS" : "FAIL", commands.size(), mismatches);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..9>\n");
        return 2;
    }
    int which = std::atoi(argv[1]);
    bool ok = false;
    try {
        switch (which) {
            case 1: ok = criterion_1(); break;
            case 2: ok = criterion_2(); break;
            case 3: ok = criterion_3(); break;
            case 4: ok = criterion_4(); break;
            case 5: ok = criterion_5(); break;
            case 6: ok = criterion_6(); break;
            case 7: ok = criterion_7(); break;
            case 8: ok = criterion_8(); break;
            case 9: ok = criterion_9(); break;
            default: std::fprintf(stderr, "unknown criterion: %s\n", argv[1]); return 2;
        }
    } catch (const std::exception& e) {
        std::printf("FAIL criterion %d: unexpected exception: %s\n", which, e.what());
        return 1;
    }
    return ok ? 0 : 1;
}
