#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "teamind/atba.hpp"
#include "teamind/checks.hpp"
#include "teamind/clopen.hpp"
#include "teamind/dividing.hpp"
#include "teamind/error.hpp"
#include "teamind/parser.hpp"
#include "teamind/report.hpp"
#include "teamind/team.hpp"
#include "teamind/teamgen.hpp"

namespace {

using namespace teamind;

// Exit codes: 0 satisfied / success, 1 violated or certificate refused,
// 2 usage or format error, 3 internal route disagreement (a defect).
enum ExitCode { exit_ok = 0, exit_violated = 1, exit_usage = 2, exit_disagreement = 3 };

TeamFormat pick_format(const std::string& flag, const std::string& path) {
    if (flag == "csv") return TeamFormat::csv;
    if (flag == "json") return TeamFormat::json;
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        return TeamFormat::json;
    }
    return TeamFormat::csv;
}

std::vector<ClopenSet> parse_clopen_list(const std::string& text) {
    std::vector<ClopenSet> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        std::string part =
            end == std::string::npos ? text.substr(start) : text.substr(start, end - start);
        std::size_t lo = part.find_first_not_of(" \t");
        std::size_t hi = part.find_last_not_of(" \t");
        if (lo != std::string::npos) out.push_back(parse_clopen(part.substr(lo, hi - lo + 1)));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

std::int64_t micros_between(std::chrono::steady_clock::time_point a,
                            std::chrono::steady_clock::time_point b) {
    return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count();
}

int run_check(const std::string& team_path, const std::string& format_flag,
              const std::string& mode, const std::string& atom_text, bool json_out,
              std::size_t cap_atoms) {
    DependencyAtom atom = parse_atom(atom_text);
    Team team = load_team_file(team_path, pick_format(format_flag, team_path));

    if (mode == "crosscheck") {
        AttributeTuple z, x, y;
        switch (atom.kind) {
            case DependencyAtom::Kind::emvd:
                z = atom.tuples[0], x = atom.tuples[1], y = atom.tuples[2];
                break;
            case DependencyAtom::Kind::ind:
                z = atom.tuples[1], x = atom.tuples[0], y = atom.tuples[2];
                break;
            case DependencyAtom::Kind::fd:
            case DependencyAtom::Kind::dep:
                z = atom.tuples[0], x = atom.tuples[1], y = atom.tuples[1];
                break;
        }
        ConsistencyReport report = verify_reduction(team, z, x, y, cap_atoms);
        report.atom = atom;
        if (json_out) {
            std::cout << emit_report(report_json(report, true));
        } else {
            std::cout << report_text(report);
        }
        if (!report.agreement) return exit_disagreement;
        return report.emvd_fast ? exit_ok : exit_violated;
    }

    EmvdMode emvd_mode = mode == "bruteforce" ? EmvdMode::bruteforce : EmvdMode::fast;
    CheckReport report = check_atom(team, atom, emvd_mode);
    if (json_out) {
        std::cout << emit_report(report_json(report, true));
    } else {
        std::cout << report_text(report);
    }
    return report.satisfied ? exit_ok : exit_violated;
}

int run_split(const std::string& a_text, std::size_t k, bool json_out) {
    std::vector<ClopenSet> pieces = split(parse_clopen(a_text), k);
    if (json_out) {
        nlohmann::json arr = nlohmann::json::array();
        for (const ClopenSet& p : pieces) arr.push_back(print_clopen(p));
        std::cout << emit_report(nlohmann::json{{"pieces", arr}});
    } else {
        for (const ClopenSet& p : pieces) std::cout << print_clopen(p) << "\n";
    }
    return exit_ok;
}

int run_witness(const std::string& a_text, const std::string& b_text, const std::string& base_text,
                std::size_t n, std::size_t window, bool json_out) {
    DividingWitness w =
        dividing_witness(parse_clopen(a_text), parse_clopen(b_text), parse_clopen_list(base_text), n);
    bool valid = validate_dividing(w);
    IndiscernibilityResult ind = indiscernible_check(w.seq, window);
    if (json_out) {
        nlohmann::json j = report_json(w);
        j["valid"] = valid;
        j["indiscernible"] = {{"window", window}, {"ok", ind.ok}};
        std::cout << emit_report(j);
    } else {
        std::cout << "dividing witness below atom " << print_clopen(w.atom) << "\n";
        std::cout << "  a* = " << print_clopen(w.a_star) << (w.replaced_a ? " (replaced)" : "")
                  << "\n";
        std::cout << "  b* = " << print_clopen(w.b_star) << (w.replaced_b ? " (replaced)" : "")
                  << "\n";
        for (std::size_t i = 0; i < w.seq.seq.size(); ++i) {
            std::cout << "  b_" << i << " = " << print_clopen(w.seq.seq[i]) << "\n";
        }
        std::cout << "  2-inconsistent: {x <= b_0, x <= b_1, x != 0}, b_0 & b_1 = "
                  << print_clopen(meet(w.seq.seq[0], w.seq.seq[1])) << "\n";
        std::cout << "  validated: " << (valid ? "true" : "FALSE") << ", indiscernible(window "
                  << window << "): " << (ind.ok ? "true" : "FALSE") << "\n";
    }
    return valid && ind.ok ? exit_ok : exit_disagreement;
}

int run_extend(const std::string& a_text, const std::string& base_text,
               const std::string& seq_text, std::size_t window, bool use_fallback, bool json_out) {
    ClopenSet a = parse_clopen(a_text);
    std::vector<ClopenSet> base = parse_clopen_list(base_text);
    WitnessSequence seq{base, parse_clopen_list(seq_text), SequenceKind::extension_input};
    ClopenSet a_prime = nonforking_extension(a, base, seq, window, use_fallback);

    std::vector<ClopenSet> with_b0 = base;
    with_b0.push_back(seq.seq[0]);
    ZeroPattern target = qf_type({a}, with_b0);
    bool types_ok = true;
    for (const ClopenSet& b : seq.seq) {
        std::vector<ClopenSet> with_bi = base;
        with_bi.push_back(b);
        types_ok = types_ok && qf_type({a_prime}, with_bi) == target;
    }
    WitnessSequence over_a = seq;
    over_a.base.push_back(a_prime);
    bool ind_ok = indiscernible_check(over_a, window).ok;

    if (json_out) {
        nlohmann::json j;
        j["a_prime"] = print_clopen(a_prime);
        j["type_match"] = types_ok;
        j["indiscernible"] = {{"window", window}, {"ok", ind_ok}};
        std::cout << emit_report(j);
    } else {
        std::cout << "a' = " << print_clopen(a_prime) << "\n";
        std::cout << "  type match at every member: " << (types_ok ? "true" : "FALSE") << "\n";
        std::cout << "  sequence indiscernible over base + {a'} (window " << window
                  << "): " << (ind_ok ? "true" : "FALSE") << "\n";
    }
    return types_ok && ind_ok ? exit_ok : exit_disagreement;
}

int run_atba(std::size_t m, std::size_t n, bool json_out) {
    AtbaReport report = atba_demo(m, n);
    if (json_out) {
        std::cout << emit_report(report_json(report));
    } else {
        std::cout << report_text(report);
    }
    bool coherent = report.independent && report.oracles.agree(report.independent) &&
                    report.all_fail && !report.candidates.empty();
    return coherent ? exit_ok : exit_disagreement;
}

int run_bench(std::uint64_t seed, std::size_t groups, std::size_t x_values, std::size_t y_values,
              std::size_t sub_rows, bool json_out) {
    using Clock = std::chrono::steady_clock;
    AttributeTuple z{{"z"}}, x{{"x"}}, y{{"y"}};

    Clock::time_point t0 = Clock::now();
    Team team = bench_team(seed, groups, x_values, y_values);
    Clock::time_point t1 = Clock::now();
    CheckReport fast = check_emvd(team, z, x, y, EmvdMode::fast);

    Team sub = subsample(team, sub_rows, seed);
    CheckReport sub_fast = check_emvd(sub, z, x, y, EmvdMode::fast);
    CheckReport sub_brute = check_emvd(sub, z, x, y, EmvdMode::bruteforce);
    bool agree = sub_fast.satisfied == sub_brute.satisfied;
    if (sub_fast.witness && sub_brute.witness) {
        agree = agree && sub_fast.witness->rows == sub_brute.witness->rows;
    }

    if (json_out) {
        nlohmann::json j;
        j["build_micros"] = micros_between(t0, t1);
        j["fast"] = {{"rows", team.row_count()},
                     {"satisfied", fast.satisfied},
                     {"micros", fast.stats.micros}};
        j["subsample"] = {{"rows", sub.row_count()},
                          {"fast_micros", sub_fast.stats.micros},
                          {"bruteforce_micros", sub_brute.stats.micros},
                          {"satisfied", sub_fast.satisfied}};
        j["agreement"] = agree;
        std::cout << emit_report(j);
    } else {
        std::cout << "bench: " << team.row_count() << " rows, " << team.schema().attributes.size()
                  << " attributes (seed " << seed << ")\n";
        std::cout << "  build: " << micros_between(t0, t1) / 1000 << " ms\n";
        std::cout << "  fast z ->> x | y: " << (fast.satisfied ? "satisfied" : "violated")
                  << " in " << fast.stats.micros / 1000 << " ms\n";
        std::cout << "  subsample " << sub.row_count()
                  << " rows: fast == bruteforce: " << (agree ? "true" : "FALSE") << "\n";
    }
    return agree ? exit_ok : exit_disagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"team and Boolean-algebra independence workbench"};
    app.require_subcommand(1);

    std::string team_path, format_flag, mode = "fast", atom_text;
    std::string a_text, b_text, base_text, seq_text;
    bool json_out = false, no_fallback = false;
    std::size_t cap_atoms = 16, window = 3, k = 1, n = 4;
    std::size_t demo_m = 6, demo_n = 3;
    std::uint64_t seed = 0;
    std::size_t groups = 1000, x_values = 25, y_values = 40, sub_rows = 2000;

    CLI::App* check = app.add_subcommand("check", "check one dependency atom against a team");
    check->add_option("atom", atom_text, "atom, e.g. \"z ->> x | y\"")->required();
    check->add_option("--team", team_path, "team file")->required()->check(CLI::ExistingFile);
    check->add_option("--format", format_flag, "csv or json (default: by extension)")
        ->check(CLI::IsMember({"csv", "json"}));
    check->add_option("--mode", mode, "fast, bruteforce or crosscheck")
        ->check(CLI::IsMember({"fast", "bruteforce", "crosscheck"}));
    check->add_flag("--json", json_out, "canonical JSON report");
    check->add_option("--cap-atoms", cap_atoms, "algebra-oracle atom cap")
        ->envname("TEAMIND_CAP_ATOMS")
        ->check(CLI::PositiveNumber);

    CLI::App* cross = app.add_subcommand("crosscheck", "run every route of the reduction chain");
    cross->add_option("atom", atom_text, "atom, e.g. \"x _||_{z} y\"")->required();
    cross->add_option("--team", team_path, "team file")->required()->check(CLI::ExistingFile);
    cross->add_option("--format", format_flag, "csv or json (default: by extension)")
        ->check(CLI::IsMember({"csv", "json"}));
    cross->add_flag("--json", json_out, "canonical JSON report");
    cross->add_option("--cap-atoms", cap_atoms, "algebra-oracle atom cap")
        ->envname("TEAMIND_CAP_ATOMS")
        ->check(CLI::PositiveNumber);

    CLI::App* aba = app.add_subcommand("aba", "atomless Boolean algebra workbench");
    aba->require_subcommand(1);
    CLI::App* split_cmd = aba->add_subcommand("split", "split a clopen set into disjoint pieces");
    split_cmd->add_option("a", a_text, "clopen literal, e.g. \"0,10\"")->required();
    split_cmd->add_option("-k,--pieces", k, "piece count")->check(CLI::PositiveNumber);
    split_cmd->add_flag("--json", json_out, "canonical JSON report");

    CLI::App* wit = aba->add_subcommand("witness", "dividing witness for a dependent pair");
    wit->add_option("a", a_text, "clopen literal")->required();
    wit->add_option("b", b_text, "clopen literal")->required();
    wit->add_option("--base", base_text, "';'-separated clopen literals");
    wit->add_option("-n,--length", n, "sequence length")->check(CLI::PositiveNumber);
    wit->add_option("--window", window, "indiscernibility window")->check(CLI::PositiveNumber);
    wit->add_flag("--json", json_out, "canonical JSON report");

    CLI::App* ext = aba->add_subcommand("extend", "nonforking extension along a sequence");
    ext->add_option("a", a_text, "clopen literal")->required();
    ext->add_option("--base", base_text, "';'-separated clopen literals");
    ext->add_option("--seq", seq_text, "';'-separated sequence, b_0 first")->required();
    ext->add_option("--window", window, "indiscernibility window")->check(CLI::PositiveNumber);
    ext->add_flag("--no-fallback", no_fallback, "fail instead of searching unsupported shapes");
    ext->add_flag("--json", json_out, "canonical JSON report");

    CLI::App* demo = aba->add_subcommand("atba-demo", "the atomic counterexample");
    demo->add_option("-m,--spare-atoms", demo_m, "spare atom count")->check(CLI::PositiveNumber);
    demo->add_option("-n,--length", demo_n, "sequence length")->check(CLI::PositiveNumber);
    demo->add_flag("--json", json_out, "canonical JSON report");

    CLI::App* bench = app.add_subcommand("bench", "generated-team EMVD throughput");
    bench->add_option("--seed", seed, "generator seed");
    bench->add_option("--groups", groups, "z-value count")->check(CLI::PositiveNumber);
    bench->add_option("--x-values", x_values, "x-value count")->check(CLI::PositiveNumber);
    bench->add_option("--y-values", y_values, "y-value count")->check(CLI::PositiveNumber);
    bench->add_option("--subsample", sub_rows, "subsample row count")->check(CLI::PositiveNumber);
    bench->add_flag("--json", json_out, "JSON report (includes timings)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (check->parsed()) {
            return run_check(team_path, format_flag, mode, atom_text, json_out, cap_atoms);
        }
        if (cross->parsed()) {
            return run_check(team_path, format_flag, "crosscheck", atom_text, json_out, cap_atoms);
        }
        if (aba->parsed()) {
            if (split_cmd->parsed()) return run_split(a_text, k, json_out);
            if (wit->parsed()) return run_witness(a_text, b_text, base_text, n, window, json_out);
            if (ext->parsed()) {
                return run_extend(a_text, base_text, seq_text, window, !no_fallback, json_out);
            }
            return run_atba(demo_m, demo_n, json_out);
        }
        return run_bench(seed, groups, x_values, y_values, sub_rows, json_out);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what();
        if (!e.expected().empty()) {
            std::cerr << "; expected:";
            for (const std::string& t : e.expected()) std::cerr << " " << t;
        }
        std::cerr << "\n";
        return exit_usage;
    } catch (const NotApplicableError& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return exit_violated;
    } catch (const UnsupportedShapeError& e) {
        std::cerr << "unsupported shape: " << e.what() << "\n";
        return exit_violated;
    } catch (const NotFoundError& e) {
        std::cerr << "not found: " << e.what() << "\n";
        return exit_violated;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
