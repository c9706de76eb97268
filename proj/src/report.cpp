#include "teamind/report.hpp"

#include <sstream>

#include "teamind/clopen.hpp"

namespace teamind {

namespace {

nlohmann::json witness_json(const CheckWitness& witness) {
    nlohmann::json values;
    const char* names[] = {"t0", "t1"};
    for (std::size_t i = 0; i < witness.rows.size() && i < 2; ++i) {
        values[names[i]] = witness.row_values[i];
    }
    return nlohmann::json{{"rows", witness.rows}, {"values", values}};
}

nlohmann::json stats_json(const CheckStats& stats, bool canonical) {
    return nlohmann::json{{"rows", stats.rows},
                          {"groups", stats.groups},
                          {"micros", canonical ? 0 : stats.micros}};
}

nlohmann::json oracle_json(const OracleVerdicts& oracles) {
    return nlohmann::json{{"topological", oracles.topological},
                          {"referee", oracles.referee},
                          {"pushout", oracles.pushout}};
}

std::string join_values(const std::vector<std::string>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += values[i];
    }
    return out;
}

}  // namespace

nlohmann::json report_json(const CheckReport& report, bool canonical) {
    nlohmann::json j;
    j["atom"] = print_atom(report.atom);
    j["satisfied"] = report.satisfied;
    j["witness"] = report.witness ? witness_json(*report.witness) : nlohmann::json(nullptr);
    j["stats"] = stats_json(report.stats, canonical);
    return j;
}

nlohmann::json report_json(const ConsistencyReport& report, bool canonical) {
    nlohmann::json routes;
    routes["emvd_fast"] = report.emvd_fast;
    routes["emvd_bruteforce"] = report.emvd_bruteforce;
    routes["tuple_independence"] = report.tuple_ind;
    routes["algebra_fast"] = report.algebra_fast;
    routes["algebra_oracles"] =
        report.oracles ? oracle_json(*report.oracles) : nlohmann::json("skipped");
    nlohmann::json j;
    j["atom"] = print_atom(report.atom);
    j["routes"] = routes;
    j["subalgebra"] = {{"xz", report.subalgebra_xz_ok}, {"yz", report.subalgebra_yz_ok}};
    j["agreement"] = report.agreement;
    j["stats"] = stats_json(report.stats, canonical);
    return j;
}

nlohmann::json report_json(const AtbaReport& report) {
    nlohmann::json candidates = nlohmann::json::array();
    for (const AtbaCandidate& c : report.candidates) {
        candidates.push_back({{"q0", c.q0}, {"q1", c.q1}, {"fails_at", c.fails_at}});
    }
    nlohmann::json routes = oracle_json(report.oracles);
    routes["fast"] = report.independent;
    return nlohmann::json{{"m", report.m},
                          {"n", report.n},
                          {"independent", report.independent},
                          {"routes", routes},
                          {"candidates", candidates},
                          {"all_fail", report.all_fail}};
}

nlohmann::json report_json(const DividingWitness& witness) {
    nlohmann::json j;
    j["atom"] = print_clopen(witness.atom);
    j["a_star"] = print_clopen(witness.a_star);
    j["b_star"] = print_clopen(witness.b_star);
    j["seq"] = sequence_json(witness.seq);
    j["certificate"] = {
        {"constraints", {"x <= b_0", "x <= b_1", "x != 0"}},
        {"b0_meet_b1", print_clopen(meet(witness.seq.seq[0], witness.seq.seq[1]))},
        {"inconsistent", meet(witness.seq.seq[0], witness.seq.seq[1]).is_zero()}};
    return j;
}

nlohmann::json sequence_json(const WitnessSequence& seq) {
    nlohmann::json base = nlohmann::json::array();
    for (const ClopenSet& c : seq.base) base.push_back(print_clopen(c));
    nlohmann::json elems = nlohmann::json::array();
    for (const ClopenSet& c : seq.seq) elems.push_back(print_clopen(c));
    return nlohmann::json{
        {"base", base},
        {"seq", elems},
        {"kind", seq.kind == SequenceKind::dividing_witness ? "dividing_witness"
                                                            : "extension_input"}};
}

std::string emit_report(const nlohmann::json& report) {
    return report.dump() + "\n";
}

std::string report_text(const CheckReport& report) {
    std::ostringstream out;
    out << print_atom(report.atom) << ": " << (report.satisfied ? "satisfied" : "violated")
        << "\n";
    if (report.witness) {
        for (std::size_t i = 0; i < report.witness->rows.size(); ++i) {
            out << "  row " << report.witness->rows[i] << ": "
                << join_values(report.witness->row_values[i]) << "\n";
        }
    }
    out << "  rows=" << report.stats.rows << " groups=" << report.stats.groups
        << " micros=" << report.stats.micros << "\n";
    return out.str();
}

std::string report_text(const ConsistencyReport& report) {
    auto verdict = [](bool v) { return v ? "independent" : "dependent"; };
    std::ostringstream out;
    out << print_atom(report.atom) << ": "
        << (report.emvd_fast ? "satisfied" : "violated") << "\n";
    out << "  emvd_fast: " << verdict(report.emvd_fast) << "\n";
    out << "  emvd_bruteforce: " << verdict(report.emvd_bruteforce) << "\n";
    out << "  tuple_independence: " << verdict(report.tuple_ind) << "\n";
    out << "  algebra_fast: " << verdict(report.algebra_fast) << "\n";
    if (report.oracles) {
        out << "  algebra_oracles: topological=" << verdict(report.oracles->topological)
            << " referee=" << verdict(report.oracles->referee)
            << " pushout=" << verdict(report.oracles->pushout) << "\n";
    } else {
        out << "  algebra_oracles: skipped\n";
    }
    out << "  subalgebra: xz=" << (report.subalgebra_xz_ok ? "ok" : "FAIL")
        << " yz=" << (report.subalgebra_yz_ok ? "ok" : "FAIL") << "\n";
    out << "  agreement: " << (report.agreement ? "true" : "FALSE") << "\n";
    return out.str();
}

std::string report_text(const AtbaReport& report) {
    std::ostringstream out;
    out << "atba demo: m=" << report.m << " n=" << report.n << "\n";
    out << "  independent: " << (report.independent ? "true" : "false")
        << " (topological=" << (report.oracles.topological ? "true" : "false")
        << " referee=" << (report.oracles.referee ? "true" : "false")
        << " pushout=" << (report.oracles.pushout ? "true" : "false") << ")\n";
    out << "  candidates: " << report.candidates.size() << "\n";
    for (const AtbaCandidate& c : report.candidates) {
        out << "    a' = atom " << c.q0 << " v atom " << c.q1;
        if (c.fails_at) {
            out << " misses b_" << c.fails_at << "\n";
        } else {
            out << " never fails\n";
        }
    }
    out << "  all candidates fail: " << (report.all_fail ? "true" : "FALSE") << "\n";
    return out.str();
}

}  // namespace teamind
