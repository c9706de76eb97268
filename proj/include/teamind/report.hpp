#pragma once

#include <string>

#include "json.hpp"

#include "teamind/atba.hpp"
#include "teamind/checks.hpp"
#include "teamind/dividing.hpp"

namespace teamind {

/// JSON trees for the reports. nlohmann objects keep keys sorted, so the
/// canonical form falls out of emit_report. Canonical mode zeroes
/// stats.micros; identical inputs then yield byte-identical reports.
nlohmann::json report_json(const CheckReport& report, bool canonical);
nlohmann::json report_json(const ConsistencyReport& report, bool canonical);
nlohmann::json report_json(const AtbaReport& report);
nlohmann::json report_json(const DividingWitness& witness);
nlohmann::json sequence_json(const WitnessSequence& seq);

/// Canonical bytes: sorted keys, compact separators, UTF-8, one trailing
/// newline.
std::string emit_report(const nlohmann::json& report);

/// Human-readable forms. Witness rows are printed verbatim.
std::string report_text(const CheckReport& report);
std::string report_text(const ConsistencyReport& report);
std::string report_text(const AtbaReport& report);

}  // namespace teamind
