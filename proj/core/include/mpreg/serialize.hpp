#pragma once

#include <string>

#include "mpreg/cohomology.hpp"
#include "mpreg/harness.hpp"
#include "mpreg/regularity.hpp"
#include "mpreg/splitting.hpp"

namespace mpreg {

// JSON documents are returned as compact, deterministically ordered text.

std::string table_json(const CohomologyTable& table);
std::string table_csv(const CohomologyTable& table);
std::string table_text(const CohomologyTable& table);

std::string regularity_json(const Bundle& bundle, const RegularityReport& report);
std::string regularity_text(const Bundle& bundle, const RegularityReport& report);

std::string acm_json(const Bundle& bundle, bool acm, const std::optional<Witness>& witness);

std::string verdict_json(const TheoremVerdict& verdict);
std::string verdict_text(const TheoremVerdict& verdict);

std::string classify_json(TheoremId theorem, const Bundle& bundle, bool form);

/// with_timing = false drops wall-clock fields so identical configs give identical bytes.
std::string run_report_json(const RunReport& report, bool with_timing = true);
std::string run_report_text(const RunReport& report);

}  // namespace mpreg
