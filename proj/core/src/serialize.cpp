#include "mpreg/serialize.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "mpreg/dsl.hpp"

namespace mpreg {

namespace {

using nlohmann::ordered_json;

ordered_json ints(const std::vector<int>& v) {
  ordered_json a = ordered_json::array();
  for (int x : v) a.push_back(x);
  return a;
}

ordered_json witness_json(const Witness& w) {
  return ordered_json{{"i", w.i}, {"k", ints(w.k.values())}, {"t", w.t}, {"dim", to_decimal(w.dim)}};
}

ordered_json failure_json(const Failure& f) {
  return ordered_json{{"i", f.i}, {"k", ints(f.k.values())}, {"dim", to_decimal(f.dim)}};
}

ordered_json verdict_object(const TheoremVerdict& v) {
  ordered_json out;
  out["theorem"] = to_string(v.theorem);
  out["applicable"] = v.applicable;
  if (!v.note.empty()) out["note"] = v.note;
  if (!v.applicable) return out;
  out["condition"] = v.condition_holds;
  out["form"] = v.form_holds;
  out["consistent"] = v.consistent;
  ordered_json ws = ordered_json::array();
  for (const Witness& w : v.witnesses) ws.push_back(witness_json(w));
  out["witnesses"] = ws;
  ordered_json tags = ordered_json::array();
  for (const SummandTag& t : v.detected) tags.push_back(t.name());
  out["detected"] = tags;
  if (v.detector_agrees) out["detector_agrees"] = *v.detector_agrees;
  return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t j = 0; j < v.size(); ++j) out += (j ? sep : "") + std::to_string(v[j]);
  return out;
}

}  // namespace

std::string table_json(const CohomologyTable& table) {
  ordered_json out;
  out["space"] = ints(table.bundle.space().factors());
  out["bundle"] = to_dsl(table.bundle);
  ordered_json entries = ordered_json::array();
  for (const auto& [key, dim] : table.entries) {
    entries.push_back(ordered_json{{"i", key.first}, {"t", ints(key.second.values())}, {"dim", to_decimal(dim)}});
  }
  out["entries"] = entries;
  return out.dump();
}

std::string table_csv(const CohomologyTable& table) {
  std::ostringstream os;
  os << "i";
  for (int j = 1; j <= table.bundle.space().size(); ++j) os << ",t" << j;
  os << ",dim\n";
  for (const auto& [key, dim] : table.entries) {
    os << key.first << ',' << join_ints(key.second.values(), ",") << ',' << to_decimal(dim) << '\n';
  }
  return os.str();
}

std::string table_text(const CohomologyTable& table) {
  std::ostringstream os;
  os << to_string(table.bundle.space()) << "  " << to_dsl(table.bundle) << '\n';
  if (table.entries.empty()) os << "  (all groups vanish on this box)\n";
  for (const auto& [key, dim] : table.entries) {
    os << "  h^" << key.first << "(t = (" << join_ints(key.second.values(), ", ") << ")) = " << to_decimal(dim)
       << '\n';
  }
  return os.str();
}

std::string regularity_json(const Bundle& bundle, const RegularityReport& report) {
  ordered_json out;
  out["space"] = ints(bundle.space().factors());
  out["bundle"] = to_dsl(bundle);
  out["definition"] = to_string(report.definition);
  out["value"] = report.value ? ordered_json(*report.value) : ordered_json(nullptr);
  ordered_json fs = ordered_json::array();
  for (const Failure& f : report.failures) fs.push_back(failure_json(f));
  out["failures"] = fs;
  out["monotone_checked"] = report.monotone_checked;
  return out.dump();
}

std::string regularity_text(const Bundle& bundle, const RegularityReport& report) {
  std::ostringstream os;
  os << to_string(bundle.space()) << "  " << to_dsl(bundle) << '\n';
  os << "  Reg (" << to_string(report.definition) << ") = ";
  if (report.value) {
    os << *report.value << '\n';
  } else {
    os << "undefined\n";
  }
  for (const Failure& f : report.failures) {
    os << "  fails at p-1: h^" << f.i << " with k = (" << join_ints(f.k.values(), ", ") << ") is "
       << to_decimal(f.dim) << '\n';
  }
  return os.str();
}

std::string acm_json(const Bundle& bundle, bool acm, const std::optional<Witness>& witness) {
  ordered_json out;
  out["space"] = ints(bundle.space().factors());
  out["bundle"] = to_dsl(bundle);
  out["acm"] = acm;
  out["witness"] = witness ? witness_json(*witness) : ordered_json(nullptr);
  return out.dump();
}

std::string verdict_json(const TheoremVerdict& verdict) { return verdict_object(verdict).dump(); }

std::string verdict_text(const TheoremVerdict& v) {
  std::ostringstream os;
  os << to_string(v.theorem) << ": ";
  if (!v.applicable) {
    os << "not applicable (" << v.note << ")\n";
    return os.str();
  }
  os << "condition " << (v.condition_holds ? "holds" : "fails") << ", form " << (v.form_holds ? "holds" : "fails")
     << ", " << (v.consistent ? "consistent" : "INCONSISTENT") << '\n';
  for (const Witness& w : v.witnesses) {
    os << "  h^" << w.i << "(E((t..t) + (" << join_ints(w.k.values(), ", ") << "))) = " << to_decimal(w.dim)
       << " at t = " << w.t << '\n';
  }
  if (!v.detected.empty()) {
    os << "  detected:";
    for (const SummandTag& t : v.detected) os << ' ' << t.name();
    os << '\n';
  }
  if (v.detector_agrees && !*v.detector_agrees) os << "  detector disagrees with the summands\n";
  if (!v.note.empty()) os << "  note: " << v.note << '\n';
  return os.str();
}

std::string classify_json(TheoremId theorem, const Bundle& bundle, bool form) {
  ordered_json out;
  out["theorem"] = to_string(theorem);
  out["space"] = ints(bundle.space().factors());
  out["bundle"] = to_dsl(bundle);
  out["form"] = form;
  return out.dump();
}

std::string run_report_json(const RunReport& report, bool with_timing) {
  ordered_json out;
  out["bundles"] = report.bundles;
  ordered_json theorems = ordered_json::object();
  for (TheoremId id : report.theorems) {
    const TheoremStats& s = report.stats.at(id);
    theorems[to_string(id)] = ordered_json{{"applicable", s.applicable},
                                           {"not_applicable", s.not_applicable},
                                           {"consistent", s.consistent},
                                           {"inconsistent", s.inconsistent},
                                           {"detector_disagreements", s.detector_disagreements}};
  }
  out["theorems"] = theorems;
  out["inconsistent_total"] = report.inconsistent_total();
  out["passed"] = report.passed();

  auto samples = [](const std::vector<VerdictSample>& in) {
    ordered_json a = ordered_json::array();
    for (const VerdictSample& s : in) {
      a.push_back(ordered_json{{"space", s.space}, {"bundle", s.bundle}, {"verdict", verdict_object(s.verdict)}});
    }
    return a;
  };
  out["inconsistent_samples"] = samples(report.inconsistent_samples);
  out["detector_samples"] = samples(report.detector_samples);

  ordered_json acm = ordered_json::array();
  for (const AcmCheck& c : report.acm) {
    ordered_json mism = ordered_json::array();
    for (const auto& a : c.closed_form_mismatches) mism.push_back(ints(a));
    ordered_json printed = ordered_json::array();
    for (const auto& a : c.printed_rule_samples) printed.push_back(ints(a));
    acm.push_back(ordered_json{{"space", c.space},
                               {"checked", c.checked},
                               {"closed_form_mismatches", mism},
                               {"printed_rule_disagreements", c.printed_rule_disagreements},
                               {"printed_rule_samples", printed}});
  }
  ordered_json findings;
  findings["acm"] = acm;
  ordered_json cmp = ordered_json::array();
  for (const ComparisonCheck& c : report.comparison) {
    cmp.push_back(ordered_json{{"space", c.space},
                               {"bundles", c.bundles},
                               {"hw_implies_paper_violations", c.hw_implies_paper_violations},
                               {"literal_shift_violations", c.literal_shift_violations},
                               {"swapped_shift_violations", c.swapped_shift_violations}});
  }
  findings["comparison"] = cmp;
  out["findings"] = findings;
  if (with_timing) out["seconds"] = report.seconds;
  return out.dump();
}

std::string run_report_text(const RunReport& report) {
  std::ostringstream os;
  os << "bundles: " << report.bundles << '\n';
  for (TheoremId id : report.theorems) {
    const TheoremStats& s = report.stats.at(id);
    os << "  " << std::left << std::setw(4) << to_string(id) << " applicable " << s.applicable << ", consistent "
       << s.consistent << ", inconsistent " << s.inconsistent;
    if (s.detector_disagreements) os << ", detector disagreements " << s.detector_disagreements;
    os << '\n';
  }
  for (const VerdictSample& s : report.inconsistent_samples) {
    os << "  inconsistent: " << s.space << "  " << s.bundle << "  " << verdict_text(s.verdict);
  }
  for (const AcmCheck& c : report.acm) {
    os << "  acm " << c.space << ": checked " << c.checked << ", closed-form mismatches "
       << c.closed_form_mismatches.size();
    if (c.printed_rule_disagreements) os << ", printed-rule disagreements " << c.printed_rule_disagreements;
    os << '\n';
  }
  for (const ComparisonCheck& c : report.comparison) {
    os << "  comparison " << c.space << ": hw=>paper violations " << c.hw_implies_paper_violations
       << ", literal shift " << c.literal_shift_violations << ", swapped shift " << c.swapped_shift_violations
       << '\n';
  }
  os << (report.passed() ? "PASSED" : "FAILED") << " (" << std::fixed << std::setprecision(2) << report.seconds
     << " s)\n";
  return os.str();
}

}  // namespace mpreg
