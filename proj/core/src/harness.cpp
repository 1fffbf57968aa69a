#include "mpreg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "mpreg/cohomology.hpp"
#include "mpreg/dsl.hpp"
#include "mpreg/errors.hpp"
#include "mpreg/regularity.hpp"

namespace mpreg {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : value) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct ConfigLine {
  std::size_t offset;
  std::string key;
  std::string value;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Kind::Syntax, offset, "config key '" + key + "': " + what);
  }

  int integer() const {
    try {
      std::size_t used = 0;
      const int v = std::stoi(value, &used);
      if (used != value.size()) fail("expected an integer, got '" + value + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("expected an integer, got '" + value + "'");
    }
  }

  bool boolean() const {
    if (value == "true" || value == "on" || value == "yes" || value == "1") return true;
    if (value == "false" || value == "off" || value == "no" || value == "0") return false;
    fail("expected a boolean, got '" + value + "'");
  }

  std::pair<int, int> range() const {
    const std::size_t dots = value.find("..");
    if (dots == std::string::npos) fail("expected lo..hi, got '" + value + "'");
    try {
      std::size_t used_lo = 0;
      std::size_t used_hi = 0;
      const std::string lo_text = trim(value.substr(0, dots));
      const std::string hi_text = trim(value.substr(dots + 2));
      const int lo = std::stoi(lo_text, &used_lo);
      const int hi = std::stoi(hi_text, &used_hi);
      if (used_lo != lo_text.size() || used_hi != hi_text.size()) fail("malformed range '" + value + "'");
      if (lo > hi) fail("empty range '" + value + "'");
      return {lo, hi};
    } catch (const std::logic_error&) {
      fail("malformed range '" + value + "'");
    }
  }
};

std::vector<Atom> factor_atoms(int n, const EnumerationConfig& config) {
  std::vector<Atom> atoms;
  for (int d = config.degree_lo; d <= config.degree_hi; ++d) atoms.push_back(Atom::line(d));
  if (config.cotangent) {
    for (int p = 1; p <= n - 1; ++p) {
      for (int t = config.cotangent_lo; t <= config.cotangent_hi; ++t) atoms.push_back(Atom::cotangent(n, p, t));
    }
  }
  return atoms;
}

unsigned long long multichoose(unsigned long long n, int k) {
  // C(n + k - 1, k)
  unsigned long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n + static_cast<unsigned long long>(j) - 1) / static_cast<unsigned long long>(j);
  return r;
}

std::vector<TheoremId> active_theorems(const EnumerationConfig& config) {
  return config.theorems.empty() ? all_theorems() : config.theorems;
}

std::vector<Bundle> family(const Space& space, const EnumerationConfig& config) {
  return config.menu_only ? menu_bundles(space) : enumerate_bundles(space, config);
}

}  // namespace

EnumerationConfig parse_config(std::string_view text) {
  EnumerationConfig config;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string body = trim(line);
    if (!body.empty()) {
      const std::size_t eq = body.find('=');
      if (eq == std::string::npos) {
        throw ParseError(ParseError::Kind::Syntax, offset, "config line without '=': '" + body + "'");
      }
      const ConfigLine entry{offset, trim(body.substr(0, eq)), trim(body.substr(eq + 1))};
      const std::string& key = entry.key;
      if (key == "spaces") {
        config.spaces.clear();
        for (const std::string& item : split_list(entry.value)) {
          try {
            config.spaces.push_back(parse_space(item));
          } catch (const ParseError& e) {
            throw ParseError(e.kind(), offset, "config key 'spaces': " + std::string(e.what()));
          }
        }
        if (config.spaces.empty()) entry.fail("no spaces listed");
      } else if (key == "degrees") {
        std::tie(config.degree_lo, config.degree_hi) = entry.range();
      } else if (key == "cotangent") {
        config.cotangent = entry.boolean();
      } else if (key == "cotangent_twists") {
        std::tie(config.cotangent_lo, config.cotangent_hi) = entry.range();
      } else if (key == "max_summands") {
        config.max_summands = entry.integer();
        if (config.max_summands < 1) entry.fail("must be at least 1");
      } else if (key == "theorems") {
        config.theorems.clear();
        for (const std::string& item : split_list(entry.value)) {
          try {
            config.theorems.push_back(parse_theorem_id(item));
          } catch (const std::invalid_argument& e) {
            entry.fail(e.what());
          }
        }
      } else if (key == "jobs") {
        config.jobs = entry.integer();
        if (config.jobs < 1) entry.fail("must be at least 1");
      } else if (key == "menu_only") {
        config.menu_only = entry.boolean();
      } else if (key == "witness_samples") {
        config.witness_samples = entry.integer();
        if (config.witness_samples < 0) entry.fail("must be non-negative");
      } else if (key == "findings") {
        config.findings = entry.boolean();
      } else {
        entry.fail("unknown key");
      }
    }
    offset = end + 1;
  }
  if (config.spaces.empty()) throw ParseError(ParseError::Kind::Syntax, 0, "config needs a 'spaces' entry");
  return config;
}

std::vector<BoxSummand> enumerate_summands(const Space& space, const EnumerationConfig& config) {
  std::vector<std::vector<Atom>> per_factor;
  for (int n : space.factors()) per_factor.push_back(factor_atoms(n, config));

  std::vector<BoxSummand> out;
  std::vector<std::size_t> idx(per_factor.size(), 0);
  if (std::any_of(per_factor.begin(), per_factor.end(), [](const auto& v) { return v.empty(); })) return out;
  while (true) {
    std::vector<Atom> atoms;
    for (std::size_t j = 0; j < idx.size(); ++j) atoms.push_back(per_factor[j][idx[j]]);
    out.emplace_back(std::move(atoms));
    std::size_t j = idx.size();
    while (j > 0 && idx[j - 1] + 1 == per_factor[j - 1].size()) {
      idx[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
    ++idx[j - 1];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Bundle> enumerate_bundles(const Space& space, const EnumerationConfig& config) {
  const std::vector<BoxSummand> summands = enumerate_summands(space, config);
  std::vector<Bundle> out;
  const std::size_t n = summands.size();
  for (int size = 1; size <= config.max_summands && n > 0; ++size) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(size), 0);
    while (true) {
      std::vector<BoxSummand> picked;
      for (std::size_t k : idx) picked.push_back(summands[k]);
      out.emplace_back(space, std::move(picked));
      // next non-decreasing index tuple
      std::size_t j = idx.size();
      while (j > 0 && idx[j - 1] + 1 == n) --j;
      if (j == 0) break;
      const std::size_t v = idx[j - 1] + 1;
      for (std::size_t q = j - 1; q < idx.size(); ++q) idx[q] = v;
    }
  }
  return out;
}

std::vector<Bundle> menu_bundles(const Space& space) {
  std::vector<Bundle> out;
  for (const SummandTag& tag : menu_tags(space)) out.emplace_back(space, std::vector<BoxSummand>{tag.shape(space)});
  return out;
}

unsigned long long enumeration_count(const EnumerationConfig& config) {
  unsigned long long total = 0;
  for (const Space& space : config.spaces) {
    if (config.menu_only) {
      total += menu_tags(space).size();
      continue;
    }
    unsigned long long summands = 1;
    for (int n : space.factors()) summands *= factor_atoms(n, config).size();
    for (int k = 1; k <= config.max_summands; ++k) total += multichoose(summands, k);
  }
  return total;
}

long long RunReport::inconsistent_total() const {
  long long total = 0;
  for (const auto& [id, s] : stats) total += s.inconsistent + s.detector_disagreements;
  return total;
}

AcmCheck acm_check(const Space& space, int degree_lo, int degree_hi) {
  AcmCheck check;
  check.space = to_string(space);
  const int s = space.size();
  std::vector<int> a(static_cast<std::size_t>(s), degree_lo);
  if (degree_lo > degree_hi) return check;
  while (true) {
    const bool brute = is_acm(line_bundle(space, a));
    ++check.checked;
    if (brute != acm_closed_form_line(space, a)) check.closed_form_mismatches.push_back(a);
    if (s == 2 && brute != acm_printed_rule(space, a)) {
      ++check.printed_rule_disagreements;
      if (check.printed_rule_samples.size() < 8) check.printed_rule_samples.push_back(a);
    }
    int j = s;
    while (j > 0 && a[static_cast<std::size_t>(j - 1)] == degree_hi) {
      a[static_cast<std::size_t>(j - 1)] = degree_lo;
      --j;
    }
    if (j == 0) break;
    ++a[static_cast<std::size_t>(j - 1)];
  }
  return check;
}

ComparisonCheck comparison_check(const Space& space, const std::vector<Bundle>& bundles) {
  if (space.size() != 2) throw PreconditionError("the regularity comparison is stated for s = 2");
  ComparisonCheck check;
  check.space = to_string(space);
  const int n = space[0];
  const int m = space[1];
  const MultiTwist literal{-m + 1, -n + 1};
  const MultiTwist swapped{-n + 1, -m + 1};
  constexpr int kGrid = 2;
  for (const Bundle& bundle : bundles) {
    ++check.bundles;
    for (int p0 = -kGrid; p0 <= kGrid; ++p0) {
      for (int p1 = -kGrid; p1 <= kGrid; ++p1) {
        const MultiTwist p{p0, p1};
        const bool hw = is_hw_regular_at(bundle, p);
        if (hw && !is_regular_at(bundle, p)) ++check.hw_implies_paper_violations;
        if (!hw && is_regular_at(bundle, p + literal)) ++check.literal_shift_violations;
        if (!hw && is_regular_at(bundle, p + swapped)) ++check.swapped_shift_violations;
      }
    }
  }
  return check;
}

RunReport verify_paper(const EnumerationConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.theorems = active_theorems(config);
  for (TheoremId id : report.theorems) report.stats[id];
  const std::size_t samples = static_cast<std::size_t>(std::max(0, config.witness_samples));

  for (const Space& space : config.spaces) {
    const std::vector<Bundle> bundles = family(space, config);
    std::vector<std::vector<TheoremVerdict>> results(bundles.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      while (true) {
        const std::size_t b = next.fetch_add(1);
        if (b >= bundles.size()) return;
        try {
          std::vector<TheoremVerdict> verdicts;
          for (TheoremId id : report.theorems) verdicts.push_back(verify_theorem(bundles[b], id));
          results[b] = std::move(verdicts);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next = bundles.size();
        }
      }
    };
    const int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
      for (std::thread& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    const std::string space_name = to_string(space);
    std::map<TheoremId, std::size_t> taken;
    std::map<TheoremId, std::size_t> detector_taken;
    for (std::size_t b = 0; b < bundles.size(); ++b) {
      for (const TheoremVerdict& v : results[b]) {
        TheoremStats& st = report.stats[v.theorem];
        if (!v.applicable) {
          ++st.not_applicable;
          continue;
        }
        ++st.applicable;
        if (v.consistent) {
          ++st.consistent;
        } else {
          ++st.inconsistent;
          if (taken[v.theorem]++ < samples) report.inconsistent_samples.push_back({space_name, to_dsl(bundles[b]), v});
        }
        if (v.detector_agrees.has_value() && !*v.detector_agrees) {
          ++st.detector_disagreements;
          if (detector_taken[v.theorem]++ < samples) {
            report.detector_samples.push_back({space_name, to_dsl(bundles[b]), v});
          }
        }
      }
    }
    report.bundles += bundles.size();

    if (config.findings) {
      report.acm.push_back(acm_check(space, config.degree_lo, config.degree_hi));
      if (space.size() == 2) report.comparison.push_back(comparison_check(space, bundles));
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace mpreg
