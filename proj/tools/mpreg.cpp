// mpreg: cohomology tables, regularity, ACM and splitting-criterion checks.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mpreg/cohomology.hpp"
#include "mpreg/dsl.hpp"
#include "mpreg/errors.hpp"
#include "mpreg/harness.hpp"
#include "mpreg/regularity.hpp"
#include "mpreg/serialize.hpp"
#include "mpreg/splitting.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitPrecondition = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::pair<int, int>> parse_twist_range(const std::string& text, int s) {
  std::vector<std::pair<int, int>> box;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    const std::size_t dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        const int v = std::stoi(part);
        box.emplace_back(v, v);
      } else {
        box.emplace_back(std::stoi(part.substr(0, dots)), std::stoi(part.substr(dots + 2)));
      }
    } catch (const std::logic_error&) {
      throw UsageError("malformed --twist-range component '" + part + "'");
    }
    if (box.back().first > box.back().second) throw UsageError("empty --twist-range component '" + part + "'");
  }
  if (box.size() == 1) box.resize(static_cast<std::size_t>(s), box.front());
  if (static_cast<int>(box.size()) != s) {
    throw UsageError("--twist-range needs 1 or " + std::to_string(s) + " ranges, got " + std::to_string(box.size()));
  }
  return box;
}

int default_jobs() {
  if (const char* env = std::getenv("MPREG_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::logic_error&) {
      throw UsageError(std::string("MPREG_JOBS is not an integer: '") + env + "'");
    }
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology and splitting criteria for decomposable bundles on products of projective spaces"};
  app.require_subcommand(1);

  std::string space_text;
  std::string bundle_text;
  std::string twist_range = "-2..2";
  std::string definition = "paper";
  std::string theorem;
  std::string format = "json";
  std::string config_path;
  int jobs = 0;
  bool no_timing = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--space", space_text, "Space, e.g. P2xP3")->required();
    cmd->add_option("--bundle", bundle_text, "Bundle, e.g. \"O(0,1) + O(0)*W1(2)\"")->required();
  };
  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed));
  };

  CLI::App* cohomology = app.add_subcommand("cohomology", "Table of h^i(E(t)) over a twist box");
  add_input(cohomology);
  cohomology->add_option("--twist-range", twist_range, "A..B, or one A..B per factor separated by commas");
  add_format(cohomology, {"json", "text", "csv"});

  CLI::App* reg_cmd = app.add_subcommand("reg", "Least balanced regularity index");
  add_input(reg_cmd);
  reg_cmd->add_option("--definition", definition, "paper or hw")->check(CLI::IsMember({"paper", "hw"}));
  add_format(reg_cmd, {"json", "text"});

  CLI::App* acm = app.add_subcommand("acm", "Arithmetically Cohen-Macaulay test");
  add_input(acm);
  add_format(acm, {"json"});

  CLI::App* check = app.add_subcommand("check", "Evaluate a splitting criterion and compare with the structure");
  add_input(check);
  check->add_option("--theorem", theorem, "T1 T2 C1 C2 T0 P4 T3 T2B T4 P4B")->required();
  add_format(check, {"json", "text"});

  CLI::App* classify = app.add_subcommand("classify", "Structural membership in a theorem's split form");
  add_input(classify);
  classify->add_option("--theorem", theorem, "Theorem id")->required();
  add_format(classify, {"json"});

  CLI::App* verify = app.add_subcommand("verify-paper", "Run every applicable criterion over an enumerated family");
  verify->add_option("--config", config_path, "Enumeration config file")->required();
  verify->add_option("--jobs", jobs, "Worker threads (default: MPREG_JOBS or 1)")->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", no_timing, "Omit wall-clock fields");
  add_format(verify, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      mpreg::EnumerationConfig config = mpreg::parse_config(read_file(config_path));
      config.jobs = jobs > 0 ? jobs : default_jobs();
      const mpreg::RunReport report = mpreg::verify_paper(config);
      if (format == "text") {
        std::cout << mpreg::run_report_text(report);
      } else {
        std::cout << mpreg::run_report_json(report, !no_timing) << '\n';
      }
      return report.passed() ? 0 : kExitInconsistent;
    }

    const auto [space, bundle] = mpreg::parse_bundle(space_text, bundle_text);

    if (*cohomology) {
      const auto table = mpreg::cohomology_table(bundle, parse_twist_range(twist_range, space.size()));
      if (format == "csv") {
        std::cout << mpreg::table_csv(table);
      } else if (format == "text") {
        std::cout << mpreg::table_text(table);
      } else {
        std::cout << mpreg::table_json(table) << '\n';
      }
      return 0;
    }
    if (*reg_cmd) {
      const auto report = mpreg::reg(bundle, mpreg::parse_definition(definition));
      std::cout << (format == "text" ? mpreg::regularity_text(bundle, report)
                                     : mpreg::regularity_json(bundle, report) + "\n");
      return 0;
    }
    if (*acm) {
      const auto witness = mpreg::acm_witness(bundle);
      std::cout << mpreg::acm_json(bundle, !witness.has_value(), witness) << '\n';
      return 0;
    }
    const mpreg::TheoremId id = mpreg::parse_theorem_id(theorem);
    if (*classify) {
      std::cout << mpreg::classify_json(id, bundle, mpreg::classify_form(bundle, id)) << '\n';
      return 0;
    }
    if (*check) {
      const mpreg::TheoremVerdict verdict = mpreg::verify_theorem(bundle, id);
      std::cout << (format == "text" ? mpreg::verdict_text(verdict) : mpreg::verdict_json(verdict) + "\n");
      if (!verdict.applicable) {
        std::cerr << "mpreg: precondition violated: " << verdict.note << '\n';
        return kExitPrecondition;
      }
      const bool detector_ok = !verdict.detector_agrees || *verdict.detector_agrees;
      return verdict.consistent && detector_ok ? 0 : kExitInconsistent;
    }
  } catch (const mpreg::ParseError& e) {
    std::cerr << "mpreg: parse error at " << e.position() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "mpreg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mpreg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mpreg::PreconditionError& e) {
    std::cerr << "mpreg: precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const mpreg::UnsupportedAtomError& e) {
    std::cerr << "mpreg: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "mpreg: internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
