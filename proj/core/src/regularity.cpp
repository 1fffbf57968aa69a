#include "mpreg/regularity.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "mpreg/cohomology.hpp"
#include "mpreg/errors.hpp"

namespace mpreg {

std::string to_string(Definition definition) {
  return definition == Definition::Paper ? "paper" : "hw";
}

Definition parse_definition(const std::string& text) {
  if (text == "paper") return Definition::Paper;
  if (text == "hw" || text == "hoffmann-wang") return Definition::HoffmannWang;
  throw std::invalid_argument("unknown regularity definition '" + text + "' (expected paper|hw)");
}

namespace {

// Calls fn(k) for every k in prod [-n_j, 0].
template <typename Fn>
void for_each_box_vector(const Space& space, Fn&& fn) {
  const int s = space.size();
  std::vector<int> k(static_cast<std::size_t>(s), 0);
  for (int j = 0; j < s; ++j) k[static_cast<std::size_t>(j)] = -space[j];
  while (true) {
    fn(MultiTwist(k));
    int j = s - 1;
    while (j >= 0 && k[static_cast<std::size_t>(j)] == 0) {
      k[static_cast<std::size_t>(j)] = -space[j];
      --j;
    }
    if (j < 0) return;
    ++k[static_cast<std::size_t>(j)];
  }
}

void require_two_factors(const Bundle& bundle) {
  if (bundle.space().size() != 2) {
    throw PreconditionError("Hoffmann-Wang regularity is defined on P^n x P^m only (s = 2)");
  }
}

constexpr int kScanLimit = 1 << 16;

}  // namespace

bool is_regular_at(const Bundle& bundle, const MultiTwist& p) {
  bool regular = true;
  for_each_box_vector(bundle.space(), [&](const MultiTwist& k) {
    if (!regular) return;
    const int i = -k.sum();
    if (i >= 1 && h_bundle_nonzero(bundle, p + k, i)) regular = false;
  });
  return regular;
}

bool is_hw_regular_at(const Bundle& bundle, const MultiTwist& p) {
  require_two_factors(bundle);
  const int d = bundle.space().dim();
  for (int i = 1; i <= d; ++i) {
    for (int j = -i; j <= -1; ++j) {
      if (h_bundle_nonzero(bundle, p + MultiTwist{j, -i - 1 - j}, i)) return false;
    }
  }
  return true;
}

bool is_regular_at(const Bundle& bundle, const MultiTwist& p, Definition definition) {
  return definition == Definition::Paper ? is_regular_at(bundle, p) : is_hw_regular_at(bundle, p);
}

std::vector<Failure> regularity_failures(const Bundle& bundle, const MultiTwist& p, Definition definition) {
  std::vector<Failure> out;
  if (definition == Definition::Paper) {
    for_each_box_vector(bundle.space(), [&](const MultiTwist& k) {
      const int i = -k.sum();
      if (i < 1) return;
      const MultiTwist at = p + k;
      if (h_bundle_nonzero(bundle, at, i)) out.push_back({i, k, h_bundle(bundle, at, i)});
    });
    std::stable_sort(out.begin(), out.end(), [](const Failure& a, const Failure& b) { return a.i < b.i; });
    return out;
  }
  require_two_factors(bundle);
  const int d = bundle.space().dim();
  for (int i = 1; i <= d; ++i) {
    for (int j = -i; j <= -1; ++j) {
      const MultiTwist k{j, -i - 1 - j};
      const MultiTwist at = p + k;
      if (h_bundle_nonzero(bundle, at, i)) out.push_back({i, k, h_bundle(bundle, at, i)});
    }
  }
  return out;
}

int reg_lower_bound(const Bundle& bundle) {
  const int d = bundle.space().dim();
  int bound = INT_MAX;
  for (const BoxSummand& s : bundle.summands()) {
    int lowest = INT_MAX;
    for (const Atom& a : s.atoms()) lowest = std::min(lowest, a.twist());
    bound = std::min(bound, -lowest - d);
  }
  return bound;
}

RegularityReport reg(const Bundle& bundle, Definition definition) {
  const int s = bundle.space().size();
  auto regular = [&](int p) { return is_regular_at(bundle, MultiTwist::balanced(s, p), definition); };

  int p = reg_lower_bound(bundle);
  // The bound is certified only if the scan start is not yet regular; step down otherwise.
  for (int guard = 0; regular(p - 1); ++guard) {
    if (guard > kScanLimit) throw FindingError("regularity appears to be -infinity");
    --p;
  }
  for (int guard = 0; !regular(p); ++guard) {
    if (guard > kScanLimit) throw FindingError("regularity scan did not terminate");
    ++p;
  }

  RegularityReport report{definition, p, regularity_failures(bundle, MultiTwist::balanced(s, p - 1), definition), false};
  if (!regular(p + 1)) throw FindingError("regularity is not monotone at p+1");
  report.monotone_checked = true;
  return report;
}

}  // namespace mpreg
