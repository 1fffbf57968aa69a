#include "mpreg/cohomology.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace mpreg {

Dim h_line(int n, int d, int i) {
  if (i == 0 && d >= 0) return binomial(d + n, n);
  if (i == n && d <= -n - 1) return binomial(-d - 1, n);
  return 0;
}

Dim h_bott(int n, int p, int t, int i) {
  if (p < 1 || p > n - 1) throw std::invalid_argument("Bott formula needs 1 <= p <= n-1");
  if (i == 0 && t > p) return binomial(t + n - p, t) * binomial(t - 1, p);
  if (i == p && t == 0) return 1;
  if (i == n && t < p - n) return binomial(p - t, -t) * binomial(-t - 1, n - p);
  return 0;
}

int line_support(int n, int d) noexcept {
  if (d >= 0) return 0;
  if (d <= -n - 1) return n;
  return -1;
}

int bott_support(int n, int p, int t) noexcept {
  if (t > p) return 0;
  if (t == 0) return p;
  if (t < p - n) return n;
  return -1;
}

int atom_support(int n, const Atom& atom, int shift) noexcept {
  const int t = atom.twist() + shift;
  return atom.is_line() ? line_support(n, t) : bott_support(n, atom.p(), t);
}

Dim h_atom(int n, const Atom& atom, int shift, int i) {
  const int t = atom.twist() + shift;
  return atom.is_line() ? h_line(n, t, i) : h_bott(n, atom.p(), t, i);
}

namespace {

struct AtomKey {
  int n;
  int p;  // 0 for line atoms
  int t;
  bool operator==(const AtomKey&) const = default;
};

struct AtomKeyHash {
  std::size_t operator()(const AtomKey& k) const noexcept {
    std::uint64_t h = static_cast<std::uint32_t>(k.t);
    h = h * 1000003u ^ static_cast<std::uint32_t>(k.p);
    h = h * 1000003u ^ static_cast<std::uint32_t>(k.n);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace

const std::vector<Dim>& atom_cohomology(int n, const Atom& atom, int shift) {
  // Per-thread cache: no locking, and workers never share entries.
  thread_local std::unordered_map<AtomKey, std::vector<Dim>, AtomKeyHash> cache;
  const AtomKey key{n, atom.is_line() ? 0 : atom.p(), atom.twist() + shift};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Dim> v(static_cast<std::size_t>(n + 1));
  const int q = atom_support(n, atom, shift);
  if (q >= 0) v[static_cast<std::size_t>(q)] = h_atom(n, atom, shift, q);
  return cache.emplace(key, std::move(v)).first->second;
}

namespace {

std::vector<Dim> euler_chase(int n, int p, int t) {
  std::vector<Dim> line(static_cast<std::size_t>(n + 1));
  if (p == 0) {
    for (int q = 0; q <= n; ++q) line[static_cast<std::size_t>(q)] = h_line(n, t, q);
    return line;
  }
  // 0 -> A = Omega^p(t) -> B = O(t-p)^C(n+1,p) -> C = Omega^{p-1}(t) -> 0
  const Dim mult = binomial(n + 1, p);
  std::vector<Dim> b(static_cast<std::size_t>(n + 1));
  for (int q = 0; q <= n; ++q) b[static_cast<std::size_t>(q)] = mult * h_line(n, t - p, q);
  const std::vector<Dim> c = euler_chase(n, p - 1, t);

  int nonzero = 0;
  for (const Dim& x : c) nonzero += x != 0;
  if (nonzero > 1) throw std::logic_error("Euler chase: Omega^{p-1}(t) not concentrated in one degree");

  // H^q(B) -> H^q(C) is onto whenever both are nonzero: at q = 0 the Koszul complex is
  // exact on sections in positive degree, at q = n because H^{n+1}(A) = 0.
  std::vector<Dim> kernel(static_cast<std::size_t>(n + 1));
  std::vector<Dim> cokernel(static_cast<std::size_t>(n + 1));
  for (int q = 0; q <= n; ++q) {
    const Dim& bq = b[static_cast<std::size_t>(q)];
    const Dim& cq = c[static_cast<std::size_t>(q)];
    if (bq != 0 && cq != 0) {
      if (bq < cq) throw std::logic_error("Euler chase: connecting map cannot be surjective");
      kernel[static_cast<std::size_t>(q)] = bq - cq;
    } else {
      kernel[static_cast<std::size_t>(q)] = bq;
      cokernel[static_cast<std::size_t>(q)] = cq;
    }
  }
  std::vector<Dim> a(static_cast<std::size_t>(n + 1));
  for (int q = 0; q <= n; ++q) {
    a[static_cast<std::size_t>(q)] = kernel[static_cast<std::size_t>(q)];
    if (q > 0) a[static_cast<std::size_t>(q)] += cokernel[static_cast<std::size_t>(q - 1)];
  }
  if (cokernel[static_cast<std::size_t>(n)] != 0) throw std::logic_error("Euler chase: H^n(B) -> H^n(C) not onto");
  return a;
}

Dim chi_line(int n, int d) { return binomial_ext(d + n, n); }

Dim chi_cotangent(int n, int p, int k) {
  Dim chi = chi_line(n, k);
  for (int q = 1; q <= p; ++q) chi = binomial(n + 1, q) * chi_line(n, k - q) - chi;
  return chi;
}

}  // namespace

Dim oracle_euler_sequence(int n, int p, int t, int i) {
  if (p < 1 || p > n - 1) throw std::invalid_argument("Euler-sequence oracle needs 1 <= p <= n-1");
  if (i < 0 || i > n) return 0;
  return euler_chase(n, p, t)[static_cast<std::size_t>(i)];
}

Dim euler_characteristic_atom(int n, const Atom& atom, int shift) {
  const int t = atom.twist() + shift;
  return atom.is_line() ? chi_line(n, t) : chi_cotangent(n, atom.p(), t);
}

std::vector<Dim> box_cohomology(const Space& space, const BoxSummand& summand, const MultiTwist& t) {
  std::vector<Dim> acc{1};
  for (int j = 0; j < space.size(); ++j) {
    const std::vector<Dim>& f = atom_cohomology(space[j], summand[j], t[j]);
    std::vector<Dim> next(acc.size() + f.size() - 1);
    for (std::size_t x = 0; x < acc.size(); ++x) {
      if (acc[x] == 0) continue;
      for (std::size_t y = 0; y < f.size(); ++y) {
        if (f[y] != 0) next[x + y] += acc[x] * f[y];
      }
    }
    acc = std::move(next);
  }
  return acc;
}

Dim h_box(const Space& space, const BoxSummand& summand, const MultiTwist& t, int i) {
  if (i < 0 || i > space.dim()) return 0;
  return box_cohomology(space, summand, t)[static_cast<std::size_t>(i)];
}

Dim h_box(const Space& space, const BoxSummand& summand, int i) {
  return h_box(space, summand, MultiTwist::zero(space.size()), i);
}

int box_support(const Space& space, const BoxSummand& summand, const MultiTwist& t) noexcept {
  int degree = 0;
  for (int j = 0; j < space.size(); ++j) {
    const int q = atom_support(space[j], summand[j], t[j]);
    if (q < 0) return -1;
    degree += q;
  }
  return degree;
}

std::vector<Dim> bundle_cohomology(const Bundle& bundle, const MultiTwist& t) {
  const Space& space = bundle.space();
  std::vector<Dim> total(static_cast<std::size_t>(space.dim() + 1));
  for (const BoxSummand& s : bundle.summands()) {
    const int q = box_support(space, s, t);
    if (q < 0) continue;
    const std::vector<Dim> v = box_cohomology(space, s, t);
    for (std::size_t i = 0; i < v.size(); ++i) total[i] += v[i];
  }
  return total;
}

Dim h_bundle(const Bundle& bundle, const MultiTwist& t, int i) {
  if (i < 0 || i > bundle.space().dim()) return 0;
  Dim total = 0;
  for (const BoxSummand& s : bundle.summands()) {
    if (box_support(bundle.space(), s, t) == i) total += h_box(bundle.space(), s, t, i);
  }
  return total;
}

bool h_bundle_nonzero(const Bundle& bundle, const MultiTwist& t, int i) noexcept {
  for (const BoxSummand& s : bundle.summands()) {
    if (box_support(bundle.space(), s, t) == i) return true;
  }
  return false;
}

Dim euler_characteristic(const Bundle& bundle, const MultiTwist& t) {
  const Space& space = bundle.space();
  Dim total = 0;
  for (const BoxSummand& s : bundle.summands()) {
    Dim chi = 1;
    for (int j = 0; j < space.size(); ++j) chi *= euler_characteristic_atom(space[j], s[j], t[j]);
    total += chi;
  }
  return total;
}

CohomologyTable cohomology_table(const Bundle& bundle, const std::vector<std::pair<int, int>>& twist_box) {
  const int s = bundle.space().size();
  if (static_cast<int>(twist_box.size()) != s) throw std::invalid_argument("twist range arity mismatch");
  for (const auto& [lo, hi] : twist_box) {
    if (lo > hi) throw std::invalid_argument("empty twist range");
  }
  CohomologyTable table{bundle, twist_box, {}};
  std::vector<int> cur(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) cur[static_cast<std::size_t>(j)] = twist_box[static_cast<std::size_t>(j)].first;
  while (true) {
    const MultiTwist t(cur);
    const std::vector<Dim> v = bundle_cohomology(bundle, t);
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
      if (v[static_cast<std::size_t>(i)] != 0) table.entries.emplace(std::make_pair(i, t), v[static_cast<std::size_t>(i)]);
    }
    int j = s - 1;
    while (j >= 0 && cur[static_cast<std::size_t>(j)] == twist_box[static_cast<std::size_t>(j)].second) {
      cur[static_cast<std::size_t>(j)] = twist_box[static_cast<std::size_t>(j)].first;
      --j;
    }
    if (j < 0) break;
    ++cur[static_cast<std::size_t>(j)];
  }
  return table;
}

}  // namespace mpreg
