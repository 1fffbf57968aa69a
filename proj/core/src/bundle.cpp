#include "mpreg/bundle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mpreg/errors.hpp"

namespace mpreg {

Space::Space(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("space needs at least one factor");
  for (int n : factors_) {
    if (n < 1) throw std::invalid_argument("factor P^" + std::to_string(n) + " is not allowed; need n >= 1");
  }
  dim_ = std::accumulate(factors_.begin(), factors_.end(), 0);
}

std::vector<int> Space::canonical_twist() const {
  std::vector<int> k;
  k.reserve(factors_.size());
  for (int n : factors_) k.push_back(-n - 1);
  return k;
}

std::string to_string(const Space& space) {
  std::string out;
  for (int j = 0; j < space.size(); ++j) {
    if (j) out += 'x';
    out += 'P' + std::to_string(space[j]);
  }
  return out;
}

int MultiTwist::sum() const noexcept { return std::accumulate(t_.begin(), t_.end(), 0); }

MultiTwist MultiTwist::operator-() const {
  MultiTwist r = *this;
  for (int& x : r.t_) x = -x;
  return r;
}

MultiTwist operator+(const MultiTwist& a, const MultiTwist& b) {
  if (a.size() != b.size()) throw std::invalid_argument("twist arity mismatch");
  MultiTwist r = a;
  for (int j = 0; j < a.size(); ++j) r[j] += b[j];
  return r;
}

MultiTwist operator-(const MultiTwist& a, const MultiTwist& b) { return a + (-b); }

MultiTwist operator+(const MultiTwist& a, int t) {
  MultiTwist r = a;
  for (int& x : r.t_) x += t;
  return r;
}

std::string to_string(const MultiTwist& t) {
  std::ostringstream os;
  os << '(';
  for (int j = 0; j < t.size(); ++j) os << (j ? "," : "") << t[j];
  os << ')';
  return os.str();
}

Atom Atom::cotangent(int n, int p, int twist) {
  if (p < 0 || p > n) {
    throw ParseError(ParseError::Kind::Dimension, 0,
                     "W" + std::to_string(p) + " does not exist on P^" + std::to_string(n));
  }
  if (p == 0) return line(twist);
  if (p == n) return line(twist - n - 1);
  return Atom(Kind::Cotangent, p, twist);
}

int Atom::rank(int n) const {
  if (is_line()) return 1;
  long r = 1;
  for (int i = 1; i <= p_; ++i) r = r * (n - p_ + i) / i;
  return static_cast<int>(r);
}

Atom Atom::dual(int n) const {
  if (is_line()) return line(-twist_);
  return cotangent(n, n - p_, n + 1 - twist_);
}

BoxSummand BoxSummand::line(const std::vector<int>& degrees) {
  std::vector<Atom> atoms;
  atoms.reserve(degrees.size());
  for (int d : degrees) atoms.push_back(Atom::line(d));
  return BoxSummand(std::move(atoms));
}

bool BoxSummand::is_line() const noexcept {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.is_line(); });
}

std::vector<int> BoxSummand::degrees() const {
  std::vector<int> d;
  d.reserve(atoms_.size());
  for (const Atom& a : atoms_) {
    if (!a.is_line()) throw UnsupportedAtomError("summand has a cotangent atom");
    d.push_back(a.twist());
  }
  return d;
}

long long BoxSummand::rank(const Space& space) const {
  long long r = 1;
  for (int j = 0; j < size(); ++j) r *= atoms_[static_cast<std::size_t>(j)].rank(space[j]);
  return r;
}

BoxSummand BoxSummand::twisted(const MultiTwist& t) const {
  std::vector<Atom> out;
  out.reserve(atoms_.size());
  for (int j = 0; j < size(); ++j) out.push_back(atoms_[static_cast<std::size_t>(j)].twisted(t[j]));
  return BoxSummand(std::move(out));
}

BoxSummand BoxSummand::dual(const Space& space) const {
  std::vector<Atom> out;
  out.reserve(atoms_.size());
  for (int j = 0; j < size(); ++j) out.push_back(atoms_[static_cast<std::size_t>(j)].dual(space[j]));
  return BoxSummand(std::move(out));
}

Bundle::Bundle(Space space, std::vector<BoxSummand> summands)
    : space_(std::move(space)), summands_(std::move(summands)) {
  if (summands_.empty()) throw std::invalid_argument("a bundle needs at least one summand");
  for (const BoxSummand& s : summands_) {
    if (s.size() != space_.size()) {
      throw ParseError(ParseError::Kind::Arity, 0,
                       "summand has " + std::to_string(s.size()) + " atoms but the space has " +
                           std::to_string(space_.size()) + " factors");
    }
    for (int j = 0; j < s.size(); ++j) {
      if (!s[j].fits(space_[j])) {
        throw ParseError(ParseError::Kind::Dimension, 0,
                         "W" + std::to_string(s[j].p()) + " is not a proper cotangent power on P^" +
                             std::to_string(space_[j]));
      }
    }
  }
  std::sort(summands_.begin(), summands_.end());
}

bool Bundle::is_line_only() const noexcept {
  return std::all_of(summands_.begin(), summands_.end(), [](const BoxSummand& s) { return s.is_line(); });
}

bool Bundle::contains(const BoxSummand& summand) const {
  return std::binary_search(summands_.begin(), summands_.end(), summand);
}

Bundle twist(const Bundle& bundle, const MultiTwist& t) {
  if (t.size() != bundle.space().size()) throw std::invalid_argument("twist arity mismatch");
  std::vector<BoxSummand> out;
  out.reserve(bundle.summands().size());
  for (const BoxSummand& s : bundle.summands()) out.push_back(s.twisted(t));
  return Bundle(bundle.space(), std::move(out));
}

Bundle dualize(const Bundle& bundle) {
  std::vector<BoxSummand> out;
  out.reserve(bundle.summands().size());
  for (const BoxSummand& s : bundle.summands()) out.push_back(s.dual(bundle.space()));
  return Bundle(bundle.space(), std::move(out));
}

long long rank(const Bundle& bundle) {
  long long r = 0;
  for (const BoxSummand& s : bundle.summands()) r += s.rank(bundle.space());
  return r;
}

Bundle direct_sum(const Bundle& a, const Bundle& b) {
  if (a.space() != b.space()) throw std::invalid_argument("direct sum across different spaces");
  std::vector<BoxSummand> all = a.summands();
  all.insert(all.end(), b.summands().begin(), b.summands().end());
  return Bundle(a.space(), std::move(all));
}

Bundle restrict_to_hyperplane(const Bundle& bundle, int factor) {
  const Space& space = bundle.space();
  if (factor < 0 || factor >= space.size()) throw std::out_of_range("factor index out of range");
  if (space[factor] < 2) {
    throw PreconditionError("hyperplane of P^1 is a point; restriction needs n >= 2");
  }
  for (const BoxSummand& s : bundle.summands()) {
    if (!s[factor].is_line()) {
      throw UnsupportedAtomError("cotangent atom on the restricted factor is not decomposable after restriction");
    }
  }
  std::vector<int> factors = space.factors();
  factors[static_cast<std::size_t>(factor)] -= 1;
  return Bundle(Space(std::move(factors)), bundle.summands());
}

Bundle line_bundle(const Space& space, const std::vector<int>& degrees) {
  return Bundle(space, {BoxSummand::line(degrees)});
}

}  // namespace mpreg
