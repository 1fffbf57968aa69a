#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mpreg {

/// The ambient product P^{n_1} x ... x P^{n_s}. Every n_j >= 1.
class Space {
 public:
  explicit Space(std::vector<int> factors);
  Space(std::initializer_list<int> factors) : Space(std::vector<int>(factors)) {}

  const std::vector<int>& factors() const noexcept { return factors_; }
  int size() const noexcept { return static_cast<int>(factors_.size()); }
  /// Total dimension n_1 + ... + n_s.
  int dim() const noexcept { return dim_; }
  int operator[](int j) const { return factors_[static_cast<std::size_t>(j)]; }

  /// Canonical bundle twist (-n_1-1, ..., -n_s-1) as plain integers.
  std::vector<int> canonical_twist() const;

  bool operator==(const Space&) const = default;
  auto operator<=>(const Space&) const = default;

 private:
  std::vector<int> factors_;
  int dim_ = 0;
};

std::string to_string(const Space& space);

/// An s-tuple of integers, the twist O(t_1, ..., t_s).
class MultiTwist {
 public:
  MultiTwist() = default;
  explicit MultiTwist(std::vector<int> t) : t_(std::move(t)) {}
  MultiTwist(std::initializer_list<int> t) : t_(t) {}

  static MultiTwist zero(int s) { return MultiTwist(std::vector<int>(static_cast<std::size_t>(s), 0)); }
  static MultiTwist balanced(int s, int t) {
    return MultiTwist(std::vector<int>(static_cast<std::size_t>(s), t));
  }

  int size() const noexcept { return static_cast<int>(t_.size()); }
  int operator[](int j) const { return t_[static_cast<std::size_t>(j)]; }
  int& operator[](int j) { return t_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& values() const noexcept { return t_; }
  auto begin() const noexcept { return t_.begin(); }
  auto end() const noexcept { return t_.end(); }
  int sum() const noexcept;

  MultiTwist operator-() const;
  friend MultiTwist operator+(const MultiTwist& a, const MultiTwist& b);
  friend MultiTwist operator-(const MultiTwist& a, const MultiTwist& b);
  /// Adds the balanced twist (t, ..., t).
  friend MultiTwist operator+(const MultiTwist& a, int t);

  bool operator==(const MultiTwist&) const = default;
  auto operator<=>(const MultiTwist&) const = default;

 private:
  std::vector<int> t_;
};

std::string to_string(const MultiTwist& t);

/// One indecomposable sheaf on a single factor P^n: either O(d) or Omega^p(t).
/// A stored cotangent atom always has 1 <= p <= n-1; the factory rewrites the
/// end cases Omega^0(t) = O(t) and Omega^n(t) = O(t-n-1).
class Atom {
 public:
  enum class Kind : std::uint8_t { Line, Cotangent };

  static Atom line(int degree) { return Atom(Kind::Line, 0, degree); }
  /// Throws ParseError(Dimension) if p is outside [0, n].
  static Atom cotangent(int n, int p, int twist);

  Kind kind() const noexcept { return kind_; }
  bool is_line() const noexcept { return kind_ == Kind::Line; }
  /// Exterior power; 0 for a line atom.
  int p() const noexcept { return p_; }
  /// Degree of a line atom, twist of a cotangent atom.
  int twist() const noexcept { return twist_; }

  int rank(int n) const;
  Atom twisted(int t) const { return Atom(kind_, p_, twist_ + t); }
  /// O(d)^v = O(-d), Omega^p(k)^v = Omega^{n-p}(n+1-k).
  Atom dual(int n) const;
  /// Whether this atom can live on a factor of dimension n.
  bool fits(int n) const noexcept { return is_line() || (p_ >= 1 && p_ <= n - 1); }

  bool operator==(const Atom&) const = default;
  auto operator<=>(const Atom&) const = default;

 private:
  Atom(Kind kind, int p, int twist) : kind_(kind), p_(p), twist_(twist) {}

  Kind kind_;
  int p_;
  int twist_;
};

/// External tensor product of one atom per factor.
class BoxSummand {
 public:
  explicit BoxSummand(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
  BoxSummand(std::initializer_list<Atom> atoms) : atoms_(atoms) {}

  static BoxSummand line(const std::vector<int>& degrees);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  int size() const noexcept { return static_cast<int>(atoms_.size()); }
  const Atom& operator[](int j) const { return atoms_[static_cast<std::size_t>(j)]; }

  bool is_line() const noexcept;
  /// Degrees of an all-line summand.
  std::vector<int> degrees() const;
  long long rank(const Space& space) const;
  BoxSummand twisted(const MultiTwist& t) const;
  BoxSummand dual(const Space& space) const;

  bool operator==(const BoxSummand&) const = default;
  auto operator<=>(const BoxSummand&) const = default;

 private:
  std::vector<Atom> atoms_;
};

/// A nonempty direct sum of box summands on one space, kept in canonical (sorted) order.
class Bundle {
 public:
  /// Validates arity and atom/factor fit, then sorts. Throws ParseError(Arity/Dimension)
  /// or std::invalid_argument for an empty summand list.
  Bundle(Space space, std::vector<BoxSummand> summands);

  const Space& space() const noexcept { return space_; }
  const std::vector<BoxSummand>& summands() const noexcept { return summands_; }
  int summand_count() const noexcept { return static_cast<int>(summands_.size()); }

  bool is_line_only() const noexcept;
  bool contains(const BoxSummand& summand) const;

  bool operator==(const Bundle&) const = default;
  auto operator<=>(const Bundle&) const = default;

 private:
  Space space_;
  std::vector<BoxSummand> summands_;
};

Bundle twist(const Bundle& bundle, const MultiTwist& t);
Bundle dualize(const Bundle& bundle);
long long rank(const Bundle& bundle);
/// Direct sum of two bundles on the same space.
Bundle direct_sum(const Bundle& a, const Bundle& b);
/// Restriction to H x (other factors) for a hyperplane H of factor `factor` (0-based).
/// Requires only line atoms on that factor and n_factor >= 2.
Bundle restrict_to_hyperplane(const Bundle& bundle, int factor);

/// Convenience: a single line bundle O(degrees) on space.
Bundle line_bundle(const Space& space, const std::vector<int>& degrees);

}  // namespace mpreg
