#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mpreg/bundle.hpp"
#include "mpreg/integer.hpp"

namespace mpreg {

// ---------------------------------------------------------------------------
// Single factor.
//
// Every atom at every twist has at most one nonzero cohomology group, so the
// "support" helpers return that degree (or -1) without touching big integers.
// ---------------------------------------------------------------------------

/// h^i(P^n, O(d)).
Dim h_line(int n, int d, int i);

/// h^i(P^n, Omega^p(t)) for 1 <= p <= n-1 (Bott formula).
Dim h_bott(int n, int p, int t, int i);

int line_support(int n, int d) noexcept;
int bott_support(int n, int p, int t) noexcept;
int atom_support(int n, const Atom& atom, int shift) noexcept;

Dim h_atom(int n, const Atom& atom, int shift, int i);

/// Full cohomology vector (length n+1) of atom(shift) on P^n. Memoized per thread.
const std::vector<Dim>& atom_cohomology(int n, const Atom& atom, int shift);

/// Euler-sequence dimension chase, independent of the closed Bott form:
/// 0 -> Omega^p(t) -> O(t-p)^C(n+1,p) -> Omega^{p-1}(t) -> 0, down to Omega^0 = O.
Dim oracle_euler_sequence(int n, int p, int t, int i);

/// chi(P^n, atom(shift)) via the extended binomial and the Koszul recursion.
Dim euler_characteristic_atom(int n, const Atom& atom, int shift);

// ---------------------------------------------------------------------------
// Products and sums.
// ---------------------------------------------------------------------------

/// Kunneth convolution of the factor cohomology vectors; length d+1.
std::vector<Dim> box_cohomology(const Space& space, const BoxSummand& summand, const MultiTwist& t);
Dim h_box(const Space& space, const BoxSummand& summand, const MultiTwist& t, int i);
Dim h_box(const Space& space, const BoxSummand& summand, int i);

/// The unique degree where summand(t) has cohomology, or -1.
int box_support(const Space& space, const BoxSummand& summand, const MultiTwist& t) noexcept;

std::vector<Dim> bundle_cohomology(const Bundle& bundle, const MultiTwist& t);
Dim h_bundle(const Bundle& bundle, const MultiTwist& t, int i);
bool h_bundle_nonzero(const Bundle& bundle, const MultiTwist& t, int i) noexcept;

Dim euler_characteristic(const Bundle& bundle, const MultiTwist& t);

/// Dense table over a rectangular twist box; only nonzero entries are stored.
struct CohomologyTable {
  Bundle bundle;
  std::vector<std::pair<int, int>> twist_box;  // [lo, hi] per factor
  std::map<std::pair<int, MultiTwist>, Dim> entries;
};

/// Throws std::invalid_argument if the box arity differs from s or some lo > hi.
CohomologyTable cohomology_table(const Bundle& bundle, const std::vector<std::pair<int, int>>& twist_box);

}  // namespace mpreg
