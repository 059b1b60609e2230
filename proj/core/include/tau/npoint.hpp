#pragma once

// n-point functions
//
//   F(x_1..x_n) = sum_g sum_{|d| = 3g-3+n} <tau_d>_g x^d,
//   G = exp(-sum x_j^3 / 24) F,
//
// built from the recursion
//
//   G = sum_{r,s>=0} (2r+n-3)!! / (4^s (2r+2s+n-1)!!) P_r Delta^s,
//   P_r = [ 1/(2 S) sum_{I|_|J} S_I^2 S_J^2 G(x_I) G(x_J) ]_{3r+n-3},
//   Delta = (S^3 - sum x_j^3)/3,   S = sum x_j,   I, J nonempty.
//
// The recursion is seeded with the full one-point function G(x) = x^-2, which
// includes the unstable genus-0 term; with it the two-point G carries the
// unstable 1/(x_1+x_2). Both are handled by storing every n-point function in
// the weighted form W = S^2 G, which is a polynomial for all n >= 1.

#include "tau/exact.hpp"
#include "tau/polynomial.hpp"
#include "tau/tau_engine.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace tau {

/// (S^3 - sum x_j^3)/3 in n variables; identically 0 for n = 1.
GradedSymPoly delta_poly(int n);

/// The stable part of the normalized one-point series,
/// x^-2 (1 - exp(-x^3/24)) = x/24 - x^4/1152 + ..., truncated at degree_cap.
GradedSymPoly one_point_G(int degree_cap);

/// exp(sum x_j^3/24) restricted to total degree 3k.
GradedSymPoly exp_cubic_component(int nvars, int k);

class NPointFunction {
 public:
  NPointFunction(int n, std::vector<GradedSymPoly> weighted);

  int points() const { return n_; }
  int max_genus() const { return static_cast<int>(weighted_.size()) - 1; }

  /// S^2 G_g, homogeneous of degree 3g + n - 1.
  const GradedSymPoly& weighted_component(int genus) const;

  /// G_g, homogeneous of degree 3g + n - 3. Requires 2g - 2 + n > 0.
  GradedSymPoly g_component(int genus) const;

  /// F_g = sum_{|d| = 3g-3+n} <tau_d>_g x^d. Requires 2g - 2 + n > 0.
  GradedSymPoly f_component(int genus) const;

  /// G through max_genus as one polynomial (stable components only),
  /// degree-capped at 3 max_genus + n - 3.
  GradedSymPoly normalized() const;

 private:
  void check(int genus) const;

  int n_;
  std::vector<GradedSymPoly> weighted_;
  mutable std::mutex mutex_;
  mutable std::map<int, GradedSymPoly> f_cache_;
};

/// Builds and caches n-point functions up to a fixed genus. Construction for
/// one engine is single-threaded; distinct engines are independent.
class NPointEngine {
 public:
  explicit NPointEngine(int max_genus);

  int max_genus() const { return max_genus_; }

  const NPointFunction& function(int n);

  /// P_r in n >= 3 variables, from the exact division by S. Throws
  /// DivisibilityError on a nonzero remainder.
  GradedSymPoly p_polynomial(int n, int r);

  /// Numerator sum_{I|_|J} S_I^2 S_J^2 sum_{r'} G_{r'}(x_I) G_{r-r'}(x_J).
  GradedSymPoly p_numerator(int n, int r);

  /// Number of exact divisions by S performed so far (each with zero remainder).
  std::size_t divisions_checked() const { return divisions_; }

 private:
  void build(int n);
  const GradedSymPoly& embedded(int n, unsigned mask, int genus);

  int max_genus_;
  std::map<int, std::unique_ptr<NPointFunction>> functions_;
  std::map<std::pair<int, unsigned>, std::vector<GradedSymPoly>> embedded_;
  std::size_t divisions_ = 0;
};

/// G(x_1..x_n) through genus g_max. Requires n >= 2 (n = 1 is the seed).
NPointFunction npoint_G(int n, int g_max);

/// Coefficient of prod x_j^{d_j} in F = exp(sum x^3/24) G: the bracket
/// <tau_d>_g when |d| = 3g - 3 + n, zero when no genus fits. Throws
/// std::out_of_range when the genus exceeds the tracked range.
Rational extract_bracket(const NPointFunction& fn, std::span<const int> d);

/// G(y, -y, x_1..x_n), by genus. Variable 0 is y.
class MergedSeries {
 public:
  MergedSeries(int n, std::vector<GradedSymPoly> components);

  int points() const { return n_; }
  int max_genus() const { return static_cast<int>(components_.size()) - 1; }
  const GradedSymPoly& component(int genus) const { return components_.at(genus); }

  /// Coefficient of y^{y_power} prod x_j^{d_j}; the genus is inferred from
  /// y_power + |d| = 3g + n - 1, zero if none fits.
  Rational coefficient(int y_power, std::span<const int> d) const;

 private:
  int n_;
  std::vector<GradedSymPoly> components_;
};

/// Substitutes (y, -y) into the (n+2)-point G. Throws std::logic_error if an
/// odd power of y survives.
MergedSeries merged_series(int n, int g_max);
MergedSeries merged_series(NPointEngine& engine, int n);

/// Inserts every stable coefficient <tau_d>_g, 1 <= g <= max_genus, of the
/// k-point functions for k <= max_points into the table. Returns the number
/// of insert calls. Conflicting values throw std::logic_error.
std::size_t seed_table(NPointEngine& engine, int max_points, BracketTable& table);

}  // namespace tau
