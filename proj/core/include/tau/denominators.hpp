#pragma once

// Denominator invariants: D_{g,n} = lcm of denominators of pure psi
// brackets, and the kappa analogue on M_g, with the prime-order profile
// checks built on them.

#include "tau/exact.hpp"
#include "tau/report.hpp"
#include "tau/tau_engine.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace tau {

struct DenominatorProfile {
  int genus = 0;
  std::optional<int> points;
  Integer value = 1;
  std::vector<PrimeOrder> factors;

  long order(long prime) const;
};

DenominatorProfile make_profile(int genus, std::optional<int> points, const Integer& value);

/// "2^7 · 3^2 · 5"; "1" for the empty factorization.
std::string render_factorization(const std::vector<PrimeOrder>& factors);

/// {g, n?, value, factors: [[p, e], ...]}
nlohmann::json to_json(const DenominatorProfile& profile);

/// ord_p of the denominator of a nonzero rational (0 when p does not divide it).
long denominator_order(const Rational& value, long prime);

/// The conjectured ord_p of the kappa denominator at genus g >= 2.
long predicted_kappa_order(int genus, long prime);

/// Exponents of the predicted lexicographically first witness for prime p,
/// ascending: floor(2g/(p-1)) copies of (p-1)/2 plus one d.
std::vector<int> predicted_witness(int genus, long prime);

/// The nested-floor lower bounds for ord_p of the automorphism lcm, for p = 2
/// and every odd prime p <= 2g+1.
std::vector<PrimeOrder> s_g_lower_bounds(int genus);

/// Memoizes the lcm computations for one engine.
class DenominatorStats {
 public:
  explicit DenominatorStats(TauEngine engine, int jobs = 1) : engine_(std::move(engine)), jobs_(jobs) {}

  /// lcm over all ascending d of size n with sum 3g-3+n. Throws for unstable (g, n).
  DenominatorProfile psi_lcm(int genus, int n);

  /// lcm over kappa multisets of total degree 3g-3 on M_g, g >= 2. Only
  /// a_j >= 1 is enumerated: a kappa_0 factor multiplies by the integer 2g-2.
  DenominatorProfile kappa_lcm(int genus);

  /// kappa_lcm extended by the constants 1 (g = 0) and 24 (g = 1).
  Integer kappa_lcm_extended(int genus);

  /// First bracket of genus g, ordered by n and then positionally on the
  /// ascending exponents, whose denominator has ord_p equal to target.
  /// Searches n <= max_points.
  std::optional<std::vector<int>> find_witness(int genus, long prime, long target, int max_points);

  /// Prime orders of the kappa lcm against the conjectured formulas for all
  /// primes up to max(2g+1, largest factor), plus the witness search for
  /// 5 <= p <= 2g+1. lhs = number of mismatches, rhs = 0.
  Report prime_order_check(int genus);

  /// lhs = D_{g+h} mod D_g D_h, rhs = 0.
  Report divisibility_check(int g, int h);

  /// Finds the minimal n with D_{g,n} = kappa_lcm(g) searching n up to
  /// floor(g/2) + 2, and checks the divisibility chain D_{g,n} | D_{g,n+1} | kappa_lcm.
  /// lhs = violation count, rhs = 0; detail carries the minimal n and the bound.
  Report threshold_check(int genus);
  std::optional<int> minimal_threshold(int genus, int max_n);

  /// ord_2 > bound_2, ord_3 >= bound_3, ord_p <= bound_p (p >= 5) against the
  /// formula-side bounds. lhs = violation count, rhs = 0.
  Report compare_D_S(int genus);

  const TauEngine& engine() const { return engine_; }

 private:
  TauEngine engine_;
  int jobs_;
  std::mutex mutex_;
  std::map<std::pair<int, int>, DenominatorProfile> psi_;
  std::map<int, DenominatorProfile> kappa_;
};

}  // namespace tau
