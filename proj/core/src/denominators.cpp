#include "tau/denominators.hpp"

#include "tau/enumerate.hpp"
#include "tau/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tau {

namespace {

Integer lcm_all(const std::vector<Rational>& values) { return lcm_of_denominators(values); }

long floor_series(long k, long p) {
  long total = 0;
  for (long t = k; t > 0; t /= p) total += t;
  return total;
}

}  // namespace

long DenominatorProfile::order(long prime) const {
  for (const auto& f : factors) {
    if (f.prime == prime) return f.order;
  }
  return 0;
}

DenominatorProfile make_profile(int genus, std::optional<int> points, const Integer& value) {
  DenominatorProfile p;
  p.genus = genus;
  p.points = points;
  p.value = value;
  p.factors = factorize(value);
  return p;
}

std::string render_factorization(const std::vector<PrimeOrder>& factors) {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " · ";
    os << factors[i].prime;
    if (factors[i].order != 1) os << '^' << factors[i].order;
  }
  return os.str();
}

nlohmann::json to_json(const DenominatorProfile& profile) {
  nlohmann::json j;
  j["g"] = profile.genus;
  if (profile.points) j["n"] = *profile.points;
  j["value"] = profile.value.get_str();
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : profile.factors) factors.push_back({f.prime, f.order});
  j["factors"] = factors;
  return j;
}

long denominator_order(const Rational& value, long prime) {
  if (value == 0) throw std::invalid_argument("denominator_order: zero value");
  return ord_at_prime(Integer(value.get_den()), prime);
}

long predicted_kappa_order(int genus, long prime) {
  if (genus < 2) throw std::invalid_argument("predicted_kappa_order: genus must be >= 2");
  const Integer gf = factorial(genus);
  if (prime == 2) return 3L * genus + ord_at_prime(gf, 2);
  if (prime == 3) return genus + ord_at_prime(gf, 3);
  return 2L * genus / (prime - 1);
}

std::vector<int> predicted_witness(int genus, long prime) {
  if (prime < 5) throw std::invalid_argument("predicted_witness: prime must be >= 5");
  const long k = 2L * genus / (prime - 1);
  const long half = (prime - 1) / 2;
  std::vector<int> w(static_cast<std::size_t>(k), static_cast<int>(half));
  w.push_back(static_cast<int>(3L * genus - 2 + k - half * k));
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<PrimeOrder> s_g_lower_bounds(int genus) {
  if (genus < 2) throw std::invalid_argument("s_g_lower_bounds: genus must be >= 2");
  std::vector<PrimeOrder> out;
  out.push_back({2, 2L * genus + floor_series(genus / 2, 2)});
  for (long p : primes_up_to(2L * genus + 1)) {
    if (p == 2) continue;
    const long k = 2L * genus / (p - 1);
    out.push_back({p, floor_series(k, p)});
  }
  return out;
}

DenominatorProfile DenominatorStats::psi_lcm(int genus, int n) {
  if (genus < 0 || n < 0 || 2 * genus - 2 + n <= 0) {
    throw std::invalid_argument("psi_lcm: unstable (g, n) = (" + std::to_string(genus) + ", " + std::to_string(n) + ")");
  }
  {
    std::lock_guard lock(mutex_);
    if (auto it = psi_.find({genus, n}); it != psi_.end()) return it->second;
  }
  std::vector<std::vector<int>> keys;
  for_each_multiset_with_sum(n, 3L * genus - 3 + n, 0, [&](const std::vector<int>& d) { keys.push_back(d); });
  std::vector<Rational> values(keys.size());
  parallel_for(keys.size(), jobs_, [&](std::size_t i) { values[i] = engine_.bracket(genus, keys[i]); });
  DenominatorProfile profile = make_profile(genus, n, lcm_all(values));
  std::lock_guard lock(mutex_);
  return psi_.try_emplace({genus, n}, std::move(profile)).first->second;
}

DenominatorProfile DenominatorStats::kappa_lcm(int genus) {
  if (genus < 2) throw std::invalid_argument("kappa_lcm: defined for g >= 2 (use the constants 1 and 24 below)");
  {
    std::lock_guard lock(mutex_);
    if (auto it = kappa_.find(genus); it != kappa_.end()) return it->second;
  }
  const int total = 3 * genus - 3;
  std::vector<std::vector<int>> keys;
  for (int m = 1; m <= total; ++m) {
    for_each_multiset_with_sum(m, total, 1, [&](const std::vector<int>& a) { keys.push_back(a); });
  }
  std::vector<Rational> values(keys.size());
  parallel_for(keys.size(), jobs_,
               [&](std::size_t i) { values[i] = kappa_to_psi(engine_, MixedKey{genus, {}, keys[i]}); });
  DenominatorProfile profile = make_profile(genus, std::nullopt, lcm_all(values));
  std::lock_guard lock(mutex_);
  return kappa_.try_emplace(genus, std::move(profile)).first->second;
}

Integer DenominatorStats::kappa_lcm_extended(int genus) {
  if (genus < 0) throw std::invalid_argument("kappa_lcm_extended: negative genus");
  if (genus == 0) return 1;
  if (genus == 1) return 24;
  return kappa_lcm(genus).value;
}

std::optional<std::vector<int>> DenominatorStats::find_witness(int genus, long prime, long target, int max_points) {
  for (int n = 1; n <= max_points; ++n) {
    if (2 * genus - 2 + n <= 0) continue;
    // Lexicographic enumeration; the first hit is the minimum for this n.
    std::vector<std::vector<int>> keys;
    for_each_multiset_with_sum(n, 3L * genus - 3 + n, 0, [&](const std::vector<int>& d) { keys.push_back(d); });
    for (const auto& d : keys) {
      const Rational v = engine_.bracket(genus, d);
      if (v != 0 && denominator_order(v, prime) == target) return d;
    }
  }
  return std::nullopt;
}

Report DenominatorStats::prime_order_check(int genus) {
  Report report;
  report.id = "c41";
  report.params = {{"g", genus}};
  long mismatches = 0;
  timed(report, [&] {
    const DenominatorProfile profile = kappa_lcm(genus);
    long bound = 2L * genus + 1;
    for (const auto& f : profile.factors) bound = std::max(bound, f.prime);
    nlohmann::json orders = nlohmann::json::array();
    for (long p : primes_up_to(bound)) {
      const long computed = profile.order(p);
      const long predicted = predicted_kappa_order(genus, p);
      if (computed != predicted) ++mismatches;
      orders.push_back({{"p", p}, {"computed", computed}, {"predicted", predicted}});
    }
    nlohmann::json witnesses = nlohmann::json::array();
    for (long p : primes_up_to(2L * genus + 1)) {
      if (p < 5) continue;
      const long k = 2L * genus / (p - 1);
      const std::vector<int> predicted = predicted_witness(genus, p);
      const auto found = find_witness(genus, p, k, static_cast<int>(predicted.size()) + 1);
      const bool match = found && *found == predicted;
      if (!match) ++mismatches;
      nlohmann::json w{{"p", p}, {"order", k}, {"predicted", predicted}, {"match", match}};
      w["found"] = found ? nlohmann::json(*found) : nlohmann::json(nullptr);
      witnesses.push_back(w);
    }
    report.detail = {{"value", profile.value.get_str()},
                     {"factorization", render_factorization(profile.factors)},
                     {"orders", orders},
                     {"witnesses", witnesses},
                     {"order_rule", "n first, then ascending exponents compared positionally"}};
  });
  report.lhs = mismatches;
  report.rhs = 0;
  report.settle();
  return report;
}

Report DenominatorStats::divisibility_check(int g, int h) {
  if (g < 0 || h < 0) throw std::invalid_argument("divisibility_check: negative genus");
  Report report;
  report.id = "c43";
  report.params = {{"g", g}, {"h", h}};
  timed(report, [&] {
    const Integer dg = kappa_lcm_extended(g);
    const Integer dh = kappa_lcm_extended(h);
    const Integer dgh = kappa_lcm_extended(g + h);
    const Integer product = dg * dh;
    report.lhs = Rational(Integer(dgh % product));
    report.rhs = 0;
    report.detail = {{"D_g", dg.get_str()}, {"D_h", dh.get_str()}, {"D_g+h", dgh.get_str()}};
  });
  report.settle();
  return report;
}

std::optional<int> DenominatorStats::minimal_threshold(int genus, int max_n) {
  const Integer target = kappa_lcm(genus).value;
  for (int n = 1; n <= max_n; ++n) {
    if (psi_lcm(genus, n).value == target) return n;
  }
  return std::nullopt;
}

Report DenominatorStats::threshold_check(int genus) {
  Report report;
  report.id = "c42";
  report.params = {{"g", genus}};
  long violations = 0;
  timed(report, [&] {
    const int bound = genus / 2 + 1;
    const int max_n = bound + 1;
    const Integer target = kappa_lcm(genus).value;
    nlohmann::json chain = nlohmann::json::array();
    std::optional<int> minimal;
    Integer previous = 0;
    for (int n = 1; n <= max_n; ++n) {
      const Integer dn = psi_lcm(genus, n).value;
      chain.push_back({{"n", n}, {"D", dn.get_str()}});
      if (target % dn != 0) ++violations;
      if (previous != 0 && dn % previous != 0) ++violations;
      if (!minimal && dn == target) minimal = n;
      if (n >= bound && dn != target) ++violations;
      previous = dn;
    }
    report.detail = {{"bound", bound},
                     {"minimal_n", minimal ? nlohmann::json(*minimal) : nlohmann::json(nullptr)},
                     {"kappa_lcm", target.get_str()},
                     {"psi_lcm", chain}};
  });
  report.lhs = violations;
  report.rhs = 0;
  report.settle();
  return report;
}

Report DenominatorStats::compare_D_S(int genus) {
  Report report;
  report.id = "ds";
  report.params = {{"g", genus}};
  long violations = 0;
  timed(report, [&] {
    const DenominatorProfile profile = kappa_lcm(genus);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [p, bound] : s_g_lower_bounds(genus)) {
      const long ord = profile.order(p);
      bool ok = false;
      std::string relation;
      if (p == 2) {
        ok = ord > bound;
        relation = ">";
      } else if (p == 3) {
        ok = ord >= bound;
        relation = ">=";
      } else {
        ok = ord <= bound;
        relation = "<=";
      }
      if (!ok) ++violations;
      rows.push_back({{"p", p}, {"ord_D", ord}, {"relation", relation}, {"bound", bound}, {"ok", ok}});
    }
    report.detail = {{"side", "formula-side bounds only"}, {"rows", rows}};
  });
  report.lhs = violations;
  report.rhs = 0;
  report.settle();
  return report;
}

}  // namespace tau
