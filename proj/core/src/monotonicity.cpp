#include "tau/monotonicity.hpp"

#include "tau/enumerate.hpp"
#include "tau/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace tau {

namespace {

Integer pow_ui(unsigned long base, long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, static_cast<unsigned long>(exp));
  return r;
}

/// Every (a, b) value pair with b >= a + 2 in the ascending multiset v, and
/// the swapped multiset.
void for_each_swap(const std::vector<int>& v, const std::function<void(int, int, const std::vector<int>&)>& fn) {
  std::vector<int> values = v;
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const int a = values[i];
      const int b = values[j];
      if (b < a + 2) continue;
      std::vector<int> w = v;
      *std::find(w.begin(), w.end(), a) += 1;
      *std::find(w.rbegin(), w.rend(), b) -= 1;
      std::sort(w.begin(), w.end());
      fn(a, b, w);
    }
  }
}

void require_stable(int genus, int n, const char* who) {
  if (genus < 0 || n < 0 || 2 * genus - 2 + n <= 0) {
    throw std::invalid_argument(std::string(who) + ": unstable (g, n)");
  }
}

Report relation_report(const char* id, nlohmann::json params) {
  Report r;
  r.id = id;
  r.params = std::move(params);
  return r;
}

void finish(Report& r, long comparisons, nlohmann::json violations) {
  const auto count = static_cast<long>(violations.size());
  r.detail["comparisons"] = comparisons;
  r.detail["violations"] = std::move(violations);
  r.lhs = count;
  r.rhs = 0;
  r.settle();
}

}  // namespace

Report psi_swap_check(const TauEngine& engine, int genus, int n) {
  require_stable(genus, n, "psi_swap_check");
  Report report = relation_report("c51", {{"g", genus}, {"n", n}, {"lambda", "none"}});
  long comparisons = 0;
  nlohmann::json violations = nlohmann::json::array();
  timed(report, [&] {
    for_each_multiset_with_sum(n, 3L * genus - 3 + n, 0, [&](const std::vector<int>& d) {
      const Rational left = engine.bracket(genus, d);
      for_each_swap(d, [&](int, int, const std::vector<int>& w) {
        ++comparisons;
        const Rational right = engine.bracket(genus, w);
        if (left > right) violations.push_back({{"d", d}, {"swapped", w}, {"lhs", to_string(left)}, {"rhs", to_string(right)}});
      });
    });
  });
  finish(report, comparisons, std::move(violations));
  return report;
}

Report lambda_g_swap_check(int genus, int n) {
  if (genus < 1 || n < 1) throw std::invalid_argument("lambda_g_swap_check: requires g >= 1 and n >= 1");
  Report report = relation_report("c51", {{"g", genus}, {"n", n}, {"lambda", "lambda_g"}});
  long comparisons = 0;
  nlohmann::json violations = nlohmann::json::array();
  timed(report, [&] {
    for_each_multiset_with_sum(n, 2L * genus - 3 + n, 0, [&](const std::vector<int>& d) {
      const Integer left = multinomial(d);
      for_each_swap(d, [&](int, int, const std::vector<int>& w) {
        ++comparisons;
        const Integer right = multinomial(w);
        if (left > right) violations.push_back({{"d", d}, {"swapped", w}, {"lhs", left.get_str()}, {"rhs", right.get_str()}});
      });
    });
  });
  finish(report, comparisons, std::move(violations));
  return report;
}

Report kappa_swap_check(const TauEngine& engine, int genus, int n, int max_kappa) {
  require_stable(genus, n, "kappa_swap_check");
  Report report = relation_report("c52", {{"g", genus}, {"n", n}, {"max_kappa", max_kappa}});
  long comparisons = 0;
  nlohmann::json violations = nlohmann::json::array();
  timed(report, [&] {
    const long dim = 3L * genus - 3 + n;
    for (int m = 1; m <= max_kappa; ++m) {
      for (long kdeg = 0; kdeg <= dim; ++kdeg) {
        for_each_multiset_with_sum(m, kdeg, 0, [&](const std::vector<int>& a) {
          for_each_multiset_with_sum(n, dim - kdeg, 0, [&](const std::vector<int>& d) {
            const Rational left = kappa_to_psi(engine, MixedKey{genus, d, a});
            auto record = [&](const char* kind, const std::vector<int>& d2, const std::vector<int>& a2) {
              ++comparisons;
              const Rational right = kappa_to_psi(engine, MixedKey{genus, d2, a2});
              if (left > right) {
                violations.push_back({{"swap", kind}, {"d", d}, {"kappa", a}, {"swapped_d", d2}, {"swapped_kappa", a2},
                                      {"lhs", to_string(left)}, {"rhs", to_string(right)}});
              }
            };
            for_each_swap(a, [&](int, int, const std::vector<int>& a2) { record("kappa", d, a2); });
            for_each_swap(d, [&](int, int, const std::vector<int>& d2) { record("psi", d2, a); });
          });
        });
      }
    }
  });
  finish(report, comparisons, std::move(violations));
  return report;
}

Report kappa_bounds_check(const TauEngine& engine, int genus, int n) {
  if (genus < 1) throw std::invalid_argument("kappa_bounds_check: requires g >= 1");
  require_stable(genus, n, "kappa_bounds_check");
  Report report = relation_report("c53", {{"g", genus}, {"n", n}});
  long comparisons = 0;
  nlohmann::json violations = nlohmann::json::array();
  timed(report, [&] {
    const long dim = 3L * genus - 3 + n;
    const long euler = 2L * genus - 2 + n;
    const Rational one_point(1, pow_ui(24, genus) * factorial(genus));
    // Pure kappa on M_{g,n}: n marked points with psi exponent 0.
    const std::vector<int> points(static_cast<std::size_t>(n), 0);
    const Rational wp = kappa_to_psi(engine, MixedKey{genus, points, std::vector<int>(static_cast<std::size_t>(dim), 1)});
    for (long m = 1; m <= dim; ++m) {
      const Rational lower = Rational(pow_ui(static_cast<unsigned long>(euler), m - 1)) * one_point;
      const Rational upper = wp / Rational(pow_ui(static_cast<unsigned long>(euler), dim - m));
      for_each_multiset_with_sum(static_cast<int>(m), dim, 0, [&](const std::vector<int>& a) {
        comparisons += 2;
        const Rational value = kappa_to_psi(engine, MixedKey{genus, points, a});
        if (value < lower || value > upper) {
          violations.push_back({{"kappa", a}, {"value", to_string(value)}, {"lower", to_string(lower)},
                                {"upper", to_string(upper)}});
        }
      });
    }
    report.detail["weil_petersson"] = to_string(wp);
  });
  finish(report, comparisons, std::move(violations));
  return report;
}

Report psi_lower_bound_check(const TauEngine& engine, int genus, int n) {
  require_stable(genus, n, "psi_lower_bound_check");
  Report report = relation_report("c54", {{"g", genus}, {"n", n}});
  long comparisons = 0;
  nlohmann::json violations = nlohmann::json::array();
  timed(report, [&] {
    const Rational bound(1, pow_ui(24, genus) * factorial(genus));
    std::optional<Rational> minimum;
    for_each_multiset_with_sum(n, 3L * genus - 3 + n, 0, [&](const std::vector<int>& d) {
      ++comparisons;
      const Rational v = engine.bracket(genus, d);
      if (!minimum || v < *minimum) minimum = v;
      if (v < bound) violations.push_back({{"d", d}, {"value", to_string(v)}, {"bound", to_string(bound)}});
    });
    report.detail["bound"] = to_string(bound);
    report.detail["minimum"] = minimum ? to_string(*minimum) : std::string("none");
    report.detail["tight"] = minimum && *minimum == bound;
  });
  finish(report, comparisons, std::move(violations));
  return report;
}

std::vector<Report> two_point_swap_sweep(NPointEngine& npoint, int max_genus,
                                         const std::function<void(const Report&)>& progress) {
  if (max_genus > npoint.max_genus()) throw std::out_of_range("two_point_swap_sweep: genus beyond the engine's range");
  const NPointFunction& fn = npoint.function(2);
  std::vector<Report> out;
  for (int g = 1; g <= max_genus; ++g) {
    Report report = relation_report("c51", {{"g", g}, {"n", 2}, {"lambda", "none"}, {"source", "two-point function"}});
    long comparisons = 0;
    nlohmann::json violations = nlohmann::json::array();
    timed(report, [&] {
      const GradedSymPoly f = fn.f_component(g);
      const int total = 3 * g - 1;
      // <tau_a tau_b> for a <= b; compare (a, b) with (a+1, b-1).
      for (int a = 0; a + 2 <= total - a; ++a) {
        ++comparisons;
        const Rational left = f.coefficient({a, total - a});
        const Rational right = f.coefficient({a + 1, total - a - 1});
        if (left > right) {
          violations.push_back({{"d", {a, total - a}}, {"lhs", to_string(left)}, {"rhs", to_string(right)}});
        }
      }
    });
    finish(report, comparisons, std::move(violations));
    if (progress) progress(report);
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace tau
