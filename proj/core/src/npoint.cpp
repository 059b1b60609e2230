#include "tau/npoint.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace tau {

namespace {

Rational recursion_coefficient(int n, int r, int s) {
  Integer four_s;
  mpz_ui_pow_ui(four_s.get_mpz_t(), 4, static_cast<unsigned long>(s));
  Rational c(double_factorial(2 * r + n - 3), four_s * double_factorial(2 * r + 2 * s + n - 1));
  c.canonicalize();
  return c;
}

// All compositions of k into n nonnegative parts.
void compositions(int k, int n, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == n - 1) {
    current.push_back(k);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int i = 0; i <= k; ++i) {
    current.push_back(i);
    compositions(k - i, n, current, out);
    current.pop_back();
  }
}

}  // namespace

GradedSymPoly delta_poly(int n) {
  if (n < 1) throw std::invalid_argument("delta_poly: n must be >= 1");
  GradedSymPoly s = GradedSymPoly::variable_sum(n);
  GradedSymPoly cubes(n);
  for (int i = 0; i < n; ++i) cubes += GradedSymPoly::variable(n, i).pow(3);
  return (s.pow(3) - cubes) * Rational(1, 3);
}

GradedSymPoly one_point_G(int degree_cap) {
  if (degree_cap < 1) throw std::invalid_argument("one_point_G: degree cap must be >= 1");
  GradedSymPoly p(1, degree_cap);
  for (int g = 1; 3 * g - 2 <= degree_cap; ++g) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 24, static_cast<unsigned long>(g));
    Rational c(1, power * factorial(g));
    if (g % 2 == 0) c = -c;
    p.add_term({3 * g - 2}, c);
  }
  return p;
}

GradedSymPoly exp_cubic_component(int nvars, int k) {
  GradedSymPoly out(nvars);
  if (nvars == 0) {
    if (k == 0) out = GradedSymPoly::constant(0, 1);
    return out;
  }
  std::vector<std::vector<int>> parts;
  std::vector<int> current;
  compositions(k, nvars, current, parts);
  for (const auto& e : parts) {
    Exponents exps(static_cast<std::size_t>(nvars));
    Integer denom = 1;
    for (int i = 0; i < nvars; ++i) {
      exps[i] = 3 * e[i];
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), 24, static_cast<unsigned long>(e[i]));
      denom *= p * factorial(e[i]);
    }
    out.add_term(exps, Rational(1, denom));
  }
  return out;
}

NPointFunction::NPointFunction(int n, std::vector<GradedSymPoly> weighted)
    : n_(n), weighted_(std::move(weighted)) {
  if (n < 1) throw std::invalid_argument("NPointFunction: n must be >= 1");
  if (weighted_.empty()) throw std::invalid_argument("NPointFunction: no components");
}

void NPointFunction::check(int genus) const {
  if (genus < 0 || genus > max_genus()) {
    throw std::out_of_range("genus " + std::to_string(genus) + " outside tracked range [0, " +
                            std::to_string(max_genus()) + "]");
  }
}

const GradedSymPoly& NPointFunction::weighted_component(int genus) const {
  check(genus);
  return weighted_[genus];
}

GradedSymPoly NPointFunction::g_component(int genus) const {
  check(genus);
  if (2 * genus - 2 + n_ <= 0) {
    throw std::domain_error("g_component: unstable (g, n) has no polynomial component");
  }
  return weighted_[genus].divide_by_variable_sum().divide_by_variable_sum();
}

GradedSymPoly NPointFunction::f_component(int genus) const {
  check(genus);
  if (2 * genus - 2 + n_ <= 0) {
    throw std::domain_error("f_component: unstable (g, n)");
  }
  {
    std::lock_guard lock(mutex_);
    if (auto it = f_cache_.find(genus); it != f_cache_.end()) return it->second;
  }
  GradedSymPoly scaled(n_);
  for (int h = 0; h <= genus; ++h) {
    if (weighted_[h].is_zero()) continue;
    scaled += exp_cubic_component(n_, genus - h) * weighted_[h];
  }
  GradedSymPoly f = scaled.divide_by_variable_sum().divide_by_variable_sum();
  std::lock_guard lock(mutex_);
  return f_cache_.try_emplace(genus, std::move(f)).first->second;
}

GradedSymPoly NPointFunction::normalized() const {
  GradedSymPoly out(n_, 3 * max_genus() + n_ - 3);
  for (int g = 0; g <= max_genus(); ++g) {
    if (2 * g - 2 + n_ > 0) out += g_component(g);
  }
  return out;
}

NPointEngine::NPointEngine(int max_genus) : max_genus_(max_genus) {
  if (max_genus < 0) throw std::invalid_argument("NPointEngine: negative genus bound");
}

const NPointFunction& NPointEngine::function(int n) {
  if (n < 1) throw std::invalid_argument("NPointEngine::function: n must be >= 1");
  if (n > 30) throw std::invalid_argument("NPointEngine::function: n too large for subset masks");
  if (auto it = functions_.find(n); it != functions_.end()) return *it->second;
  for (int k = 1; k < n; ++k) function(k);
  build(n);
  return *functions_.at(n);
}

const GradedSymPoly& NPointEngine::embedded(int n, unsigned mask, int genus) {
  auto key = std::make_pair(n, mask);
  auto it = embedded_.find(key);
  if (it == embedded_.end()) {
    std::vector<int> slots;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) slots.push_back(i);
    }
    const auto& fn = function(static_cast<int>(slots.size()));
    std::vector<GradedSymPoly> parts;
    for (int g = 0; g <= max_genus_; ++g) parts.push_back(fn.weighted_component(g).embed(n, slots));
    it = embedded_.emplace(key, std::move(parts)).first;
  }
  return it->second.at(genus);
}

GradedSymPoly NPointEngine::p_numerator(int n, int r) {
  if (n < 2) throw std::invalid_argument("p_numerator: n must be >= 2");
  if (r < 0 || r > max_genus_) throw std::out_of_range("p_numerator: r outside tracked range");
  for (int k = 1; k < n; ++k) function(k);
  const unsigned full = (1u << n) - 1;
  GradedSymPoly numerator(n);
  for (unsigned mask = 1; mask < full; ++mask) {
    const unsigned complement = full & ~mask;
    for (int r1 = 0; r1 <= r; ++r1) {
      const auto& left = embedded(n, mask, r1);
      if (left.is_zero()) continue;
      const auto& right = embedded(n, complement, r - r1);
      if (right.is_zero()) continue;
      numerator += left * right;
    }
  }
  return numerator;
}

GradedSymPoly NPointEngine::p_polynomial(int n, int r) {
  if (n < 3) throw std::invalid_argument("p_polynomial: P_r is a polynomial only for n >= 3");
  GradedSymPoly p = p_numerator(n, r).divide_by_variable_sum();
  ++divisions_;
  return p * Rational(1, 2);
}

void NPointEngine::build(int n) {
  std::vector<GradedSymPoly> weighted;
  if (n == 1) {
    weighted.push_back(GradedSymPoly::constant(1, 1));
    for (int g = 1; g <= max_genus_; ++g) weighted.emplace_back(1);
    functions_.emplace(n, std::make_unique<NPointFunction>(n, std::move(weighted)));
    return;
  }

  const GradedSymPoly s = GradedSymPoly::variable_sum(n);
  const GradedSymPoly s2 = s * s;
  const GradedSymPoly delta = delta_poly(n);
  std::vector<GradedSymPoly> delta_pow{GradedSymPoly::constant(n, 1)};
  for (int k = 1; k <= max_genus_; ++k) delta_pow.push_back(delta_pow.back() * delta);

  // For n >= 3, p[r] = P_r. For n = 2, p[r] = S^2 P_r = S N_r / 2, which
  // keeps the unstable P_0 = 1/(x_1+x_2) polynomial.
  std::vector<GradedSymPoly> p;
  for (int r = 0; r <= max_genus_; ++r) {
    if (n >= 3) {
      p.push_back(p_polynomial(n, r));
    } else {
      p.push_back(s * p_numerator(n, r) * Rational(1, 2));
    }
  }

  for (int g = 0; g <= max_genus_; ++g) {
    GradedSymPoly component(n);
    for (int r = 0; r <= g; ++r) {
      if (p[r].is_zero()) continue;
      component += p[r] * delta_pow[g - r] * recursion_coefficient(n, r, g - r);
    }
    weighted.push_back(n >= 3 ? s2 * component : component);
  }
  functions_.emplace(n, std::make_unique<NPointFunction>(n, std::move(weighted)));
}

NPointFunction npoint_G(int n, int g_max) {
  if (n < 2) throw std::invalid_argument("npoint_G: n must be >= 2");
  NPointEngine engine(g_max);
  const auto& fn = engine.function(n);
  std::vector<GradedSymPoly> weighted;
  for (int g = 0; g <= g_max; ++g) weighted.push_back(fn.weighted_component(g));
  return NPointFunction(n, std::move(weighted));
}

Rational extract_bracket(const NPointFunction& fn, std::span<const int> d) {
  const int n = static_cast<int>(d.size());
  if (n != fn.points()) throw std::invalid_argument("extract_bracket: exponent count mismatch");
  long sum = 0;
  for (int e : d) {
    if (e < 0) return 0;
    sum += e;
  }
  const long shifted = sum + 3 - n;
  if (shifted < 0 || shifted % 3 != 0) return 0;
  const int genus = static_cast<int>(shifted / 3);
  if (2 * genus - 2 + n <= 0) return 0;
  if (genus > fn.max_genus()) {
    throw std::out_of_range("extract_bracket: degree " + std::to_string(sum) +
                            " exceeds the tracked genus range");
  }
  return fn.f_component(genus).coefficient(Exponents(d.begin(), d.end()));
}

MergedSeries::MergedSeries(int n, std::vector<GradedSymPoly> components)
    : n_(n), components_(std::move(components)) {}

Rational MergedSeries::coefficient(int y_power, std::span<const int> d) const {
  if (static_cast<int>(d.size()) != n_) throw std::invalid_argument("MergedSeries: exponent count mismatch");
  long sum = y_power;
  for (int e : d) {
    if (e < 0) return 0;
    sum += e;
  }
  if (y_power < 0) return 0;
  const long shifted = sum + 1 - n_;
  if (shifted < 0 || shifted % 3 != 0) return 0;
  const int genus = static_cast<int>(shifted / 3);
  if (genus > max_genus()) throw std::out_of_range("MergedSeries: genus outside tracked range");
  Exponents e;
  e.push_back(y_power);
  e.insert(e.end(), d.begin(), d.end());
  return components_[genus].coefficient(e);
}

MergedSeries merged_series(NPointEngine& engine, int n) {
  if (n < 1) throw std::invalid_argument("merged_series: n must be >= 1");
  const auto& fn = engine.function(n + 2);
  std::vector<GradedSymPoly> components;
  for (int g = 0; g <= engine.max_genus(); ++g) {
    const GradedSymPoly full = fn.g_component(g);
    GradedSymPoly merged(n + 1);
    Exponents e(static_cast<std::size_t>(n + 1));
    for (const auto& [exps, c] : full.terms()) {
      e[0] = exps[0] + exps[1];
      for (int j = 0; j < n; ++j) e[j + 1] = exps[j + 2];
      merged.add_term(e, exps[1] % 2 == 0 ? c : Rational(-c));
    }
    for (const auto& [exps, c] : merged.terms()) {
      if (exps[0] % 2 != 0) {
        throw std::logic_error("merged_series: odd power of y with nonzero coefficient " + to_string(c));
      }
    }
    components.push_back(std::move(merged));
  }
  return MergedSeries(n, std::move(components));
}

MergedSeries merged_series(int n, int g_max) {
  NPointEngine engine(g_max);
  return merged_series(engine, n);
}

std::size_t seed_table(NPointEngine& engine, int max_points, BracketTable& table) {
  std::size_t inserted = 0;
  for (int k = 1; k <= max_points; ++k) {
    const NPointFunction& fn = engine.function(k);
    for (int g = 1; g <= engine.max_genus(); ++g) {
      const GradedSymPoly f = fn.f_component(g);
      for (const auto& [exps, c] : f.terms()) {
        table.insert(TauKey(g, exps), c);
        ++inserted;
      }
    }
  }
  return inserted;
}

}  // namespace tau
