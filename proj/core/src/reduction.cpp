#include "tau/reduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tau {

namespace {

Integer pow_ui(unsigned long base, long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, static_cast<unsigned long>(exp));
  return r;
}

class KappaReducer {
 public:
  KappaReducer(const TauEngine& engine, int genus) : engine_(engine), genus_(genus) {}

  Rational reduce(std::vector<int> psi, std::vector<int> kappa) {
    std::sort(psi.begin(), psi.end());
    std::sort(kappa.begin(), kappa.end());
    if (kappa.empty()) return engine_.bracket(genus_, psi);

    auto key = std::make_pair(psi, kappa);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int first = kappa.front();
    // remaining kappa indices grouped as (value, multiplicity)
    std::vector<std::pair<int, int>> groups;
    for (std::size_t i = 1; i < kappa.size(); ++i) {
      if (!groups.empty() && groups.back().first == kappa[i]) {
        ++groups.back().second;
      } else {
        groups.emplace_back(kappa[i], 1);
      }
    }

    Rational total = 0;
    std::vector<int> chosen(groups.size(), 0);
    while (true) {
      Integer ways = 1;
      int block_size = 1;
      int block_sum = first;
      std::vector<int> rest;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto [value, mult] = groups[i];
        ways *= binomial(mult, chosen[i]);
        block_size += chosen[i];
        block_sum += value * chosen[i];
        for (int c = chosen[i]; c < mult; ++c) rest.push_back(value);
      }
      Integer weight = ways;
      if ((block_size - 1) % 2 == 1) weight = -weight;
      std::vector<int> next_psi = psi;
      next_psi.push_back(block_sum + 1);
      total += reduce(std::move(next_psi), std::move(rest)) * weight;

      std::size_t pos = 0;
      while (pos < groups.size() && chosen[pos] == groups[pos].second) {
        chosen[pos] = 0;
        ++pos;
      }
      if (pos == groups.size()) break;
      ++chosen[pos];
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  const TauEngine& engine_;
  int genus_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> memo_;
};

}  // namespace

Rational kappa_to_psi(const TauEngine& engine, const MixedKey& key) {
  const int n = static_cast<int>(key.psi.size());
  if (key.genus < 0 || 2 * key.genus - 2 + n <= 0) return 0;
  long degree = 0;
  for (int e : key.psi) {
    if (e < 0) return 0;
    degree += e;
  }
  for (int a : key.kappa) {
    if (a < 0) return 0;
    degree += a;
  }
  if (degree != 3L * key.genus - 3 + n) return 0;
  KappaReducer reducer(engine, key.genus);
  return reducer.reduce(key.psi, key.kappa);
}

Rational lambda_g_bracket(int genus, std::span<const int> d) {
  if (genus < 1) throw std::invalid_argument("lambda_g_bracket: genus must be >= 1");
  if (d.empty()) throw std::invalid_argument("lambda_g_bracket: at least one marked point required");
  const long n = static_cast<long>(d.size());
  long sum = 0;
  for (int e : d) {
    if (e < 0) return 0;
    sum += e;
  }
  if (sum != 2L * genus - 3 + n) return 0;
  const Integer top = pow_ui(2, 2 * genus - 1);
  Rational r(multinomial(d) * (top - 1), top);
  r.canonicalize();
  return r * abs(bernoulli(2 * genus)) / Rational(factorial(2 * genus));
}

Rational mumford_bracket_sum(const TauEngine& engine, int genus, int k, std::span<const int> d) {
  if (k < 1) throw std::invalid_argument("ch_insertion: k must be >= 1");
  const int n = static_cast<int>(d.size());
  const std::vector<int> base(d.begin(), d.end());
  Rational total = 0;

  // kappa_{2k-1}
  total += kappa_to_psi(engine, MixedKey{genus, base, {2 * k - 1}});

  // - sum_j psi_j^{2k-1}
  for (int j = 0; j < n; ++j) {
    std::vector<int> shifted = base;
    shifted[j] += 2 * k - 1;
    total -= engine.bracket(genus, shifted);
  }

  // boundary: 1/2 sum_i psi^i (-psi')^{2k-2-i}
  Rational boundary = 0;
  for (int i = 0; i <= 2 * k - 2; ++i) {
    const int sign = i % 2 == 0 ? 1 : -1;
    std::vector<int> with_pair = base;
    with_pair.push_back(i);
    with_pair.push_back(2 * k - 2 - i);
    Rational term = engine.bracket(genus - 1, with_pair);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> left{i};
      std::vector<int> right{2 * k - 2 - i};
      for (int j = 0; j < n; ++j) ((mask >> j) & 1u ? left : right).push_back(base[j]);
      for (int g1 = 0; g1 <= genus; ++g1) {
        Rational a = engine.bracket(g1, left);
        if (a == 0) continue;
        term += a * engine.bracket(genus - g1, right);
      }
    }
    boundary += sign > 0 ? term : Rational(-term);
  }
  total += boundary / 2;
  return total;
}

Rational ch_insertion(const TauEngine& engine, int genus, int k, std::span<const int> d) {
  const Rational sum = mumford_bracket_sum(engine, genus, k, d);
  return bernoulli(2 * k) / Rational(factorial(2 * k)) * sum;
}

Rational lambda_gg1_bracket(const TauEngine& engine, int genus, std::span<const int> d) {
  if (genus < 2) throw std::invalid_argument("lambda_gg1_bracket: genus must be >= 2");
  long excess = 0;
  for (int e : d) {
    if (e < 1) return 0;
    excess += e - 1;
  }
  if (excess != genus - 2) return 0;
  Rational value = ch_insertion(engine, genus, genus, d) * Rational(factorial(2 * genus - 1));
  if ((genus - 1) % 2 == 1) value = -value;
  return value;
}

Rational lambda_gg1_closed(int genus, std::span<const int> d) {
  if (genus < 2) throw std::invalid_argument("lambda_gg1_closed: genus must be >= 2");
  const long n = static_cast<long>(d.size());
  Integer denom = pow_ui(2, 2 * genus - 1) * factorial(2 * genus);
  for (int e : d) denom *= double_factorial(2 * e - 1);
  Rational r = abs(bernoulli(2 * genus)) * Rational(factorial(2 * genus - 3 + n), denom);
  r.canonicalize();
  return r;
}

Rational faber_kappa_constant(int genus) {
  if (genus < 2) throw std::invalid_argument("faber_kappa_constant: genus must be >= 2");
  Rational r = abs(bernoulli(2 * genus)) *
               Rational(factorial(genus - 1), pow_ui(2, genus) * factorial(2 * genus));
  r.canonicalize();
  return r;
}

Rational faber_kappa_sum_constant(int genus, std::span<const int> d) {
  const long n = static_cast<long>(d.size());
  Integer denom = factorial(2 * genus - 1);
  for (int e : d) denom *= double_factorial(2 * e + 1);
  Rational r(factorial(2 * genus - 3 + n) * double_factorial(2 * genus - 1), denom);
  r.canonicalize();
  return r;
}

}  // namespace tau
