#include "tau/tau_engine.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tau {

TauKey::TauKey(int g, std::vector<int> d) : genus(g), exponents(std::move(d)) {
  std::sort(exponents.begin(), exponents.end());
}

bool TauKey::dimension_ok() const {
  const long sum = std::accumulate(exponents.begin(), exponents.end(), 0L);
  return sum == 3L * genus - 3 + points();
}

bool operator<(const TauKey& a, const TauKey& b) {
  if (a.genus != b.genus) return a.genus < b.genus;
  if (a.exponents.size() != b.exponents.size()) return a.exponents.size() < b.exponents.size();
  return a.exponents < b.exponents;
}

std::size_t TauKeyHash::operator()(const TauKey& key) const noexcept {
  std::size_t h = std::hash<int>{}(key.genus) * 0x9e3779b97f4a7c15ULL;
  for (int e : key.exponents) {
    h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

BracketTable::BracketTable(const BracketTable& other) {
  std::shared_lock lock(other.mutex_);
  map_ = other.map_;
}

BracketTable& BracketTable::operator=(const BracketTable& other) {
  if (this == &other) return *this;
  std::unordered_map<TauKey, Rational, TauKeyHash> copy;
  {
    std::shared_lock lock(other.mutex_);
    copy = other.map_;
  }
  std::unique_lock lock(mutex_);
  map_ = std::move(copy);
  return *this;
}

std::optional<Rational> BracketTable::find(const TauKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void BracketTable::insert(const TauKey& key, const Rational& value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = map_.try_emplace(key, value);
  if (!inserted && it->second != value) {
    throw std::logic_error("BracketTable: conflicting values for the same key");
  }
}

std::size_t BracketTable::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

void BracketTable::clear() {
  std::unique_lock lock(mutex_);
  map_.clear();
}

std::vector<std::pair<TauKey, Rational>> BracketTable::entries() const {
  std::vector<std::pair<TauKey, Rational>> out;
  {
    std::shared_lock lock(mutex_);
    out.assign(map_.begin(), map_.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool operator==(const BracketTable& a, const BracketTable& b) {
  return a.entries() == b.entries();
}

Rational genus0_closed(std::span<const int> d) {
  const long n = static_cast<long>(d.size());
  if (n < 3) return 0;
  long sum = 0;
  Integer denom = 1;
  for (int e : d) {
    if (e < 0) return 0;
    sum += e;
    denom *= factorial(e);
  }
  if (sum != n - 3) return 0;
  Rational r(factorial(n - 3), denom);
  r.canonicalize();
  return r;
}

Rational one_point(int genus) {
  if (genus < 1) {
    throw std::invalid_argument("one_point: genus must be >= 1 (no stable 1-pointed genus-0 space)");
  }
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 24, static_cast<unsigned long>(genus));
  return Rational(1, power * factorial(genus));
}

TauEngine::TauEngine(EngineOptions options, std::shared_ptr<BracketTable> table)
    : options_(options), table_(std::move(table)) {
  if (!table_) table_ = std::make_shared<BracketTable>();
}

Rational TauEngine::bracket(int genus, std::span<const int> d) const {
  if (genus < 0) return 0;
  if (std::any_of(d.begin(), d.end(), [](int e) { return e < 0; })) return 0;
  return evaluate(TauKey(genus, std::vector<int>(d.begin(), d.end())));
}

Rational TauEngine::lookup(int genus, std::vector<int> d) const {
  if (genus < 0) return 0;
  for (int e : d) {
    if (e < 0) return 0;
  }
  return evaluate(TauKey(genus, std::move(d)));
}

Rational TauEngine::evaluate(const TauKey& key) const {
  if (!key.stable() || !key.dimension_ok()) return 0;
  if (key.genus == 0 && options_.genus0_closed_form) return genus0_closed(key.exponents);
  if (options_.memoize) {
    if (auto hit = table_->find(key)) return *hit;
  }
  Rational value = dvv(key);
  if (options_.memoize) table_->insert(key, value);
  return value;
}

namespace {

// Distinct exponents with multiplicities, from an ascending list.
std::vector<std::pair<int, int>> group(const std::vector<int>& sorted) {
  std::vector<std::pair<int, int>> out;
  for (int e : sorted) {
    if (!out.empty() && out.back().first == e) {
      ++out.back().second;
    } else {
      out.emplace_back(e, 1);
    }
  }
  return out;
}

}  // namespace

Rational TauEngine::dvv(const TauKey& key) const {
  const int g = key.genus;
  const auto& d = key.exponents;

  // Base cases: <tau_0^3>_0 = 1; <tau_1>_1 = 1/24 is the genus-one seed (the
  // recursion has no term producing it; it is forced by applying the k = 1
  // step to <tau_0 tau_2>_1 together with the string equation).
  if (g == 0 && d.size() == 3 && d.back() == 0) return 1;
  if (g == 1 && d.size() == 1) return Rational(1, 24);

  // Pivot selection. Stability and the dimension constraint guarantee an
  // exponent >= 1 exists.
  std::size_t pivot = d.size();
  if (options_.pivot == Pivot::Largest) {
    pivot = d.size() - 1;
  } else {
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] >= 1) {
        pivot = i;
        break;
      }
    }
  }
  if (pivot >= d.size() || d[pivot] < 1) {
    throw std::logic_error("dvv: no exponent >= 1 in a dimension-consistent key");
  }

  const int k = d[pivot] - 1;
  std::vector<int> rest;
  rest.reserve(d.size() - 1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i != pivot) rest.push_back(d[i]);
  }
  const auto groups = group(rest);

  Rational total = 0;

  // Descent: sum_j (2k+2d_j+1)!!/(2d_j-1)!! <... tau_{d_j+k} ...>_g
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto [value, mult] = groups[gi];
    std::vector<int> shifted = rest;
    auto it = std::find(shifted.begin(), shifted.end(), value);
    *it = value + k;
    Rational coeff(double_factorial(2 * k + 2 * value + 1) * mult, double_factorial(2 * value - 1));
    coeff.canonicalize();
    total += coeff * lookup(g, std::move(shifted));
  }

  // Boundary terms share the (2r+1)!!(2s+1)!! weights, r + s = k - 1.
  Rational boundary = 0;
  for (int r = 0; r <= k - 1; ++r) {
    const int s = k - 1 - r;
    const Integer weight = double_factorial(2 * r + 1) * double_factorial(2 * s + 1);

    // Irreducible: <tau_r tau_s prod tau_d>_{g-1}
    Rational term = 0;
    if (g >= 1) {
      std::vector<int> with_pair = rest;
      with_pair.push_back(r);
      with_pair.push_back(s);
      term += lookup(g - 1, std::move(with_pair));
    }

    // Reducible: sum over ordered I |_| J of the remaining points. Enumerated
    // as sub-multisets weighted by prod C(mult, chosen); the genus split is
    // fixed by the dimension constraint of the left factor.
    std::vector<int> chosen(groups.size(), 0);
    while (true) {
      Integer ways = 1;
      std::vector<int> left{r};
      std::vector<int> right{s};
      long left_sum = r;
      for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const auto [value, mult] = groups[gi];
        ways *= binomial(mult, chosen[gi]);
        for (int c = 0; c < chosen[gi]; ++c) left.push_back(value);
        for (int c = chosen[gi]; c < mult; ++c) right.push_back(value);
        left_sum += static_cast<long>(value) * chosen[gi];
      }
      const long left_points = static_cast<long>(left.size());
      const long shifted = left_sum + 3 - left_points;  // = 3 g'
      if (shifted >= 0 && shifted % 3 == 0 && shifted / 3 <= g) {
        const int g_left = static_cast<int>(shifted / 3);
        Rational a = lookup(g_left, std::move(left));
        if (a != 0) {
          Rational b = lookup(g - g_left, std::move(right));
          term += a * b * ways;
        }
      }
      // next sub-multiset
      std::size_t pos = 0;
      while (pos < groups.size() && chosen[pos] == groups[pos].second) {
        chosen[pos] = 0;
        ++pos;
      }
      if (pos == groups.size()) break;
      ++chosen[pos];
    }
    boundary += term * weight;
  }
  total += boundary / 2;
  total /= double_factorial(2 * k + 3);
  return total;
}

}  // namespace tau
