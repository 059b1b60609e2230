#pragma once

// Pure psi-class intersection numbers <tau_{d_1} ... tau_{d_n}>_g.
//
// Genus zero uses the closed form (n-3)!/prod d_j!. Higher genus runs the
// DVV recursion with memoization in a BracketTable that can be shared between
// threads and persisted to disk (see cache_io.hpp).

#include "tau/exact.hpp"

#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tau {

/// Canonical bracket key: genus plus ascending exponent multiset.
struct TauKey {
  int genus = 0;
  std::vector<int> exponents;

  TauKey() = default;
  TauKey(int g, std::vector<int> d);

  int points() const { return static_cast<int>(exponents.size()); }
  bool stable() const { return 2 * genus - 2 + points() > 0; }
  bool dimension_ok() const;

  friend bool operator==(const TauKey&, const TauKey&) = default;
  /// Orders by (genus, n, exponents) -- the cache file order.
  friend bool operator<(const TauKey& a, const TauKey& b);
};

struct TauKeyHash {
  std::size_t operator()(const TauKey& key) const noexcept;
};

/// Thread-safe memo table. Concurrent readers; per-key insertion is
/// idempotent (a second insert of the same key must carry an equal value).
class BracketTable {
 public:
  static constexpr const char* kVersionTag = "TAUCACHE v1";

  BracketTable() = default;
  BracketTable(const BracketTable& other);
  BracketTable& operator=(const BracketTable& other);

  std::optional<Rational> find(const TauKey& key) const;

  /// Inserts or confirms a value. Throws std::logic_error if the key is
  /// already present with a different value.
  void insert(const TauKey& key, const Rational& value);

  std::size_t size() const;
  void clear();

  std::size_t hits() const { return hits_.load(std::memory_order_relaxed); }
  std::size_t misses() const { return misses_.load(std::memory_order_relaxed); }

  /// All entries, sorted by key.
  std::vector<std::pair<TauKey, Rational>> entries() const;

  friend bool operator==(const BracketTable& a, const BracketTable& b);

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<TauKey, Rational, TauKeyHash> map_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

enum class Pivot {
  Largest,          ///< descend on the largest exponent
  SmallestPositive  ///< descend on the smallest exponent >= 1
};

struct EngineOptions {
  Pivot pivot = Pivot::Largest;
  bool memoize = true;
  /// When false, genus 0 is also computed by DVV (used to cross-check the closed form).
  bool genus0_closed_form = true;
};

/// Evaluates brackets. Copies share the underlying table.
class TauEngine {
 public:
  explicit TauEngine(EngineOptions options = {},
                     std::shared_ptr<BracketTable> table = std::make_shared<BracketTable>());

  /// Total function: 0 for negative exponents, unstable (g, n) or a
  /// dimension mismatch; the intersection number otherwise.
  Rational bracket(int genus, std::span<const int> d) const;
  Rational bracket(int genus, std::initializer_list<int> d) const {
    return bracket(genus, std::span<const int>(d.begin(), d.size()));
  }

  const EngineOptions& options() const { return options_; }
  BracketTable& table() const { return *table_; }
  std::shared_ptr<BracketTable> shared_table() const { return table_; }

 private:
  Rational evaluate(const TauKey& key) const;
  Rational lookup(int genus, std::vector<int> d) const;
  Rational dvv(const TauKey& key) const;

  EngineOptions options_;
  std::shared_ptr<BracketTable> table_;
};

/// (n-3)!/prod d_j! when sum d = n - 3 and n >= 3, else 0.
Rational genus0_closed(std::span<const int> d);

/// <tau_{3g-2}>_g = 1/(24^g g!). Throws std::invalid_argument for g < 1.
Rational one_point(int genus);

}  // namespace tau
