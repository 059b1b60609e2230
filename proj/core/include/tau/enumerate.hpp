#pragma once

// Multiset enumeration in ascending canonical form.

#include <functional>
#include <vector>

namespace tau {

/// Calls fn on every nondecreasing sequence of `length` integers >= min_value
/// with the given sum, in lexicographic order.
inline void for_each_multiset_with_sum(int length, long sum, int min_value,
                                       const std::function<void(const std::vector<int>&)>& fn) {
  if (length < 0) return;
  if (length == 0) {
    if (sum == 0) fn({});
    return;
  }
  if (sum < static_cast<long>(length) * min_value) return;
  std::vector<int> cur;
  cur.reserve(static_cast<std::size_t>(length));
  std::function<void(int, long)> rec = [&](int lo, long remaining) {
    const int left = length - static_cast<int>(cur.size());
    if (left == 1) {
      if (remaining >= lo) {
        cur.push_back(static_cast<int>(remaining));
        fn(cur);
        cur.pop_back();
      }
      return;
    }
    for (long v = lo; v * left <= remaining; ++v) {
      cur.push_back(static_cast<int>(v));
      rec(static_cast<int>(v), remaining - v);
      cur.pop_back();
    }
  };
  rec(min_value, sum);
}

/// Calls fn on every nondecreasing sequence of `length` integers in [lo, hi].
inline void for_each_multiset_in_range(int length, int lo, int hi,
                                       const std::function<void(const std::vector<int>&)>& fn) {
  if (length < 0 || (length > 0 && hi < lo)) return;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == length) {
      fn(cur);
      return;
    }
    for (int v = from; v <= hi; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(lo);
}

}  // namespace tau
