#pragma once

// Naive reference implementations used as independent oracles. Everything
// here recomputes results from definitions, deliberately avoiding the code
// paths under test: hooks come from the conjugate partition, gap sets from a
// double loop over coefficients, ideals from raw subset filtering.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "corepath/corepath.hpp"

namespace testutil {

using corepath::Int;

inline std::vector<std::vector<Int>> partitions_of(Int n) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur;
  auto rec = [&](auto&& self, Int remaining, Int max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (Int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline std::vector<std::vector<Int>> partitions_up_to(Int max_n) {
  std::vector<std::vector<Int>> out;
  for (Int n = 0; n <= max_n; ++n) {
    auto batch = partitions_of(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

inline std::vector<Int> conjugate(const std::vector<Int>& parts) {
  if (parts.empty()) return {};
  std::vector<Int> conj(static_cast<std::size_t>(parts[0]), 0);
  for (Int part : parts)
    for (Int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
  return conj;
}

// hook via arm + leg, with the leg read off the conjugate partition
inline std::vector<std::vector<Int>> hooks_via_conjugate(const std::vector<Int>& parts) {
  const std::vector<Int> conj = conjugate(parts);
  std::vector<std::vector<Int>> out(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out[i].resize(static_cast<std::size_t>(parts[i]));
    for (Int j = 0; j < parts[i]; ++j) {
      const Int arm = parts[i] - j - 1;
      const Int leg = conj[static_cast<std::size_t>(j)] - static_cast<Int>(i) - 1;
      out[i][static_cast<std::size_t>(j)] = arm + leg + 1;
    }
  }
  return out;
}

inline bool naive_is_core(const std::vector<Int>& parts, std::vector<Int> moduli) {
  for (const auto& row : hooks_via_conjugate(parts))
    for (Int h : row)
      for (Int a : moduli)
        if (h % a == 0) return false;
  return true;
}

inline std::vector<Int> naive_gaps(Int s, Int t) {
  const Int frobenius = s * t - s - t;
  if (frobenius < 1) return {};
  std::set<Int> representable;
  for (Int a = 0; a * s <= frobenius; ++a)
    for (Int b = 0; a * s + b * t <= frobenius; ++b) representable.insert(a * s + b * t);
  std::vector<Int> out;
  for (Int n = 1; n <= frobenius; ++n)
    if (representable.count(n) == 0) out.push_back(n);
  return out;
}

// all downward-closed subsets by raw filtering; only usable for tiny posets
inline std::vector<std::set<Int>> naive_ideals(Int s, Int t) {
  const std::vector<Int> gap_list = naive_gaps(s, t);
  const std::set<Int> gap_set(gap_list.begin(), gap_list.end());
  REQUIRE(gap_list.size() <= 20);
  std::vector<std::set<Int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gap_list.size()); ++mask) {
    std::set<Int> subset;
    for (std::size_t i = 0; i < gap_list.size(); ++i)
      if (mask >> i & 1) subset.insert(gap_list[i]);
    bool closed = true;
    for (Int x : subset)
      for (Int d : {s, t})
        if (gap_set.count(x - d) != 0 && subset.count(x - d) == 0) closed = false;
    if (closed) out.push_back(std::move(subset));
  }
  return out;
}

inline bool has_adjacent(const std::set<Int>& values) {
  for (Int v : values)
    if (values.count(v + 1) != 0) return true;
  return false;
}

// poset order by downward cover search
inline bool naive_below(Int lower, Int upper, Int s, Int t, const std::set<Int>& gap_set) {
  if (lower == upper) return true;
  std::vector<Int> stack{upper};
  std::set<Int> seen;
  while (!stack.empty()) {
    const Int x = stack.back();
    stack.pop_back();
    for (Int d : {s, t}) {
      const Int y = x - d;
      if (gap_set.count(y) == 0 || !seen.insert(y).second) continue;
      if (y == lower) return true;
      stack.push_back(y);
    }
  }
  return false;
}

inline Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (Int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

template <typename Fn>
corepath::errc thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const corepath::error& e) {
    return e.code();
  }
  FAIL("expected a corepath::error");
  return corepath::errc::invalid_argument;
}

}  // namespace testutil
