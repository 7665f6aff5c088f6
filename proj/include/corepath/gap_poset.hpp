#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "corepath/error.hpp"
#include "corepath/partition.hpp"

namespace corepath {

/// A coprime pair s < t together with its Frobenius number st - s - t, the
/// largest integer not expressible as a non-negative combination of s and t.
/// For s = 1 the Frobenius number is negative and the gap set is empty.
struct CoprimePair {
  Int s = 0;
  Int t = 0;
  Int frobenius = 0;

  static CoprimePair make(Int s, Int t) {
    if (s < 1 || t <= s) raise(errc::invalid_argument, "need 1 <= s < t");
    if (std::gcd(s, t) != 1) raise(errc::invalid_argument, "s and t must be coprime");
    return CoprimePair{s, t, s * t - s - t};
  }
};

/// The pair (2k+1, 2k+3) the path bijection is built on.
inline CoprimePair twin_pair(Int k) {
  if (k < 0) raise(errc::invalid_argument, "k must be non-negative");
  return CoprimePair::make(2 * k + 1, 2 * k + 3);
}

/// A point of the plane form of the gap poset. Every gap x has a unique
/// representation x = frobenius - a*s - b*t with a, b >= 0, and the poset
/// order is reversed componentwise: larger coordinates mean a smaller
/// element. The same struct doubles as a cell of the infinite strip poset,
/// where b may be negative.
struct PlaneCoord {
  Int a = 0;
  Int b = 0;

  friend bool operator==(const PlaneCoord&, const PlaneCoord&) = default;
  friend auto operator<=>(const PlaneCoord&, const PlaneCoord&) = default;
};

/// All non-negative integers not representable as a*s + b*t, ascending.
/// There are (s-1)(t-1)/2 of them and the largest is the Frobenius number.
inline std::vector<Int> gaps(const CoprimePair& pair) {
  if (pair.frobenius < 0) return {};
  std::vector<char> representable(static_cast<std::size_t>(pair.frobenius) + 1, 0);
  representable[0] = 1;
  for (Int n = 0; n <= pair.frobenius; ++n) {
    if (!representable[static_cast<std::size_t>(n)]) continue;
    if (n + pair.s <= pair.frobenius) representable[static_cast<std::size_t>(n + pair.s)] = 1;
    if (n + pair.t <= pair.frobenius) representable[static_cast<std::size_t>(n + pair.t)] = 1;
  }
  std::vector<Int> out;
  for (Int n = 1; n <= pair.frobenius; ++n)
    if (!representable[static_cast<std::size_t>(n)]) out.push_back(n);
  return out;
}

/// Membership test via the unique-representation scan: x is a gap iff
/// frobenius - x - b*t is a non-negative multiple of s for some 0 <= b < s.
inline bool is_gap(Int x, const CoprimePair& pair) {
  if (x < 1) return false;
  for (Int b = 0; b < pair.s; ++b) {
    const Int rem = pair.frobenius - x - b * pair.t;
    if (rem < 0) break;
    if (rem % pair.s == 0) return true;
  }
  return false;
}

/// The unique (a, b) with x = frobenius - a*s - b*t. At most one b in
/// [0, s) can make the remainder divisible, so a linear scan suffices.
inline PlaneCoord to_plane(Int x, const CoprimePair& pair) {
  if (x >= 1) {
    for (Int b = 0; b < pair.s; ++b) {
      const Int rem = pair.frobenius - x - b * pair.t;
      if (rem < 0) break;
      if (rem % pair.s == 0) return PlaneCoord{rem / pair.s, b};
    }
  }
  raise(errc::not_a_gap, std::to_string(x) + " is not a gap of (" + std::to_string(pair.s) +
                             "," + std::to_string(pair.t) + ")");
}

inline bool in_plane_poset(const PlaneCoord& c, const CoprimePair& pair) {
  return c.a >= 0 && c.b >= 0 && c.a * pair.s + c.b * pair.t <= pair.frobenius;
}

inline Int from_plane(const PlaneCoord& c, const CoprimePair& pair) {
  if (!in_plane_poset(c, pair))
    raise(errc::outside_poset, "(" + std::to_string(c.a) + "," + std::to_string(c.b) +
                                   ") is outside the plane poset of (" + std::to_string(pair.s) +
                                   "," + std::to_string(pair.t) + ")");
  return pair.frobenius - c.a * pair.s - c.b * pair.t;
}

/// Closed-form membership for the pair (2k+1, 2k+3): a + b <= 2k - 1 when
/// b >= k, and a + b <= 2k otherwise. Agrees with in_plane_poset.
inline bool in_twin_region(const PlaneCoord& c, Int k) {
  if (k < 0) raise(errc::invalid_argument, "k must be non-negative");
  if (c.a < 0 || c.b < 0) return false;
  return c.b >= k ? c.a + c.b <= 2 * k - 1 : c.a + c.b <= 2 * k;
}

/// x covers y iff their difference is s or t.
inline bool covers(Int x, Int y, const CoprimePair& pair) {
  if (!is_gap(x, pair) || !is_gap(y, pair))
    raise(errc::not_a_gap, "covers arguments must both be gaps");
  return x - y == pair.s || x - y == pair.t;
}

/// A finite subset of the gap poset, stored strictly decreasing. Producers
/// such as enumerate_ideals emit genuinely downward-closed sets; consumers
/// revalidate with is_order_ideal where closure matters.
class GapIdeal {
 public:
  GapIdeal() = default;

  explicit GapIdeal(std::vector<Int> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end(), std::greater<Int>());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i] < 1) raise(errc::invalid_argument, "ideal elements must be positive");
      if (i > 0 && elems_[i - 1] == elems_[i])
        raise(errc::invalid_argument, "ideal elements must be distinct");
    }
  }

  const std::vector<Int>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }

  bool contains(Int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x, std::greater<Int>());
  }

  friend bool operator==(const GapIdeal&, const GapIdeal&) = default;

 private:
  std::vector<Int> elems_;
};

/// Text format: comma-separated decreasing integers or "empty"; braces accepted.
inline GapIdeal parse_gap_ideal(std::string_view text) {
  return GapIdeal(detail::parse_int_list(text, errc::invalid_argument, "ideal"));
}

inline std::string format_gap_ideal(const GapIdeal& ideal) {
  return detail::format_int_list(ideal.elements());
}

/// Downward closure check: every element must be a gap whose covered
/// neighbours (x - s and x - t, when gaps) are also present. Transitive
/// closure follows by induction on the element value.
inline bool is_order_ideal(const GapIdeal& candidate, const CoprimePair& pair) {
  for (Int x : candidate.elements()) {
    if (!is_gap(x, pair))
      raise(errc::not_a_gap, "candidate contains " + std::to_string(x) + ", which is not a gap");
    for (Int d : {pair.s, pair.t}) {
      const Int y = x - d;
      if (y >= 1 && is_gap(y, pair) && !candidate.contains(y)) return false;
    }
  }
  return true;
}

/// Default ceiling on (s-1)(t-1)/2 for ideal enumeration.
inline constexpr Int kDefaultIdealGuard = 120;

/// All order ideals of the gap poset, optionally restricted to those with no
/// two consecutive integers. Output is sorted by (cardinality, lexicographic
/// decreasing element list) for reproducible listings.
///
/// Enumeration walks elements in decreasing integer order (a linear extension
/// from the top): excluding an element constrains nothing below it, while
/// including one forces its entire down-set in, so every ideal is produced
/// exactly once.
inline std::vector<GapIdeal> enumerate_ideals(const CoprimePair& pair, bool no_adjacent,
                                              Int guard = kDefaultIdealGuard) {
  const Int poset_size = (pair.s - 1) * (pair.t - 1) / 2;
  if (poset_size > guard)
    raise(errc::guard_exceeded, "gap poset has " + std::to_string(poset_size) +
                                    " elements, above the enumeration guard of " +
                                    std::to_string(guard));
  const std::vector<Int> ascending = gaps(pair);
  const int m = static_cast<int>(ascending.size());
  std::vector<Int> value(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) value[static_cast<std::size_t>(i)] = ascending[static_cast<std::size_t>(m - 1 - i)];

  auto index_of = [&](Int v) -> int {
    const auto it = std::lower_bound(ascending.begin(), ascending.end(), v);
    return m - 1 - static_cast<int>(it - ascending.begin());
  };

  // cover-children by index: the elements each value sits directly above
  std::vector<std::vector<int>> children(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (Int d : {pair.s, pair.t}) {
      const Int below = value[static_cast<std::size_t>(i)] - d;
      if (below >= 1 && std::binary_search(ascending.begin(), ascending.end(), below))
        children[static_cast<std::size_t>(i)].push_back(index_of(below));
    }
  }

  std::vector<signed char> chosen(static_cast<std::size_t>(m), 0);
  std::vector<char> member(static_cast<std::size_t>(std::max<Int>(pair.frobenius, 0)) + 2, 0);
  std::vector<GapIdeal> out;

  // forces the down-set of element i into the ideal; fails under the
  // no-adjacent restriction when a forced value touches a present neighbour
  auto include_downset = [&](int i, std::vector<int>& changed) -> bool {
    std::vector<int> stack{i};
    bool ok = true;
    while (!stack.empty()) {
      const int j = stack.back();
      stack.pop_back();
      if (chosen[static_cast<std::size_t>(j)] == 1) continue;
      chosen[static_cast<std::size_t>(j)] = 1;
      changed.push_back(j);
      const Int v = value[static_cast<std::size_t>(j)];
      if (no_adjacent && (member[static_cast<std::size_t>(v - 1)] || member[static_cast<std::size_t>(v + 1)])) {
        ok = false;
        break;
      }
      member[static_cast<std::size_t>(v)] = 1;
      for (int child : children[static_cast<std::size_t>(j)]) stack.push_back(child);
    }
    return ok;
  };

  auto undo = [&](const std::vector<int>& changed) {
    for (int j : changed) {
      chosen[static_cast<std::size_t>(j)] = 0;
      member[static_cast<std::size_t>(value[static_cast<std::size_t>(j)])] = 0;
    }
  };

  auto emit = [&]() {
    std::vector<Int> elems;
    for (int i = 0; i < m; ++i)
      if (chosen[static_cast<std::size_t>(i)] == 1) elems.push_back(value[static_cast<std::size_t>(i)]);
    out.push_back(GapIdeal(std::move(elems)));
  };

  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      emit();
      return;
    }
    if (chosen[static_cast<std::size_t>(i)] == 1) {
      self(self, i + 1);
      return;
    }
    // leave it out: nothing below is constrained
    chosen[static_cast<std::size_t>(i)] = -1;
    self(self, i + 1);
    chosen[static_cast<std::size_t>(i)] = 0;
    // take it: close downward
    std::vector<int> changed;
    if (include_downset(i, changed)) self(self, i + 1);
    undo(changed);
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), [](const GapIdeal& lhs, const GapIdeal& rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return lhs.elements() < rhs.elements();
  });
  return out;
}

}  // namespace corepath
