#pragma once

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corepath/error.hpp"
#include "corepath/gap_poset.hpp"
#include "corepath/partition.hpp"

namespace corepath {

// The plane poset of the pair (2k+1, 2k+3) splits along the a = b diagonal
// into a left block (a > b, a + b <= 2k) and a right block (a <= b,
// a + b <= 2k - 1). The left block embeds unchanged into the upper half of
// an infinite strip poset Q = { 1 <= a - b <= 2k+2 }; the right block is
// reflected, order-reversed, into the lower half (a + b >= 2k+1). An ideal
// of the strip is encoded purely by its height profile: at position
// p = 2k+2 - (a-b), the height is the maximum of 2k+1 - a - b over ideal
// members on that diagonal. No part of the infinite strip is materialized.

enum class Side { left, right };

inline Side side_of(const PlaneCoord& c, Int k) {
  if (!in_twin_region(c, k))
    raise(errc::outside_poset, "(" + std::to_string(c.a) + "," + std::to_string(c.b) +
                                   ") is outside the plane poset for k=" + std::to_string(k));
  return c.a > c.b ? Side::left : Side::right;
}

/// i-th minimal element of the left block, (k+i, k-i), for 1 <= i <= k.
inline PlaneCoord minimal_left(Int i, Int k) {
  if (i < 1 || i > k) raise(errc::index_out_of_range, "left minimal index out of range");
  return PlaneCoord{k + i, k - i};
}

/// j-th minimal element of the right block, (j-1, 2k-j), for 1 <= j <= k.
inline PlaneCoord minimal_right(Int j, Int k) {
  if (j < 1 || j > k) raise(errc::index_out_of_range, "right minimal index out of range");
  return PlaneCoord{j - 1, 2 * k - j};
}

/// Plane position of the gap x for 1 <= x <= 2k: odd x land on left-block
/// minimal elements, even x on right-block ones.
inline PlaneCoord small_gap_coord(Int x, Int k) {
  if (x < 1 || x > 2 * k) raise(errc::index_out_of_range, "small gap out of range");
  return x % 2 == 1 ? minimal_left((x + 1) / 2, k) : minimal_right(x / 2, k);
}

/// True iff the coordinate ideal avoids both forbidden minimal pairs: the
/// i-th left and i-th right minimals together, or the i-th right and
/// (i+1)-th left minimals together. Equivalent to the integer ideal having
/// no two consecutive elements.
inline bool avoids_adjacent_minimal_pairs(std::span<const PlaneCoord> ideal_coords, Int k) {
  auto present = [&](const PlaneCoord& c) {
    return std::find(ideal_coords.begin(), ideal_coords.end(), c) != ideal_coords.end();
  };
  for (Int i = 1; i <= k; ++i)
    if (present(minimal_left(i, k)) && present(minimal_right(i, k))) return false;
  for (Int i = 1; i < k; ++i)
    if (present(minimal_right(i, k)) && present(minimal_left(i + 1, k))) return false;
  return true;
}

inline bool avoids_adjacent_minimal_pairs(const GapIdeal& ideal, Int k) {
  const CoprimePair pair = twin_pair(k);
  std::vector<PlaneCoord> coords;
  coords.reserve(ideal.size());
  for (Int x : ideal.elements()) coords.push_back(to_plane(x, pair));
  return avoids_adjacent_minimal_pairs(coords, k);
}

/// Identity embedding of the left block into the upper strip.
inline PlaneCoord embed_left(const PlaneCoord& c, Int k) {
  if (side_of(c, k) != Side::left) raise(errc::wrong_side, "embed_left needs a left-block point");
  return c;
}

/// Order-reversing reflection of the right block into the lower strip:
/// (a, b) -> (3k+1-b, k-1-a).
inline PlaneCoord reflect_right(const PlaneCoord& c, Int k) {
  if (side_of(c, k) != Side::right)
    raise(errc::wrong_side, "reflect_right needs a right-block point");
  return PlaneCoord{3 * k + 1 - c.b, k - 1 - c.a};
}

/// A proper non-empty strip ideal in height form: heights[p] for positions
/// 0..2k+1, alternating parity (heights[p] == p+1 mod 2), unit steps, with a
/// negative left end, non-negative right end, and end sum of absolute value
/// one.
struct BalancedIdeal {
  Int k = 0;
  std::vector<Int> heights;

  static BalancedIdeal make(Int k, std::vector<Int> heights) {
    if (k < 0) raise(errc::invalid_argument, "k must be non-negative");
    if (static_cast<Int>(heights.size()) != 2 * k + 2)
      raise(errc::invalid_height_sequence, "height sequence must have length 2k+2");
    for (std::size_t i = 0; i < heights.size(); ++i) {
      if (((heights[i] % 2) + 2) % 2 != static_cast<Int>((i + 1) % 2))
        raise(errc::invalid_height_sequence, "height parity must alternate with position");
      if (i > 0 && std::abs(heights[i] - heights[i - 1]) != 1)
        raise(errc::invalid_height_sequence, "heights must change by one per position");
    }
    if (heights.front() >= 0)
      raise(errc::invalid_height_sequence, "left height must be negative");
    if (heights.back() < 0)
      raise(errc::invalid_height_sequence, "right height must be non-negative");
    if (std::abs(heights.front() + heights.back()) != 1)
      raise(errc::invalid_height_sequence, "end heights must sum to plus or minus one");
    return BalancedIdeal{k, std::move(heights)};
  }

  friend bool operator==(const BalancedIdeal&, const BalancedIdeal&) = default;
};

/// A lattice path from the origin: steps U = (1,1) and D = (1,-1).
class LatticePath {
 public:
  LatticePath() = default;

  explicit LatticePath(std::string steps) : steps_(std::move(steps)) {
    for (char c : steps_)
      if (c != 'U' && c != 'D')
        raise(errc::invalid_argument, "path steps must be 'U' or 'D'");
  }

  static LatticePath parse(std::string_view text) { return LatticePath(std::string(text)); }

  const std::string& steps() const noexcept { return steps_; }
  Int length() const noexcept { return static_cast<Int>(steps_.size()); }

  Int endpoint() const noexcept {
    Int y = 0;
    for (char c : steps_) y += c == 'U' ? 1 : -1;
    return y;
  }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::string steps_;
};

/// Lexicographic path order with U before D.
inline bool path_lex_less(const LatticePath& lhs, const LatticePath& rhs) {
  auto rank = [](char c) { return c == 'U' ? 0 : 1; };
  const std::string& a = lhs.steps();
  const std::string& b = rhs.steps();
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) return rank(a[i]) < rank(b[i]);
  return a.size() < b.size();
}

/// Carries an adjacency-free order ideal of the gap poset of (2k+1, 2k+3)
/// into the balanced strip ideal: left-block members keep their heights, and
/// the reflected right-block members punch holes into the lower strip, whose
/// surviving top cell per diagonal is found by descending past the holes.
inline BalancedIdeal to_balanced_ideal(const GapIdeal& ideal, Int k) {
  const CoprimePair pair = twin_pair(k);
  for (Int x : ideal.elements())
    if (!is_gap(x, pair))
      raise(errc::not_an_order_ideal,
            std::to_string(x) + " is not a gap of (" + std::to_string(pair.s) + "," +
                std::to_string(pair.t) + ")");
  if (!is_order_ideal(ideal, pair))
    raise(errc::not_an_order_ideal, "input is not downward closed");
  const auto& elems = ideal.elements();
  for (std::size_t i = 0; i + 1 < elems.size(); ++i)
    if (elems[i] - elems[i + 1] == 1)
      raise(errc::adjacent_elements, "ideal contains adjacent integers " +
                                         std::to_string(elems[i + 1]) + " and " +
                                         std::to_string(elems[i]));

  std::set<std::pair<Int, Int>> holes;
  std::vector<Int> upper_best(static_cast<std::size_t>(2 * k + 2),
                              std::numeric_limits<Int>::min());
  for (Int x : elems) {
    const PlaneCoord c = to_plane(x, pair);
    if (side_of(c, k) == Side::left) {
      const auto p = static_cast<std::size_t>(2 * k + 2 - (c.a - c.b));
      upper_best[p] = std::max(upper_best[p], 2 * k + 1 - c.a - c.b);
    } else {
      const PlaneCoord r = reflect_right(c, k);
      holes.insert({r.a, r.b});
    }
  }

  std::vector<Int> heights(static_cast<std::size_t>(2 * k + 2));
  for (Int p = 0; p <= 2 * k + 1; ++p) {
    const Int diff = 2 * k + 2 - p;
    Int sum = p % 2 == 1 ? 2 * k + 1 : 2 * k + 2;  // top lower-strip cell on this diagonal
    while (holes.count({(sum + diff) / 2, (sum - diff) / 2}) != 0) sum += 2;
    heights[static_cast<std::size_t>(p)] = std::max(2 * k + 1 - sum, upper_best[static_cast<std::size_t>(p)]);
  }
  return BalancedIdeal::make(k, std::move(heights));
}

/// Inverse of to_balanced_ideal: upper-strip members recover left-block gaps
/// unchanged; lower-strip cells missing from the ideal recover right-block
/// gaps through the reflection.
inline GapIdeal from_balanced_ideal(const BalancedIdeal& ideal) {
  const Int k = ideal.k;
  const CoprimePair pair = twin_pair(k);
  std::vector<Int> out;
  for (Int p = 0; p <= 2 * k + 1; ++p) {
    const Int diff = 2 * k + 2 - p;
    const Int h = ideal.heights[static_cast<std::size_t>(p)];
    for (Int sum = 2 * k + 1 - h; sum <= 2 * k; sum += 2) {
      out.push_back(from_plane(PlaneCoord{(sum + diff) / 2, (sum - diff) / 2}, pair));
    }
    const Int top = p % 2 == 1 ? 2 * k + 1 : 2 * k + 2;
    for (Int sum = top; sum < 2 * k + 1 - h; sum += 2) {
      const PlaneCoord cell{(sum + diff) / 2, (sum - diff) / 2};
      out.push_back(from_plane(PlaneCoord{k - 1 - cell.b, 3 * k + 1 - cell.a}, pair));
    }
  }
  return GapIdeal(std::move(out));
}

/// Reads the path off the height profile: position i steps up when the
/// height rises. The endpoint height is heights.back() - heights.front(),
/// always odd and positive for balanced input.
inline LatticePath to_path(const BalancedIdeal& ideal) {
  std::string steps;
  steps.reserve(ideal.heights.size() - 1);
  for (std::size_t i = 1; i < ideal.heights.size(); ++i)
    steps.push_back(ideal.heights[i] > ideal.heights[i - 1] ? 'U' : 'D');
  return LatticePath(std::move(steps));
}

/// The unique balanced ideal tracing a given positive-ending path of length
/// 2k+1: shift the path's running heights down by 2*floor((d-1)/4) + 1 where
/// d is the endpoint height.
inline BalancedIdeal from_path(const LatticePath& path, Int k) {
  if (k < 0) raise(errc::invalid_argument, "k must be non-negative");
  if (path.length() != 2 * k + 1)
    raise(errc::length_mismatch, "path length " + std::to_string(path.length()) +
                                     " does not match 2k+1 = " + std::to_string(2 * k + 1));
  const Int d = path.endpoint();
  if (d <= 0)
    raise(errc::endpoint_not_positive,
          "path endpoint " + std::to_string(d) + " is not positive");
  const Int shift = -2 * ((d - 1) / 4) - 1;
  std::vector<Int> heights(static_cast<std::size_t>(2 * k + 2));
  Int y = 0;
  heights[0] = shift;
  for (Int i = 0; i < 2 * k + 1; ++i) {
    y += path.steps()[static_cast<std::size_t>(i)] == 'U' ? 1 : -1;
    heights[static_cast<std::size_t>(i + 1)] = y + shift;
  }
  return BalancedIdeal::make(k, std::move(heights));
}

/// Full pipeline: an (s, s+2)-core partition with distinct parts, s odd,
/// maps to the positive-ending path of length s traced by its beta set.
inline LatticePath partition_to_path(const Partition& p, Int s) {
  if (s < 1 || s % 2 == 0) raise(errc::invalid_argument, "s must be odd and positive");
  if (!has_distinct_parts(p)) raise(errc::parts_not_distinct, "parts not distinct");
  if (!is_simultaneous_core(p, {s, s + 2}))
    raise(errc::not_a_core, "not a (" + std::to_string(s) + "," + std::to_string(s + 2) +
                                ")-core: " + format_partition(p));
  const Int k = (s - 1) / 2;
  return to_path(to_balanced_ideal(GapIdeal(beta_set(p).hooks()), k));
}

/// Inverse pipeline: a positive-ending path of length s (odd) recovers the
/// unique (s, s+2)-core partition with distinct parts.
inline Partition path_to_partition(const LatticePath& path, Int s) {
  if (s < 1 || s % 2 == 0) raise(errc::invalid_argument, "s must be odd and positive");
  if (path.length() != s)
    raise(errc::length_mismatch, "path length " + std::to_string(path.length()) +
                                     " does not match s = " + std::to_string(s));
  const Int k = (s - 1) / 2;
  const GapIdeal ideal = from_balanced_ideal(from_path(path, k));
  return partition_from_beta_set(BetaSet(ideal.elements()));
}

}  // namespace corepath
