#pragma once

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "corepath/bijection.hpp"
#include "corepath/gap_poset.hpp"
#include "corepath/partition.hpp"
#include "corepath/trace.hpp"

namespace corepath {

struct CountReport {
  Int s = 0;
  Int observed = 0;
  Int expected = 0;
  bool match = false;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// All (s, s+2)-core partitions with distinct parts, via ideal enumeration of
/// the gap poset restricted to adjacency-free ideals. Order follows the
/// ideal enumeration: by cardinality, then lexicographically.
inline std::vector<Partition> enumerate_distinct_cores(Int s, Int guard = kDefaultIdealGuard) {
  if (s < 1 || s % 2 == 0) raise(errc::invalid_argument, "s must be odd and positive");
  const auto ideals = enumerate_ideals(CoprimePair::make(s, s + 2), /*no_adjacent=*/true, guard);
  std::vector<Partition> out;
  out.reserve(ideals.size());
  for (const auto& ideal : ideals) out.push_back(partition_from_beta_set(BetaSet(ideal.elements())));
  return out;
}

/// Known ceiling on the size of an (s, t)-core, used as the default filter
/// bound; callers may override it.
inline Int default_size_bound(Int s, Int t) { return (s * s - 1) * (t * t - 1) / 24; }

/// Independent second oracle: every partition of size at most max_n whose
/// hooks avoid multiples of s and t, found with no poset machinery at all.
///
/// Rows are grown bottom-up. A row's hooks depend only on the rows below it,
/// so they are final the moment the row is placed, and a prefix whose newest
/// row already has a forbidden hook can be discarded outright.
inline std::vector<Partition> direct_core_filter(Int s, Int t, Int max_n,
                                                 bool require_distinct = true) {
  if (s < 1 || t < 1) raise(errc::invalid_argument, "moduli must be positive");
  if (max_n < 0) raise(errc::invalid_argument, "size bound must be non-negative");

  std::vector<Partition> out;
  std::vector<Int> stacked;  // parts from the bottom row up, ascending

  auto row_ok = [&](Int part) {
    std::size_t idx = 0;  // first stacked row with part > j
    for (Int j = 0; j < part; ++j) {
      while (idx < stacked.size() && stacked[idx] <= j) ++idx;
      const Int hook = (part - j) + static_cast<Int>(stacked.size() - idx);
      if (hook % s == 0 || hook % t == 0) return false;
    }
    return true;
  };

  auto emit = [&]() {
    std::vector<Int> parts(stacked.rbegin(), stacked.rend());
    out.push_back(Partition(std::move(parts)));
  };

  auto rec = [&](auto&& self, Int sum) -> void {
    emit();
    const Int lo = stacked.empty() ? 1 : stacked.back() + (require_distinct ? 1 : 0);
    for (Int part = lo; sum + part <= max_n; ++part) {
      if (!row_ok(part)) continue;
      stacked.push_back(part);
      self(self, sum + part);
      stacked.pop_back();
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), [](const Partition& lhs, const Partition& rhs) {
    const Int ln = std::accumulate(lhs.parts().begin(), lhs.parts().end(), Int{0});
    const Int rn = std::accumulate(rhs.parts().begin(), rhs.parts().end(), Int{0});
    if (ln != rn) return ln < rn;
    return lhs.parts() < rhs.parts();
  });
  return out;
}

inline constexpr Int kPathEnumerationGuard = 21;

/// All length-s paths with positive endpoint, lexicographic with U before D.
inline std::vector<LatticePath> positive_paths(Int s) {
  if (s < 1) raise(errc::invalid_argument, "path length must be positive");
  if (s > kPathEnumerationGuard)
    raise(errc::guard_exceeded, "path enumeration capped at length " +
                                    std::to_string(kPathEnumerationGuard));
  std::vector<LatticePath> out;
  std::string cur;
  auto rec = [&](auto&& self, Int y) -> void {
    if (static_cast<Int>(cur.size()) == s) {
      if (y > 0) out.push_back(LatticePath(cur));
      return;
    }
    cur.push_back('U');
    self(self, y + 1);
    cur.back() = 'D';
    self(self, y - 1);
    cur.pop_back();
  };
  rec(rec, 0);
  return out;
}

/// Exhaustive count of positive-ending paths of odd length s; equals 2^(s-1).
inline Int count_positive_paths(Int s) {
  if (s < 1 || s % 2 == 0) raise(errc::invalid_argument, "s must be odd and positive");
  return static_cast<Int>(positive_paths(s).size());
}

/// Fibonacci numbers with F(1) = F(2) = 1.
inline Int fibonacci_number(Int n) {
  if (n < 1) raise(errc::invalid_argument, "fibonacci index must be positive");
  Int a = 1, b = 1;
  for (Int i = 3; i <= n; ++i) {
    const Int next = a + b;
    a = b;
    b = next;
  }
  return b;
}

/// Counts (s, s+1)-core partitions with distinct parts against the (s+1)-th
/// Fibonacci number.
inline CountReport fibonacci_crosscheck(Int s) {
  if (s < 1) raise(errc::invalid_argument, "s must be positive");
  const Int bound = default_size_bound(s, s + 1);
  const Int observed =
      static_cast<Int>(direct_core_filter(s, s + 1, bound, /*require_distinct=*/true).size());
  const Int expected = fibonacci_number(s + 1);
  return CountReport{s, observed, expected, observed == expected};
}

/// For each odd s up to max_s: enumerate the distinct-part cores, push every
/// instance through the pipeline in both directions, demand that the path
/// image is exactly the positive-ending path set, and report the count
/// against 2^(s-1). Any structural failure aborts with the offending
/// instance serialized as a JSON line.
inline std::vector<CountReport> verify_all(Int max_s, Int guard = kDefaultIdealGuard) {
  if (max_s < 1 || max_s % 2 == 0) raise(errc::invalid_argument, "max_s must be odd and positive");
  std::vector<CountReport> reports;
  for (Int s = 1; s <= max_s; s += 2) {
    const auto cores = enumerate_distinct_cores(s, guard);
    std::vector<std::string> produced;
    produced.reserve(cores.size());
    for (const auto& p : cores) {
      const LatticePath path = partition_to_path(p, s);
      if (!(path_to_partition(path, s) == p))
        raise(errc::verification_failed,
              instance_record(p, s, "partition does not survive the roundtrip"));
      produced.push_back(path.steps());
    }
    std::sort(produced.begin(), produced.end());
    for (std::size_t i = 0; i + 1 < produced.size(); ++i)
      if (produced[i] == produced[i + 1])
        raise(errc::verification_failed,
              R"({"reason":"two partitions map to the same path","s":)" + std::to_string(s) +
                  R"(,"path":")" + produced[i] + "\"}");
    std::vector<std::string> expected_paths;
    for (const auto& path : positive_paths(s)) expected_paths.push_back(path.steps());
    std::sort(expected_paths.begin(), expected_paths.end());
    if (produced != expected_paths)
      raise(errc::verification_failed,
            R"({"reason":"path image differs from the positive-ending path set","s":)" +
                std::to_string(s) + "}");
    for (const auto& path : positive_paths(s)) {
      const Partition pre = path_to_partition(path, s);
      if (!(partition_to_path(pre, s) == path))
        raise(errc::verification_failed,
              instance_record(pre, s, "path does not survive the mirrored roundtrip"));
    }
    const Int observed = static_cast<Int>(cores.size());
    const Int expected = Int{1} << (s - 1);
    reports.push_back(CountReport{s, observed, expected, observed == expected});
  }
  return reports;
}

/// Fixed-width rendering of count reports.
inline std::string format_report_table(const std::vector<CountReport>& reports) {
  std::string out = "     s    observed    expected  match\n";
  char line[96];
  for (const auto& r : reports) {
    std::snprintf(line, sizeof(line), "%6lld %11lld %11lld  %s\n", static_cast<long long>(r.s),
                  static_cast<long long>(r.observed), static_cast<long long>(r.expected),
                  r.match ? "yes" : "NO");
    out += line;
  }
  return out;
}

inline std::string report_json_line(const CountReport& r) {
  ordered_json record;
  record["s"] = r.s;
  record["observed"] = r.observed;
  record["expected"] = r.expected;
  record["match"] = r.match;
  return record.dump();
}

}  // namespace corepath
