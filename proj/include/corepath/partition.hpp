#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corepath/error.hpp"

namespace corepath {

using Int = std::int64_t;

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is a first-class value and flows through every pipeline stage.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) raise(errc::invalid_partition, "partition parts must be positive");
      if (i > 0 && parts_[i - 1] < parts_[i])
        raise(errc::invalid_partition, "partition parts must be weakly decreasing");
    }
  }

  const std::vector<Int>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Int> parts_;
};

/// First-column hook lengths of a partition: strictly decreasing positive
/// integers, one per part.
class BetaSet {
 public:
  BetaSet() = default;

  explicit BetaSet(std::vector<Int> hooks) : hooks_(std::move(hooks)) {
    for (std::size_t i = 0; i < hooks_.size(); ++i) {
      if (hooks_[i] < 1) raise(errc::invalid_beta_set, "beta set entries must be positive");
      if (i > 0 && hooks_[i - 1] <= hooks_[i])
        raise(errc::invalid_beta_set, "beta set entries must be strictly decreasing");
    }
  }

  const std::vector<Int>& hooks() const noexcept { return hooks_; }
  std::size_t size() const noexcept { return hooks_.size(); }
  bool empty() const noexcept { return hooks_.empty(); }

  friend bool operator==(const BetaSet&, const BetaSet&) = default;

 private:
  std::vector<Int> hooks_;
};

/// Hook length of each cell, one row per part. Entry (i, j) counts the cells
/// to the right, the cells below, and the cell itself. Computed from the
/// column-count formula: rows below row i contribute one cell in column j
/// exactly when their part exceeds j.
inline std::vector<std::vector<Int>> hook_lengths(const Partition& p) {
  const auto& parts = p.parts();
  const std::size_t rows = parts.size();
  std::vector<std::vector<Int>> hooks(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    hooks[i].resize(static_cast<std::size_t>(parts[i]));
    // one past the last row whose part exceeds column j; parts are weakly
    // decreasing, so this pointer only moves left as j grows
    std::size_t below = rows;
    for (Int j = 0; j < parts[i]; ++j) {
      while (below > i + 1 && parts[below - 1] <= j) --below;
      const Int rows_below = static_cast<Int>(below) - static_cast<Int>(i) - 1;
      hooks[i][static_cast<std::size_t>(j)] = (parts[i] - j - 1) + rows_below + 1;
    }
  }
  return hooks;
}

/// True iff no hook length of p is divisible by a.
inline bool is_core(const Partition& p, Int a) {
  if (a < 1) raise(errc::invalid_argument, "core modulus must be positive");
  const auto hooks = hook_lengths(p);
  for (const auto& row : hooks)
    for (Int h : row)
      if (h % a == 0) return false;
  return true;
}

inline bool is_simultaneous_core(const Partition& p, std::span<const Int> moduli) {
  return std::all_of(moduli.begin(), moduli.end(), [&](Int a) { return is_core(p, a); });
}

inline bool is_simultaneous_core(const Partition& p, std::initializer_list<Int> moduli) {
  return is_simultaneous_core(p, std::span<const Int>(moduli.begin(), moduli.size()));
}

inline bool has_distinct_parts(const Partition& p) {
  const auto& parts = p.parts();
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] == parts[i + 1]) return false;
  return true;
}

/// The first column of the hook matrix: hooks[i] = parts[i] + (rows - 1 - i).
inline BetaSet beta_set(const Partition& p) {
  const auto& parts = p.parts();
  const Int rows = static_cast<Int>(parts.size());
  std::vector<Int> hooks(parts.size());
  for (Int i = 0; i < rows; ++i)
    hooks[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (rows - 1 - i);
  return BetaSet(std::move(hooks));
}

/// Inverse of beta_set: part i = hooks[i] - (rows - 1 - i). Strict decrease of
/// the input guarantees the output is a valid partition.
inline Partition partition_from_beta_set(const BetaSet& b) {
  const auto& hooks = b.hooks();
  const Int rows = static_cast<Int>(hooks.size());
  std::vector<Int> parts(hooks.size());
  for (Int i = 0; i < rows; ++i)
    parts[static_cast<std::size_t>(i)] = hooks[static_cast<std::size_t>(i)] - (rows - 1 - i);
  return Partition(std::move(parts));
}

/// True iff no two entries of b differ by exactly one. Equivalent to the
/// originating partition having distinct parts.
inline bool beta_gap_test(const BetaSet& b) {
  const auto& hooks = b.hooks();
  for (std::size_t i = 0; i + 1 < hooks.size(); ++i)
    if (hooks[i] - hooks[i + 1] == 1) return false;
  return true;
}

namespace detail {

inline std::vector<Int> parse_int_list(std::string_view text, errc code, const char* what) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '{' && text.back() == '}') {
    text.remove_prefix(1);
    text.remove_suffix(1);
    text = trim(text);
  }
  if (text == "empty") return {};
  if (text.empty()) raise(code, std::string(what) + ": empty input (use the token \"empty\")");
  std::vector<Int> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view token = trim(text.substr(start, comma - start));
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      raise(code, std::string(what) + ": bad integer token \"" + std::string(token) + "\"");
    values.push_back(value);
    if (comma == text.size()) break;
    start = comma + 1;
  }
  return values;
}

inline std::string format_int_list(const std::vector<Int>& values) {
  if (values.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace detail

/// Text format: comma-separated decreasing integers ("15,7,6,3,1") or "empty".
inline Partition parse_partition(std::string_view text) {
  return Partition(detail::parse_int_list(text, errc::invalid_partition, "partition"));
}

inline std::string format_partition(const Partition& p) {
  return detail::format_int_list(p.parts());
}

/// Same convention as partitions; surrounding braces are accepted.
inline BetaSet parse_beta_set(std::string_view text) {
  return BetaSet(detail::parse_int_list(text, errc::invalid_beta_set, "beta set"));
}

inline std::string format_beta_set(const BetaSet& b) {
  return detail::format_int_list(b.hooks());
}

}  // namespace corepath
