#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace reeb {

/// Closed integer interval [lo, hi].
struct Window {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool contains(std::int64_t degree) const noexcept { return lo <= degree && degree <= hi; }
  bool empty() const noexcept { return hi < lo; }
  bool operator==(const Window&) const = default;
};

/// Parses "lo:hi" (both inclusive, either may be negative).
Window parse_window(std::string_view text);
std::string to_string(const Window& window);

/// Finitely supported degree -> nonnegative count table. Used for Betti numbers
/// of spaces and pairs as well as Morse type numbers.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> init);

  std::int64_t operator[](std::int64_t degree) const;
  void set(std::int64_t degree, std::int64_t count);
  void add(std::int64_t degree, std::int64_t count);

  const std::map<std::int64_t, std::int64_t>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::optional<std::int64_t> min_degree() const;
  std::optional<std::int64_t> max_degree() const;

  bool operator==(const BettiTable&) const = default;

 private:
  std::map<std::int64_t, std::int64_t> entries_;  // zero counts are never stored
};

/// Graded ranks over an explicit window. Degrees absent from the table are zero,
/// except those listed as unknown (partial profiles), which carry no information.
class GradedRanks {
 public:
  GradedRanks() = default;
  explicit GradedRanks(Window window);

  const Window& window() const noexcept { return window_; }

  /// nullopt for unknown degrees. Throws WindowMismatch outside the window.
  std::optional<std::int64_t> at(std::int64_t degree) const;
  bool is_unknown(std::int64_t degree) const;

  void set(std::int64_t degree, std::int64_t count);
  void add(std::int64_t degree, std::int64_t count);
  void mark_unknown(std::int64_t degree);

  const std::map<std::int64_t, std::int64_t>& ranks() const noexcept { return ranks_; }
  const std::set<std::int64_t>& unknown() const noexcept { return unknown_; }

  /// Same entries restricted to a sub-window.
  GradedRanks restricted(Window sub) const;

  bool operator==(const GradedRanks&) const = default;

 private:
  void require_inside(std::int64_t degree) const;

  Window window_{0, -1};
  std::map<std::int64_t, std::int64_t> ranks_;
  std::set<std::int64_t> unknown_;
};

}  // namespace reeb
