#include "reeb/graded.hpp"

#include <charconv>

#include "reeb/error.hpp"

namespace reeb {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    fail(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Window parse_window(std::string_view text) {
  // The separator is the first ':' that is not a leading sign position.
  const auto colon = text.find(':', 1);
  if (colon == std::string_view::npos) {
    fail(ErrorCode::ParseError, "window must be 'lo:hi', got '" + std::string(text) + "'");
  }
  Window w{parse_int(text.substr(0, colon), "window bound"),
           parse_int(text.substr(colon + 1), "window bound")};
  if (w.empty()) fail(ErrorCode::EmptyWindow, "window " + std::string(text) + " is empty");
  return w;
}

std::string to_string(const Window& window) {
  return std::to_string(window.lo) + ":" + std::to_string(window.hi);
}

BettiTable::BettiTable(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> init) {
  for (const auto& [degree, count] : init) set(degree, count);
}

std::int64_t BettiTable::operator[](std::int64_t degree) const {
  auto it = entries_.find(degree);
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(std::int64_t degree, std::int64_t count) {
  if (count < 0) fail(ErrorCode::InvalidArgument, "negative Betti number");
  if (count == 0) {
    entries_.erase(degree);
  } else {
    entries_[degree] = count;
  }
}

void BettiTable::add(std::int64_t degree, std::int64_t count) { set(degree, (*this)[degree] + count); }

std::optional<std::int64_t> BettiTable::min_degree() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.begin()->first;
}

std::optional<std::int64_t> BettiTable::max_degree() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.rbegin()->first;
}

GradedRanks::GradedRanks(Window window) : window_(window) {
  if (window.empty()) fail(ErrorCode::EmptyWindow, "graded ranks need a nonempty window");
}

void GradedRanks::require_inside(std::int64_t degree) const {
  if (!window_.contains(degree)) {
    fail(ErrorCode::WindowMismatch,
         "degree " + std::to_string(degree) + " outside window " + to_string(window_));
  }
}

std::optional<std::int64_t> GradedRanks::at(std::int64_t degree) const {
  require_inside(degree);
  if (unknown_.contains(degree)) return std::nullopt;
  auto it = ranks_.find(degree);
  return it == ranks_.end() ? 0 : it->second;
}

bool GradedRanks::is_unknown(std::int64_t degree) const { return unknown_.contains(degree); }

void GradedRanks::set(std::int64_t degree, std::int64_t count) {
  require_inside(degree);
  if (count < 0) fail(ErrorCode::InvalidArgument, "negative rank");
  unknown_.erase(degree);
  if (count == 0) {
    ranks_.erase(degree);
  } else {
    ranks_[degree] = count;
  }
}

void GradedRanks::add(std::int64_t degree, std::int64_t count) {
  auto current = at(degree);
  set(degree, current.value_or(0) + count);
}

void GradedRanks::mark_unknown(std::int64_t degree) {
  require_inside(degree);
  ranks_.erase(degree);
  unknown_.insert(degree);
}

GradedRanks GradedRanks::restricted(Window sub) const {
  if (sub.lo < window_.lo || sub.hi > window_.hi) {
    fail(ErrorCode::WindowMismatch, "sub-window " + to_string(sub) + " not inside " + to_string(window_));
  }
  GradedRanks out(sub);
  for (auto it = ranks_.lower_bound(sub.lo); it != ranks_.end() && it->first <= sub.hi; ++it) {
    out.ranks_.insert(*it);
  }
  for (auto it = unknown_.lower_bound(sub.lo); it != unknown_.end() && *it <= sub.hi; ++it) {
    out.unknown_.insert(*it);
  }
  return out;
}

}  // namespace reeb
