#include "reeb/connect_sum.hpp"

#include <algorithm>

#include "reeb/error.hpp"
#include "reeb/rational.hpp"

namespace reeb {

namespace {

std::int64_t known_rank(const GradedRanks& profile, std::int64_t degree) {
  const auto rank = profile.at(degree);
  if (!rank) {
    fail(ErrorCode::UnknownDegreeTouched, "rank at degree " + std::to_string(degree) + " is unknown");
  }
  return *rank;
}

Window intersect(Window a, Window b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

std::int64_t oriented(HypothesisDirection direction, std::int64_t degree) {
  return direction == HypothesisDirection::positive ? degree : -degree;
}

}  // namespace

std::string_view to_string(HypothesisDirection direction) noexcept {
  return direction == HypothesisDirection::positive ? "positive" : "negative";
}

HypothesisDirection parse_hypothesis_direction(std::string_view text) {
  if (text == "positive" || text == "+" || text == "plus") return HypothesisDirection::positive;
  if (text == "negative" || text == "-" || text == "minus") return HypothesisDirection::negative;
  fail(ErrorCode::BadDirection, "direction must be 'positive' or 'negative', got '" + std::string(text) + "'");
}

GradedRanks ball_ranks(std::int64_t n, Window window) {
  GradedRanks out(window);
  const std::int64_t first = n + 2;
  std::int64_t degree = std::max(first, window.lo);
  if ((degree - first) % 2 != 0) ++degree;
  for (; degree <= window.hi; degree += 2) out.set(degree, 1);
  return out;
}

std::vector<DegreeBounds> triangle_bounds(const GradedRanks& w_ranks, const GradedRanks& disk_ranks) {
  if (!(w_ranks.window() == disk_ranks.window())) {
    fail(ErrorCode::WindowMismatch, "triangle terms must share a window");
  }
  const Window& window = w_ranks.window();
  std::vector<DegreeBounds> out;
  out.reserve(static_cast<std::size_t>(window.hi - window.lo + 1));
  for (std::int64_t degree = window.lo; degree <= window.hi; ++degree) {
    const std::int64_t w = known_rank(w_ranks, degree);
    const std::int64_t disk_here = known_rank(disk_ranks, degree);
    DegreeBounds b{degree, 0, w + disk_here};
    // At the bottom edge the connecting term is outside the table; keep the trivial lower bound.
    if (degree > window.lo) b.lower = std::max<std::int64_t>(0, w - known_rank(disk_ranks, degree - 1));
    out.push_back(b);
  }
  return out;
}

void validate_certificate(const GradedRanks& profile, const HypothesisCertificate& cert) {
  if (cert.K < 1) fail(ErrorCode::CertInvalid, "certificate constant K must be positive");
  if (cert.verified_js.empty()) fail(ErrorCode::CertInvalid, "certificate lists no j");
  const std::int64_t base_degree = oriented(cert.direction, cert.n);
  const Window& w = profile.window();
  if (!w.contains(base_degree)) fail(ErrorCode::CertInvalid, "base degree outside the profile window");
  const auto base = profile.at(base_degree);
  if (!base) fail(ErrorCode::CertInvalid, "base degree has unknown rank");
  for (std::int64_t j : cert.verified_js) {
    const std::int64_t degree = oriented(cert.direction, cert.n + j * cert.K);
    if (j < 1 || !w.contains(degree)) fail(ErrorCode::CertInvalid, "j = " + std::to_string(j) + " out of range");
    const auto shifted = profile.at(degree);
    if (!shifted || *shifted <= *base) {
      fail(ErrorCode::CertInvalid, "inequality fails or is unknown at j = " + std::to_string(j));
    }
  }
}

HypothesisOutcome hypothesis_certify(const GradedRanks& profile, std::int64_t n, std::int64_t K,
                                     HypothesisDirection direction, Window window) {
  if (K < 1) fail(ErrorCode::InvalidArgument, "K must be positive");
  const Window effective = intersect(window, profile.window());
  const std::int64_t base_degree = oriented(direction, n);
  if (effective.empty() || !effective.contains(base_degree)) {
    fail(ErrorCode::EmptyWindow, "window does not contain the base degree " + std::to_string(base_degree));
  }
  const std::int64_t base = known_rank(profile, base_degree);

  HypothesisCertificate cert{n, K, direction, effective, {}};
  for (std::int64_t j = 1;; ++j) {
    const std::int64_t degree = oriented(direction, n + j * K);
    if (!effective.contains(degree)) break;
    const std::int64_t shifted = known_rank(profile, degree);
    if (shifted <= base) return FailureWitness{j, base, shifted};
    cert.verified_js.push_back(j);
  }
  if (cert.verified_js.empty()) fail(ErrorCode::EmptyWindow, "no shifted degree n + jK inside the window");
  return cert;
}

Theorem127Result theorem127_check(const GradedRanks& r1, const HypothesisCertificate& cert1,
                                  const GradedRanks& r2, const HypothesisCertificate& cert2,
                                  std::int64_t n, Window window) {
  if (cert1.direction != HypothesisDirection::positive || cert2.direction != HypothesisDirection::positive) {
    fail(ErrorCode::DirectionMismatch, "both summands need positive-direction certificates");
  }
  if (cert1.n != n || cert2.n != n) {
    fail(ErrorCode::CertInvalid, "certificate grading anchor differs from n = " + std::to_string(n));
  }
  validate_certificate(r1, cert1);
  validate_certificate(r2, cert2);

  const Window effective = intersect(intersect(window, r1.window()), r2.window());
  if (effective.empty() || !effective.contains(n)) fail(ErrorCode::EmptyWindow, "window must contain n");

  Theorem127Result result;
  result.K = lcm64(cert1.K, cert2.K);
  result.rank_at_n = known_rank(r1, n) + known_rank(r2, n);

  // The attached handle contributes HC of the 2n-ball, i.e. ball_ranks(n - 1).
  const GradedRanks disk = ball_ranks(n - 1, effective);
  for (std::int64_t j = 1; n + j * result.K <= effective.hi; ++j) {
    const std::int64_t degree = n + j * result.K;
    Theorem127Row row;
    row.j = j;
    row.degree = degree;
    row.r1 = known_rank(r1, degree);
    row.r2 = known_rank(r2, degree);
    row.chain_lower = row.r1 + row.r2 - 1;
    const std::int64_t disk_below = effective.contains(degree - 1) ? *disk.at(degree - 1) : 1;
    row.triangle_lower = std::max<std::int64_t>(0, row.r1 + row.r2 - disk_below);
    row.holds = row.chain_lower > result.rank_at_n;
    result.passed = result.passed && row.holds;
    result.rows.push_back(row);
  }
  if (result.rows.empty()) fail(ErrorCode::EmptyWindow, "no degree n + jK inside the window");

  result.certificate = {n, result.K, HypothesisDirection::positive, effective, {}};
  for (const auto& row : result.rows) {
    if (row.holds) result.certificate.verified_js.push_back(row.j);
  }
  return result;
}

}  // namespace reeb
