#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "reeb/graded.hpp"

namespace reeb {

enum class HypothesisDirection { positive, negative };

std::string_view to_string(HypothesisDirection direction) noexcept;
HypothesisDirection parse_hypothesis_direction(std::string_view text);

/// rank(n + jK) > rank(n) for each listed j (positive direction), or
/// rank(-n - jK) > rank(-n) (negative direction).
struct HypothesisCertificate {
  std::int64_t n = 0;
  std::int64_t K = 1;
  HypothesisDirection direction = HypothesisDirection::positive;
  Window window;
  std::vector<std::int64_t> verified_js;

  bool operator==(const HypothesisCertificate&) const = default;
};

struct FailureWitness {
  std::int64_t j = 0;
  std::int64_t base_rank = 0;
  std::int64_t shifted_rank = 0;
};

using HypothesisOutcome = std::variant<HypothesisCertificate, FailureWitness>;

struct DegreeBounds {
  std::int64_t degree = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

struct Theorem127Row {
  std::int64_t j = 0;
  std::int64_t degree = 0;
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
  std::int64_t chain_lower = 0;     // r1 + r2 - 1
  std::int64_t triangle_lower = 0;  // exact-triangle lower bound with the actual disk ranks
  bool holds = false;
};

struct Theorem127Result {
  std::int64_t K = 0;
  bool passed = true;
  std::int64_t rank_at_n = 0;  // r1(n) + r2(n), exact by the triangle
  std::vector<Theorem127Row> rows;
  HypothesisCertificate certificate;  // for the connected sum
};

/// Positive equivariant ranks of the ball D^{2n+2}: one in each degree n + 2k, k >= 1.
GradedRanks ball_ranks(std::int64_t n, Window window);

/// Long-exact-sequence bounds for the middle term W' of
/// HC(D) -> HC(W') -> HC(W) -[-1]-> HC(D):
///   lower(D) = max(0, w(D) - disk(D - 1)),  upper(D) = w(D) + disk(D).
/// At the lowest window degree the lower bound is 0, since disk(D - 1) is not tabulated.
std::vector<DegreeBounds> triangle_bounds(const GradedRanks& w_ranks, const GradedRanks& disk_ranks);

/// Throws CertInvalid when the certificate does not hold for the profile.
void validate_certificate(const GradedRanks& profile, const HypothesisCertificate& cert);

HypothesisOutcome hypothesis_certify(const GradedRanks& profile, std::int64_t n, std::int64_t K,
                                     HypothesisDirection direction, Window window);

Theorem127Result theorem127_check(const GradedRanks& r1, const HypothesisCertificate& cert1,
                                  const GradedRanks& r2, const HypothesisCertificate& cert2,
                                  std::int64_t n, Window window);

}  // namespace reeb
