#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "reeb/index_model.hpp"

namespace reeb {

enum class JumpDirection { plus, minus };

std::string_view to_string(JumpDirection direction) noexcept;
JumpDirection parse_jump_direction(std::string_view text);

/// Common index jump data for a family of index sequences:
///   mu_i(k_i + l) = d + mu_i(l)        for 1 <= l <= ell0
///   mu_i(k_i - l) = d - mu_i(l)        for 1 <= l <= ell0, l < k_i
///   d - n0_i <= mu_i(k_i) <= d          (plus)
///   d <= mu_i(k_i) <= d + n0_i          (minus)
/// with divisor | d and divisor | k_i.
struct IndexJumpCertificate {
  std::int64_t d = 0;
  std::vector<std::int64_t> ks;
  std::int64_t ell0 = 1;
  std::int64_t divisor = 1;
  JumpDirection direction = JumpDirection::plus;

  bool operator==(const IndexJumpCertificate&) const = default;
};

/// Normal outcome when no certificate was found below the bound.
struct SearchExhausted {
  std::int64_t bound = 0;
  std::int64_t step = 0;
  std::int64_t candidates_scanned = 0;
};

using CertificateSearch = std::variant<IndexJumpCertificate, SearchExhausted>;

struct JumpVerification {
  bool passed = true;
  std::string violation;               // empty when passed
  std::optional<std::size_t> model;    // offending model index
  std::optional<std::int64_t> ell;     // offending l, for identity failures
};

/// Candidate k are the multiples of lcm(divisor, quasi-periods) up to `bound`.
std::int64_t scan_step(std::span<const OrbitIndexModel> models, std::int64_t divisor);

/// Smallest-k certificate with a common k across the family.
CertificateSearch find_certificate(std::span<const OrbitIndexModel> models, std::int64_t divisor,
                                   std::int64_t ell0, std::int64_t bound,
                                   JumpDirection direction = JumpDirection::plus);

JumpVerification verify_certificate(std::span<const OrbitIndexModel> models,
                                    const IndexJumpCertificate& cert);

namespace serial {

CertificateSearch find_certificate(std::span<const OrbitIndexModel> models, std::int64_t divisor,
                                   std::int64_t ell0, std::int64_t bound,
                                   JumpDirection direction = JumpDirection::plus);

}  // namespace serial

}  // namespace reeb
