#include "reeb/index_jump.hpp"

#include <algorithm>
#include <limits>

#include "reeb/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace reeb {

namespace {

bool inequality_holds(std::int64_t mu_k, std::int64_t d, std::int64_t n0, JumpDirection direction) {
  if (direction == JumpDirection::plus) return d - n0 <= mu_k && mu_k <= d;
  return d <= mu_k && mu_k <= d + n0;
}

// d for a common k, or nullopt when the family disagrees or any identity fails.
std::optional<std::int64_t> check_candidate(std::span<const OrbitIndexModel> models, std::int64_t k,
                                            std::int64_t divisor, std::int64_t ell0,
                                            JumpDirection direction) {
  const std::int64_t d = models[0].index(k + 1) - models[0].index(1);
  if (d % divisor != 0) return std::nullopt;
  for (const auto& model : models) {
    if (model.index(k + 1) - model.index(1) != d) return std::nullopt;
  }
  for (const auto& model : models) {
    if (!inequality_holds(model.index(k), d, model.offset(), direction)) return std::nullopt;
    for (std::int64_t l = 1; l <= ell0; ++l) {
      const std::int64_t mu_l = model.index(l);
      if (model.index(k + l) != d + mu_l) return std::nullopt;
      if (k > l && model.index(k - l) != d - mu_l) return std::nullopt;
    }
  }
  return d;
}

void validate_search(std::span<const OrbitIndexModel> models, std::int64_t divisor,
                     std::int64_t ell0, std::int64_t bound) {
  if (models.empty()) fail(ErrorCode::InconsistentFamily, "empty orbit family");
  if (divisor < 1) fail(ErrorCode::InvalidArgument, "divisor must be positive");
  if (ell0 < 1) fail(ErrorCode::InvalidArgument, "ell0 must be positive");
  if (bound < 1) fail(ErrorCode::InvalidArgument, "search bound must be positive");
  for (const auto& model : models) {
    if (model.mean_index() <= 0) {
      fail(ErrorCode::NonpositiveMeanIndex,
           "mean index " + to_string(model.mean_index()) + " is not positive");
    }
  }
}

IndexJumpCertificate make_certificate(std::span<const OrbitIndexModel> models, std::int64_t k,
                                      std::int64_t d, std::int64_t divisor, std::int64_t ell0,
                                      JumpDirection direction) {
  return {d, std::vector<std::int64_t>(models.size(), k), ell0, divisor, direction};
}

}  // namespace

std::string_view to_string(JumpDirection direction) noexcept {
  return direction == JumpDirection::plus ? "plus" : "minus";
}

JumpDirection parse_jump_direction(std::string_view text) {
  if (text == "plus" || text == "+") return JumpDirection::plus;
  if (text == "minus" || text == "-") return JumpDirection::minus;
  fail(ErrorCode::BadDirection, "direction must be 'plus' or 'minus', got '" + std::string(text) + "'");
}

std::int64_t scan_step(std::span<const OrbitIndexModel> models, std::int64_t divisor) {
  std::int64_t step = divisor;
  for (const auto& model : models) step = lcm64(step, quasi_period(model).period);
  return step;
}

CertificateSearch find_certificate(std::span<const OrbitIndexModel> models, std::int64_t divisor,
                                   std::int64_t ell0, std::int64_t bound, JumpDirection direction) {
  validate_search(models, divisor, ell0, bound);
  const std::int64_t step = scan_step(models, divisor);
  const std::int64_t candidates = bound / step;

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  // Batches are scanned in order so the first batch with a hit holds the smallest k.
  const std::int64_t batch = std::int64_t{2048} * threads;
  for (std::int64_t first = 1; first <= candidates; first += batch) {
    const std::int64_t last = std::min(candidates, first + batch - 1);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
    for (std::int64_t m = first; m <= last; ++m) {
      if (m < best && check_candidate(models, m * step, divisor, ell0, direction)) best = m;
    }
    if (best != std::numeric_limits<std::int64_t>::max()) {
      const std::int64_t k = best * step;
      const auto d = check_candidate(models, k, divisor, ell0, direction);
      return make_certificate(models, k, *d, divisor, ell0, direction);
    }
  }
  return SearchExhausted{bound, step, candidates};
}

namespace serial {

CertificateSearch find_certificate(std::span<const OrbitIndexModel> models, std::int64_t divisor,
                                   std::int64_t ell0, std::int64_t bound, JumpDirection direction) {
  validate_search(models, divisor, ell0, bound);
  const std::int64_t step = scan_step(models, divisor);
  std::int64_t scanned = 0;
  for (std::int64_t k = step; k <= bound; k += step) {
    ++scanned;
    if (auto d = check_candidate(models, k, divisor, ell0, direction)) {
      return make_certificate(models, k, *d, divisor, ell0, direction);
    }
  }
  return SearchExhausted{bound, step, scanned};
}

}  // namespace serial

JumpVerification verify_certificate(std::span<const OrbitIndexModel> models,
                                    const IndexJumpCertificate& cert) {
  auto failure = [](std::string what, std::optional<std::size_t> model = std::nullopt,
                    std::optional<std::int64_t> ell = std::nullopt) {
    return JumpVerification{false, std::move(what), model, ell};
  };
  if (cert.ks.size() != models.size()) {
    return failure("family size: " + std::to_string(cert.ks.size()) + " iterates for " +
                   std::to_string(models.size()) + " models");
  }
  if (cert.divisor < 1) return failure("divisor must be positive");
  if (cert.ell0 < 1) return failure("ell0 must be positive");
  if (cert.d % cert.divisor != 0) {
    return failure("divisibility: d = " + std::to_string(cert.d) + " not divisible by " +
                   std::to_string(cert.divisor));
  }
  for (std::size_t i = 0; i < models.size(); ++i) {
    const std::int64_t k = cert.ks[i];
    if (k < 1) return failure("iterate k must be positive", i);
    if (k % cert.divisor != 0) {
      return failure("divisibility: k = " + std::to_string(k) + " not divisible by " +
                         std::to_string(cert.divisor),
                     i);
    }
  }
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& model = models[i];
    const std::int64_t k = cert.ks[i];
    for (std::int64_t l = 1; l <= cert.ell0; ++l) {
      const std::int64_t mu_l = model.index(l);
      const std::int64_t up = model.index(k + l);
      if (up != cert.d + mu_l) {
        return failure("identity mu(k+l) = d + mu(l) fails at l = " + std::to_string(l) + ": " +
                           std::to_string(up) + " != " + std::to_string(cert.d + mu_l),
                       i, l);
      }
      if (k > l) {
        const std::int64_t down = model.index(k - l);
        if (down != cert.d - mu_l) {
          return failure("identity mu(k-l) = d - mu(l) fails at l = " + std::to_string(l) + ": " +
                             std::to_string(down) + " != " + std::to_string(cert.d - mu_l),
                         i, l);
        }
      }
    }
    const std::int64_t mu_k = model.index(k);
    if (!inequality_holds(mu_k, cert.d, model.offset(), cert.direction)) {
      const bool plus = cert.direction == JumpDirection::plus;
      return failure(std::string("inequality ") + (plus ? "d - n0 <= mu(k) <= d" : "d <= mu(k) <= d + n0") +
                         " fails: mu(k) = " + std::to_string(mu_k) + ", d = " + std::to_string(cert.d),
                     i);
    }
  }
  return {};
}

}  // namespace reeb
