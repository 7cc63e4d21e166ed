#include "reeb/two_orbit.hpp"

#include <algorithm>
#include <set>

#include "reeb/error.hpp"

namespace reeb {

namespace {

// Agreement on [1, 2Q] with Q the common quasi-period pins down the whole
// sequence; very long periods are compared on a capped prefix.
constexpr std::int64_t kSequenceCheckCap = std::int64_t{1} << 20;

bool contractible(const OrbitIndexModel& model, std::int64_t k) { return k % model.order() == 0; }

void require_equal_sequences(std::span<const OrbitIndexModel> models) {
  if (models.empty()) fail(ErrorCode::InconsistentFamily, "refutation needs at least one orbit model");
  std::int64_t period = 1;
  for (const auto& m : models) period = lcm64(period, quasi_period(m).period);
  const std::int64_t limit = std::min(kSequenceCheckCap, 2 * period);
  const auto& first = models.front();
  for (std::size_t i = 1; i < models.size(); ++i) {
    if (first.mean_index() != models[i].mean_index()) {
      fail(ErrorCode::SequencesDiffer, "model " + std::to_string(i) + " has a different mean index");
    }
    for (std::int64_t k = 1; k <= limit; ++k) {
      if (first.index(k) != models[i].index(k)) {
        fail(ErrorCode::SequencesDiffer,
             "model " + std::to_string(i) + " differs from model 0 at k = " + std::to_string(k));
      }
    }
  }
}

std::vector<OrbitIndexModel> oriented_models(std::span<const OrbitIndexModel> models,
                                             HypothesisDirection direction) {
  std::vector<OrbitIndexModel> out;
  out.reserve(models.size());
  for (const auto& m : models) out.push_back(direction == HypothesisDirection::positive ? m : mirror(m));
  return out;
}

struct DegreeCount {
  std::int64_t count = 0;
  std::vector<std::int64_t> iterates;
};

DegreeCount count_good_at(std::span<const OrbitIndexModel> models, std::int64_t degree,
                          std::int64_t k_max) {
  DegreeCount out;
  std::set<std::int64_t> ks;
  for (const auto& m : models) {
    for (std::int64_t k = 1; k <= k_max; ++k) {
      if (m.index(k) == degree && is_good_iterate(m, k) && contractible(m, k)) {
        out.count += m.multiplicity();
        ks.insert(k);
      }
    }
  }
  out.iterates.assign(ks.begin(), ks.end());
  return out;
}

std::int64_t family_divisor(std::span<const OrbitIndexModel> models, std::int64_t K) {
  std::int64_t divisor = 2 * K;
  for (const auto& m : models) divisor = lcm64(divisor, m.order());
  return divisor;
}

std::int64_t family_bound(std::span<const OrbitIndexModel> models, std::int64_t degree) {
  std::int64_t bound = 0;
  for (const auto& m : models) bound = std::max(bound, enumeration_bound(m, degree));
  return bound;
}

}  // namespace

std::string_view to_string(TraceBranch branch) noexcept {
  return branch == TraceBranch::nonpositive_mean_index ? "nonpositive_mean_index" : "index_jump";
}

RefuteOutcome refute_equal_index(std::span<const OrbitIndexModel> input, std::int64_t n, std::int64_t K,
                                 HypothesisDirection direction, std::int64_t search_bound) {
  if (K < 1) fail(ErrorCode::InvalidArgument, "K must be positive");
  require_equal_sequences(input);
  const std::vector<OrbitIndexModel> models = oriented_models(input, direction);
  for (const auto& m : models) {
    if (m.offset() != n) {
      fail(ErrorCode::PreconditionViolated,
           "n = " + std::to_string(n) + " differs from the model offset " + std::to_string(m.offset()));
    }
  }

  ContradictionTrace trace;
  trace.direction = direction;
  trace.n = n;
  trace.K = K;

  if (sgn(models.front().mean_index()) <= 0) {
    // mu(k) <= k * mean + offset <= n, so nothing reaches n + K.
    trace.branch = TraceBranch::nonpositive_mean_index;
    trace.j = 1;
    trace.witness_degree = n + K;
    trace.count_at_witness = 0;
    trace.holds_without_trivial_differential = true;
    trace.conclusion = "no generator above degree n; rank(n+K) = 0 contradicts rank(n+K) > rank(n)";
    return trace;
  }

  std::int64_t ell0 = 1;
  for (const auto& m : models) ell0 = std::max(ell0, lemma32_ell0(m));
  const std::int64_t divisor = family_divisor(models, K);

  const CertificateSearch search = find_certificate(models, divisor, ell0, search_bound);
  if (const auto* exhausted = std::get_if<SearchExhausted>(&search)) {
    return Inconclusive{*exhausted, ell0, divisor};
  }
  const auto& cert = std::get<IndexJumpCertificate>(search);

  trace.branch = TraceBranch::index_jump;
  trace.ell0 = ell0;
  trace.certificate = cert;
  trace.witness_degree = cert.d + n;
  trace.j = cert.d / K;
  trace.enumeration_bound = family_bound(models, trace.witness_degree);

  const DegreeCount at_witness = count_good_at(models, trace.witness_degree, trace.enumeration_bound);
  const DegreeCount at_n = count_good_at(models, n, family_bound(models, n));
  trace.count_at_witness = at_witness.count;
  trace.count_at_n = at_n.count;
  trace.witness_iterates = at_witness.iterates;
  trace.base_iterates = at_n.iterates;

  const std::int64_t k_gamma = cert.ks.front();
  for (std::int64_t k : at_witness.iterates) {
    const std::int64_t ell = k - k_gamma;
    if (ell < 1 || ell >= ell0 || models.front().index(ell) != n) {
      fail(ErrorCode::PreconditionViolated,
           "generator k = " + std::to_string(k) + " at the witness degree is not k_gamma + l with mu(l) = n");
    }
  }
  if (trace.count_at_witness > *trace.count_at_n) {
    fail(ErrorCode::PreconditionViolated, "witness count exceeds the count at n");
  }
  trace.holds_without_trivial_differential = trace.count_at_witness == 0;
  trace.conclusion = "rank(n+jK) <= " + std::to_string(trace.count_at_witness) + " <= rank(n) at j = " +
                     std::to_string(trace.j);
  return trace;
}

TraceCheck recheck_trace(std::span<const OrbitIndexModel> input, const ContradictionTrace& trace) {
  auto failed = [](std::string why) { return TraceCheck{false, std::move(why)}; };
  if (input.empty()) return failed("no models");
  const std::vector<OrbitIndexModel> models = oriented_models(input, trace.direction);
  for (const auto& m : models) {
    if (m.offset() != trace.n) return failed("model offset differs from n");
  }
  if (trace.witness_degree != trace.n + trace.j * trace.K) return failed("witness degree is not n + jK");

  if (trace.branch == TraceBranch::nonpositive_mean_index) {
    for (const auto& m : models) {
      if (sgn(m.mean_index()) > 0) return failed("mean index is positive");
    }
    if (trace.count_at_witness != 0 || trace.witness_degree <= trace.n) return failed("witness count must be 0 above n");
    return {};
  }

  if (!trace.certificate || !trace.ell0 || !trace.count_at_n) return failed("index-jump trace is incomplete");
  const auto& cert = *trace.certificate;
  const JumpVerification verification = verify_certificate(models, cert);
  if (!verification.passed) return failed("certificate: " + verification.violation);
  if (cert.direction != JumpDirection::plus) return failed("certificate direction must be plus");
  if (cert.ell0 != *trace.ell0) return failed("certificate ell0 differs from the trace");
  if (cert.divisor % (2 * trace.K) != 0) return failed("certificate divisor is not a multiple of 2K");
  if (cert.ks.front() % 2 != 0 || cert.d % 2 != 0) return failed("k_gamma and d must be even");
  if (trace.witness_degree != cert.d + trace.n) return failed("witness degree is not d + n");

  const Window at_w{trace.witness_degree, trace.witness_degree};
  const Window at_n{trace.n, trace.n};
  const auto counted_w = serial::good_count_profile(models, at_w, ClassFilter::contractible_only).at(trace.witness_degree);
  const auto counted_n = serial::good_count_profile(models, at_n, ClassFilter::contractible_only).at(trace.n);
  if (counted_w.value_or(-1) != trace.count_at_witness) return failed("witness count does not reproduce");
  if (counted_n.value_or(-1) != *trace.count_at_n) return failed("count at n does not reproduce");
  if (trace.count_at_witness > *trace.count_at_n) return failed("witness count exceeds count at n");
  for (std::int64_t k : trace.witness_iterates) {
    const std::int64_t ell = k - cert.ks.front();
    if (ell < 1 || ell >= cert.ell0 || models.front().index(ell) != trace.n) {
      return failed("witness iterate " + std::to_string(k) + " breaks the k_gamma + l shape");
    }
  }
  return {};
}

ProfileCheckReport check_against_profile(std::span<const OrbitIndexModel> models, const GradedRanks& profile,
                                         ClassFilter classes) {
  ProfileCheckReport report;
  report.counts = good_count_profile(models, profile.window(), classes);
  const Window& w = profile.window();
  for (std::int64_t degree = w.lo; degree <= w.hi; ++degree) {
    const auto expected = profile.at(degree);
    if (!expected) {
      report.skipped_unknown.push_back(degree);
      continue;
    }
    const std::int64_t count = *report.counts.at(degree);
    if (count < *expected) report.unpopulated.push_back(degree);
    if (count != *expected) report.mismatched.push_back(degree);
  }
  return report;
}

}  // namespace reeb
