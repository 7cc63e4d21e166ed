#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "reeb/connect_sum.hpp"
#include "reeb/index_jump.hpp"
#include "reeb/index_model.hpp"

namespace reeb {

enum class TraceBranch { nonpositive_mean_index, index_jump };

std::string_view to_string(TraceBranch branch) noexcept;

/// Record of why a family of orbits with one common index sequence cannot
/// produce ranks satisfying rank(n + jK) > rank(n) for all j >= 1.
///
/// For negative hypotheses every degree below refers to the reflected models
/// (index -mu), so the record always reads as a positive-direction argument.
struct ContradictionTrace {
  TraceBranch branch = TraceBranch::index_jump;
  HypothesisDirection direction = HypothesisDirection::positive;
  std::int64_t n = 0;
  std::int64_t K = 1;
  std::optional<std::int64_t> ell0;
  std::optional<IndexJumpCertificate> certificate;
  std::int64_t witness_degree = 0;  // d + n, or n + K on the nonpositive branch
  std::int64_t j = 0;               // hypothesis index violated: witness = n + jK
  std::int64_t count_at_witness = 0;
  std::optional<std::int64_t> count_at_n;  // unbounded on the nonpositive branch
  std::vector<std::int64_t> witness_iterates;  // k with mu(k) = witness, good
  std::vector<std::int64_t> base_iterates;     // l with mu(l) = n, good
  std::int64_t enumeration_bound = 0;          // k range searched for the witness degree
  // Rank equals generator count when the differential vanishes; without that
  // assumption only rank <= count holds, which still refutes when the witness count is 0.
  bool holds_without_trivial_differential = false;
  std::string conclusion;
};

struct Inconclusive {
  SearchExhausted search;
  std::int64_t ell0 = 0;
  std::int64_t divisor = 0;
};

using RefuteOutcome = std::variant<ContradictionTrace, Inconclusive>;

struct TraceCheck {
  bool passed = true;
  std::string failure;
};

struct ProfileCheckReport {
  std::vector<std::int64_t> unpopulated;  // count(D) < profile(D)
  std::vector<std::int64_t> mismatched;   // count(D) != profile(D)
  std::vector<std::int64_t> skipped_unknown;
  GradedRanks counts;
};

/// All models must share one index sequence; n must equal their offset
/// (after reflection for the negative direction).
RefuteOutcome refute_equal_index(std::span<const OrbitIndexModel> models, std::int64_t n,
                                 std::int64_t K, HypothesisDirection direction,
                                 std::int64_t search_bound);

/// Independent replay: re-verifies the certificate and recounts generators.
TraceCheck recheck_trace(std::span<const OrbitIndexModel> models, const ContradictionTrace& trace);

ProfileCheckReport check_against_profile(std::span<const OrbitIndexModel> models,
                                         const GradedRanks& profile, ClassFilter classes);

}  // namespace reeb
