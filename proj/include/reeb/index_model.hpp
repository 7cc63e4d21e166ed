#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "reeb/graded.hpp"
#include "reeb/rational.hpp"

namespace reeb {

enum class ClassFilter { contractible_only, all };

/// Quasi-periodic Conley-Zehnder index sequence of the iterates of one orbit:
///
///   mu(k) = 2 * sum_j floor(k * theta_j) + h * k + offset
///
/// The iterate k lies in the trivial free homotopy class iff order | k, and
/// `multiplicity` orbits share the sequence.
class OrbitIndexModel {
 public:
  OrbitIndexModel(std::vector<PerturbedRational> angles, std::int64_t h, std::int64_t offset,
                  std::int64_t order = 1, std::int64_t multiplicity = 1);

  const std::vector<PerturbedRational>& angles() const noexcept { return angles_; }
  std::int64_t h() const noexcept { return h_; }
  std::int64_t offset() const noexcept { return offset_; }
  std::int64_t order() const noexcept { return order_; }
  std::int64_t multiplicity() const noexcept { return multiplicity_; }
  std::int64_t angle_count() const noexcept { return static_cast<std::int64_t>(angles_.size()); }

  std::int64_t index(std::int64_t k) const;
  const Rational& mean_index() const noexcept { return mean_index_; }

  OrbitIndexModel with_order(std::int64_t order) const;
  OrbitIndexModel with_multiplicity(std::int64_t multiplicity) const;

  bool operator==(const OrbitIndexModel& other) const;

 private:
  std::vector<PerturbedRational> angles_;
  std::int64_t h_;
  std::int64_t offset_;
  std::int64_t order_;
  std::int64_t multiplicity_;
  Rational mean_index_;
};

struct IterateRecord {
  std::int64_t k;
  std::int64_t index;
  bool good;
  bool contractible;
};

struct QuasiPeriod {
  std::int64_t period;  // lcm of the angle denominators
  std::int64_t jump;    // mu(k + period) - mu(k), independent of k
};

std::int64_t cz_index(const OrbitIndexModel& model, std::int64_t k);
Rational mean_index(const OrbitIndexModel& model);

/// Same parity as the simple orbit: (k - 1) * h even.
bool is_good_iterate(const OrbitIndexModel& model, std::int64_t k);
IterateRecord iterate_record(const OrbitIndexModel& model, std::int64_t k);

/// Largest k whose index can still be <= max_degree, from the sandwich
/// mu(k) >= k * mean + offset - 2 * n_e. Requires positive mean index.
std::int64_t enumeration_bound(const OrbitIndexModel& model, std::int64_t max_degree);

/// Counts good iterates per degree, weighted by multiplicity. Parallel over k.
GradedRanks good_count_profile(std::span<const OrbitIndexModel> models, Window window,
                               ClassFilter classes);

/// Smallest l0 >= 1 with mu(k + l) > mu(k) + 2 * offset for all k >= 1, l >= l0.
std::int64_t lemma32_ell0(const OrbitIndexModel& model);

QuasiPeriod quasi_period(const OrbitIndexModel& model);

/// Degree reflection: the returned model has index sequence -mu(k).
OrbitIndexModel mirror(const OrbitIndexModel& model);

namespace serial {

GradedRanks good_count_profile(std::span<const OrbitIndexModel> models, Window window,
                               ClassFilter classes);

}  // namespace serial

}  // namespace reeb
