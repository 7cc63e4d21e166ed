#include "reeb/index_model.hpp"

#include <algorithm>
#include <vector>

#include "reeb/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace reeb {

namespace {

constexpr std::int64_t kMaxHistogram = std::int64_t{1} << 24;

void require_positive_mean(const OrbitIndexModel& model) {
  if (model.mean_index() <= 0) {
    fail(ErrorCode::NonpositiveMeanIndex,
         "mean index " + to_string(model.mean_index()) + " is not positive");
  }
}

bool counts(const OrbitIndexModel& model, std::int64_t k, ClassFilter classes) {
  if (classes == ClassFilter::contractible_only && k % model.order() != 0) return false;
  return is_good_iterate(model, k);
}

void validate_profile_inputs(std::span<const OrbitIndexModel> models, Window window) {
  if (window.empty()) fail(ErrorCode::EmptyWindow, "profile window is empty");
  for (const auto& model : models) require_positive_mean(model);
}

}  // namespace

OrbitIndexModel::OrbitIndexModel(std::vector<PerturbedRational> angles, std::int64_t h,
                                 std::int64_t offset, std::int64_t order, std::int64_t multiplicity)
    : angles_(std::move(angles)), h_(h), offset_(offset), order_(order), multiplicity_(multiplicity) {
  if (order_ < 1) fail(ErrorCode::InvalidArgument, "order must be positive");
  if (multiplicity_ < 1) fail(ErrorCode::InvalidArgument, "multiplicity must be positive");
  Rational sum(0);
  for (const auto& a : angles_) sum += a.standard();
  mean_index_ = 2 * sum + Rational(Integer(static_cast<long>(h_)));
}

std::int64_t OrbitIndexModel::index(std::int64_t k) const {
  std::int64_t floors = 0;
  for (const auto& a : angles_) floors += a.floor_times(k);
  return 2 * floors + h_ * k + offset_;
}

OrbitIndexModel OrbitIndexModel::with_order(std::int64_t order) const {
  return OrbitIndexModel(angles_, h_, offset_, order, multiplicity_);
}

OrbitIndexModel OrbitIndexModel::with_multiplicity(std::int64_t multiplicity) const {
  return OrbitIndexModel(angles_, h_, offset_, order_, multiplicity);
}

bool OrbitIndexModel::operator==(const OrbitIndexModel& other) const {
  return angles_ == other.angles_ && h_ == other.h_ && offset_ == other.offset_ &&
         order_ == other.order_ && multiplicity_ == other.multiplicity_;
}

std::int64_t cz_index(const OrbitIndexModel& model, std::int64_t k) { return model.index(k); }

Rational mean_index(const OrbitIndexModel& model) { return model.mean_index(); }

bool is_good_iterate(const OrbitIndexModel& model, std::int64_t k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "iterate must be positive");
  return ((k - 1) % 2 == 0) || (model.h() % 2 == 0);
}

IterateRecord iterate_record(const OrbitIndexModel& model, std::int64_t k) {
  return {k, model.index(k), is_good_iterate(model, k), k % model.order() == 0};
}

std::int64_t enumeration_bound(const OrbitIndexModel& model, std::int64_t max_degree) {
  require_positive_mean(model);
  const Rational reach(Integer(static_cast<long>(max_degree - model.offset() + 2 * model.angle_count())));
  const std::int64_t bound = to_int64(ceil_of(reach / model.mean_index()));
  return std::max<std::int64_t>(bound, 0);
}

GradedRanks good_count_profile(std::span<const OrbitIndexModel> models, Window window,
                               ClassFilter classes) {
  validate_profile_inputs(models, window);
  const std::int64_t width = window.hi - window.lo + 1;
  if (width > kMaxHistogram) return serial::good_count_profile(models, window, classes);

  std::vector<std::int64_t> histogram(static_cast<std::size_t>(width), 0);
  for (const auto& model : models) {
    const std::int64_t k_max = enumeration_bound(model, window.hi);
    const std::int64_t weight = model.multiplicity();
#pragma omp parallel
    {
      std::vector<std::int64_t> local(static_cast<std::size_t>(width), 0);
#pragma omp for schedule(static)
      for (std::int64_t k = 1; k <= k_max; ++k) {
        const std::int64_t mu = model.index(k);
        if (window.contains(mu) && counts(model, k, classes)) local[mu - window.lo] += weight;
      }
#pragma omp critical(reeb_profile_merge)
      for (std::int64_t i = 0; i < width; ++i) histogram[i] += local[i];
    }
  }

  GradedRanks out(window);
  for (std::int64_t i = 0; i < width; ++i) {
    if (histogram[i] != 0) out.set(window.lo + i, histogram[i]);
  }
  return out;
}

namespace serial {

GradedRanks good_count_profile(std::span<const OrbitIndexModel> models, Window window,
                               ClassFilter classes) {
  validate_profile_inputs(models, window);
  GradedRanks out(window);
  for (const auto& model : models) {
    const std::int64_t k_max = enumeration_bound(model, window.hi);
    for (std::int64_t k = 1; k <= k_max; ++k) {
      const std::int64_t mu = model.index(k);
      if (window.contains(mu) && counts(model, k, classes)) out.add(mu, model.multiplicity());
    }
  }
  return out;
}

}  // namespace serial

std::int64_t lemma32_ell0(const OrbitIndexModel& model) {
  require_positive_mean(model);
  const Rational& mean = model.mean_index();
  const auto n0 = static_cast<long>(model.offset());
  const auto ne = static_cast<long>(model.angle_count());
  // 4 n0 / mean is the classical choice; 2 (n0 + n_e) / mean is what the
  // sandwich bound needs when there are more angles than the offset.
  const std::int64_t classical = to_int64(ceil_of(Rational(Integer(4 * n0)) / mean));
  const std::int64_t sandwich = to_int64(ceil_of(Rational(Integer(2 * (n0 + ne))) / mean));
  return std::max<std::int64_t>({1, classical, sandwich});
}

QuasiPeriod quasi_period(const OrbitIndexModel& model) {
  std::int64_t q = 1;
  for (const auto& a : model.angles()) q = lcm64(q, to_int64(a.standard().get_den()));
  return {q, model.index(1 + q) - model.index(1)};
}

OrbitIndexModel mirror(const OrbitIndexModel& model) {
  std::vector<PerturbedRational> angles;
  angles.reserve(model.angles().size());
  for (const auto& a : model.angles()) {
    if (a.perturbation() == Perturbation::zero) {
      fail(ErrorCode::InvalidArgument, "degree reflection needs nonzero perturbation signs");
    }
    angles.push_back(-a);
  }
  return OrbitIndexModel(std::move(angles), -model.h(), 2 * model.angle_count() - model.offset(),
                         model.order(), model.multiplicity());
}

}  // namespace reeb
