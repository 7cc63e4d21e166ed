#include <gtest/gtest.h>

#include "reeb/error.hpp"
#include "reeb/generators.hpp"
#include "reeb/profiles.hpp"
#include "reeb/two_orbit.hpp"
#include "test_util.hpp"

using namespace reeb;
using reeb::test::model;

namespace {

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Refute, WorkedExampleMatchesBruteForce) {
  const std::vector<OrbitIndexModel> models{model({{"1/3", '-'}}, 2, 1)};
  const auto outcome = refute_equal_index(models, 1, 2, HypothesisDirection::positive, 1'000'000);
  ASSERT_TRUE(std::holds_alternative<ContradictionTrace>(outcome));
  const auto& trace = std::get<ContradictionTrace>(outcome);
  EXPECT_EQ(trace.branch, TraceBranch::index_jump);
  ASSERT_TRUE(trace.certificate.has_value());
  EXPECT_EQ(trace.ell0, 2);

  // Brute force over multiples of lcm(2K, 3) = 12 with divisor 2K = 4.
  auto mu = [&](std::int64_t k) { return test::oracle_index(models.front(), k); };
  std::int64_t k_found = 0, d_found = 0;
  for (std::int64_t k = 12; k <= 1200 && k_found == 0; k += 12) {
    const auto d = mu(k + 1) - mu(1);
    bool ok = d % 4 == 0;
    for (std::int64_t l = 1; l <= 2 && ok; ++l) ok = mu(k + l) == d + mu(l) && mu(k - l) == d - mu(l);
    ok = ok && d - 1 <= mu(k) && mu(k) <= d;
    if (ok) {
      k_found = k;
      d_found = d;
    }
  }
  EXPECT_EQ(k_found, 12);
  EXPECT_EQ(d_found, 32);
  EXPECT_EQ(trace.certificate->ks.front(), k_found);
  EXPECT_EQ(trace.certificate->d, d_found);
  EXPECT_EQ(trace.witness_degree, 33);
  EXPECT_EQ(trace.j, 16);

  std::int64_t at_witness = 0, at_n = 0;
  for (std::int64_t k = 1; k <= 100; ++k) {
    at_witness += mu(k) == 33;
    at_n += mu(k) == 1;
  }
  EXPECT_EQ(trace.count_at_witness, at_witness);
  EXPECT_EQ(trace.count_at_n, at_n);
  EXPECT_EQ(trace.count_at_witness, 0);
  EXPECT_TRUE(trace.holds_without_trivial_differential);
  EXPECT_TRUE(recheck_trace(models, trace).passed);
}

TEST(Refute, NonpositiveMeanIndex) {
  const std::vector<OrbitIndexModel> models{model({{"0", '+'}}, 0, 1)};
  const auto outcome = refute_equal_index(models, 1, 2, HypothesisDirection::positive, 1000);
  const auto& trace = std::get<ContradictionTrace>(outcome);
  EXPECT_EQ(trace.branch, TraceBranch::nonpositive_mean_index);
  EXPECT_EQ(trace.witness_degree, 3);
  EXPECT_FALSE(trace.count_at_n.has_value());
  for (std::int64_t k = 1; k <= 100; ++k) EXPECT_LE(models.front().index(k), 1);
  EXPECT_TRUE(recheck_trace(models, trace).passed);
}

TEST(Refute, Errors) {
  const std::vector<OrbitIndexModel> differ{model({{"1/3", '-'}}, 2, 1), model({{"1/3", '+'}}, 2, 1)};
  EXPECT_EQ(code_of([&] { refute_equal_index(differ, 1, 2, HypothesisDirection::positive, 100); }),
            ErrorCode::SequencesDiffer);
  const std::vector<OrbitIndexModel> none;
  EXPECT_EQ(code_of([&] { refute_equal_index(none, 1, 2, HypothesisDirection::positive, 100); }),
            ErrorCode::InconsistentFamily);
  const std::vector<OrbitIndexModel> one{model({{"1/3", '-'}}, 2, 1)};
  EXPECT_EQ(code_of([&] { refute_equal_index(one, 2, 2, HypothesisDirection::positive, 100); }),
            ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { parse_hypothesis_direction("sideways"); }), ErrorCode::BadDirection);
}

TEST(Refute, SameSequenceFromDifferentAngles) {
  // 2/3 with '-' and -1/3 with '-' plus h shifted by 2 give the same floors.
  const std::vector<OrbitIndexModel> family{model({{"2/3", '-'}}, 0, 1), model({{"-1/3", '-'}}, 2, 1)};
  const auto outcome = refute_equal_index(family, 1, 1, HypothesisDirection::positive, 100000);
  if (const auto* trace = std::get_if<ContradictionTrace>(&outcome)) EXPECT_TRUE(recheck_trace(family, *trace).passed);
}

TEST(Refute, InconclusiveWhenBoundIsSmall) {
  const std::vector<OrbitIndexModel> models{model({{"1/3", '-'}}, 2, 1)};
  const auto outcome = refute_equal_index(models, 1, 2, HypothesisDirection::positive, 11);
  ASSERT_TRUE(std::holds_alternative<Inconclusive>(outcome));
  const auto& inc = std::get<Inconclusive>(outcome);
  EXPECT_EQ(inc.divisor, 4);
  EXPECT_EQ(inc.ell0, 2);
  EXPECT_EQ(inc.search.bound, 11);
}

TEST(Refute, NegativeDirectionReflects) {
  const std::vector<OrbitIndexModel> models{model({{"1/3", '-'}}, 2, 1)};
  const auto outcome = refute_equal_index(models, 1, 2, HypothesisDirection::negative, 1000);
  const auto& trace = std::get<ContradictionTrace>(outcome);
  EXPECT_EQ(trace.direction, HypothesisDirection::negative);
  EXPECT_EQ(trace.branch, TraceBranch::nonpositive_mean_index);
  EXPECT_TRUE(recheck_trace(models, trace).passed);

  // A negative-mean model reflects to a positive-mean one and goes through the jump branch.
  const std::vector<OrbitIndexModel> down{model({{"1/3", '+'}}, -2, 1)};
  const auto reflected = refute_equal_index(down, 1, 2, HypothesisDirection::negative, 1'000'000);
  if (const auto* t = std::get_if<ContradictionTrace>(&reflected)) {
    EXPECT_EQ(t->branch, TraceBranch::index_jump);
    EXPECT_TRUE(recheck_trace(down, *t).passed);
  }
}

TEST(RecheckTrace, DetectsTampering) {
  const std::vector<OrbitIndexModel> models{model({{"1/3", '-'}}, 2, 1)};
  const auto trace = std::get<ContradictionTrace>(refute_equal_index(models, 1, 2, HypothesisDirection::positive, 1000));
  auto t1 = trace;
  t1.count_at_witness = 1;
  EXPECT_FALSE(recheck_trace(models, t1).passed);
  auto t2 = trace;
  t2.certificate->d += 4;
  EXPECT_FALSE(recheck_trace(models, t2).passed);
  auto t3 = trace;
  t3.witness_degree += 1;
  EXPECT_FALSE(recheck_trace(models, t3).passed);
  auto t4 = trace;
  t4.count_at_n = 3;
  EXPECT_FALSE(recheck_trace(models, t4).passed);
  const std::vector<OrbitIndexModel> other{model({{"1/3", '+'}}, 2, 1)};
  EXPECT_FALSE(recheck_trace(other, trace).passed);
}

TEST(Refute, RandomModelsGiveCheckableOutcomes) {
  gen::Rng rng(606);
  int traces = 0;
  for (int t = 0; t < 80; ++t) {
    const auto n = gen::uniform(rng, 1, 2);
    const auto K = n == 1 ? 2 : 22;
    const std::vector<OrbitIndexModel> models{gen::random_rotation_model(rng, n, 12, {-2, 2}, n, true)};
    const auto outcome = refute_equal_index(models, n, K, HypothesisDirection::positive, 200'000);
    if (const auto* trace = std::get_if<ContradictionTrace>(&outcome)) {
      ++traces;
      ASSERT_TRUE(recheck_trace(models, *trace).passed);
      ASSERT_EQ(trace->certificate->ks.front() % 2, 0);
      ASSERT_EQ(trace->certificate->d % 2, 0);
      ASSERT_EQ(trace->certificate->d % (2 * K), 0);
      ASSERT_LE(trace->count_at_witness, *trace->count_at_n);
    }
  }
  EXPECT_GT(traces, 0);
}

TEST(CheckAgainstProfile, Examples) {
  const std::vector<OrbitIndexModel> models{model({{"1", '+'}}, 2, 1)};
  const auto sphere = ball_ranks(1, {0, 30});
  const auto report = check_against_profile(models, sphere, ClassFilter::all);
  EXPECT_EQ(report.unpopulated, (std::vector<std::int64_t>{3, 7, 11, 15, 19, 23, 27}));
  EXPECT_EQ(report.mismatched, report.unpopulated);

  const auto self = good_count_profile(models, {0, 30}, ClassFilter::all);
  const auto same = check_against_profile(models, self, ClassFilter::all);
  EXPECT_TRUE(same.mismatched.empty());
  EXPECT_TRUE(same.unpopulated.empty());

  const std::vector<OrbitIndexModel> two{model({{"1", '+'}}, 2, 2)};
  const auto bries = brieskorn_profile(9, 2, {0, 60}).ranks;
  const auto partial = check_against_profile(two, bries, ClassFilter::all);
  EXPECT_EQ(partial.skipped_unknown.size(), bries.unknown().size());
  for (auto d : partial.mismatched) EXPECT_TRUE(bries.at(d).has_value());
}
