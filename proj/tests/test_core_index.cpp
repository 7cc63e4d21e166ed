#include <gtest/gtest.h>

#include <random>

#include "reeb/error.hpp"
#include "reeb/generators.hpp"
#include "reeb/index_model.hpp"
#include "test_util.hpp"

using namespace reeb;
using reeb::test::model;

TEST(PerturbedRational, FloorAtResonanceFollowsSign) {
  EXPECT_EQ(test::angle("1/3", '-').floor_times(3), 0);
  EXPECT_EQ(test::angle("1/3", '+').floor_times(3), 1);
  EXPECT_EQ(test::angle("1/3", '0').floor_times(3), 1);
  EXPECT_EQ(test::angle("1/3", '-').floor_times(4), 1);
  EXPECT_EQ(test::angle("-1/2", '+').floor_times(3), -2);
}

TEST(PerturbedRational, LargeValuesMatchGmpOracle) {
  // Numerator above 2^62 forces the GMP path.
  const Rational big = parse_rational("4611686018427387905/1099511627776");
  const PerturbedRational x(big, Perturbation::minus);
  for (std::int64_t k : std::vector<std::int64_t>{1, 7, 1099511627776LL, 1000003}) {
    Rational kx = k * big;
    Integer expected = floor_of(kx);
    if (kx.get_den() == 1) expected -= 1;
    EXPECT_EQ(x.floor_times(k), to_int64(expected)) << k;
  }
}

TEST(PerturbedRational, ArithmeticKeepsSign) {
  const auto x = test::angle("1/3", '-');
  EXPECT_EQ((-x).perturbation(), Perturbation::plus);
  EXPECT_EQ((x + Rational(1)).perturbation(), Perturbation::minus);
  EXPECT_EQ(x.scaled(Rational(-2)).perturbation(), Perturbation::plus);
  EXPECT_EQ((x + test::angle("1/6", '0')).perturbation(), Perturbation::minus);
  EXPECT_THROW(x + test::angle("1/6", '+'), Error);
}

TEST(CzIndex, SpecExamples) {
  EXPECT_EQ(cz_index(model({{"1", '+'}}, 2, 1), 2), 9);
  const auto third = model({{"1/3", '-'}}, 2, 1);
  EXPECT_EQ(cz_index(third, 3), 7);
  EXPECT_EQ(test::indices(third, 7), (std::vector<std::int64_t>{3, 5, 7, 11, 13, 15, 19}));
  const auto constant = model({}, 0, 3);
  for (std::int64_t k = 1; k < 20; ++k) EXPECT_EQ(cz_index(constant, k), 3);
}

TEST(CzIndex, MatchesDefinitionOnRandomModels) {
  gen::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto m = gen::random_rotation_model(rng, gen::uniform(rng, 0, 4), 15, {-3, -1, 0, 2, 5},
                                              gen::uniform(rng, -4, 4), false, true);
    for (std::int64_t k = 1; k <= 300; ++k) ASSERT_EQ(m.index(k), test::oracle_index(m, k));
  }
}

TEST(MeanIndex, SpecExamples) {
  const auto third = model({{"1/3", '-'}}, 2, 1);
  EXPECT_EQ(mean_index(third), make_rational(8, 3));
  EXPECT_LE(abs(Rational(third.index(3000), 3000) - mean_index(third)), Rational(1, 1000));
  EXPECT_EQ(mean_index(model({}, 0, 1)), Rational(0));
  EXPECT_EQ(mean_index(model({{"1", '+'}}, 2, 1)), Rational(4));
}

TEST(GoodIterate, ParityRule) {
  const auto even = model({{"2/7", '+'}}, 2, 1);
  for (std::int64_t k = 1; k < 30; ++k) EXPECT_TRUE(is_good_iterate(even, k));
  const auto odd = model({}, 1, 0);
  EXPECT_FALSE(is_good_iterate(odd, 2));
  EXPECT_TRUE(is_good_iterate(odd, 3));
  for (std::int64_t k = 1; k < 30; ++k) {
    EXPECT_EQ(is_good_iterate(odd, k), (odd.index(k) - odd.index(1)) % 2 == 0);
  }
  EXPECT_TRUE(is_good_iterate(model({{"1/2", '+'}}, -2, 1), 100));
}

TEST(IterateRecord, Fields) {
  const auto m = model({{"1/3", '-'}}, 2, 1, 2);
  const auto r = iterate_record(m, 3);
  EXPECT_EQ(r.index, 7);
  EXPECT_TRUE(r.good);
  EXPECT_FALSE(r.contractible);
  EXPECT_TRUE(iterate_record(m, 4).contractible);
}

TEST(GoodCountProfile, SpecExamples) {
  const std::vector<OrbitIndexModel> one{model({{"1", '+'}}, 2, 1)};
  const auto all = good_count_profile(one, {0, 10}, ClassFilter::all);
  EXPECT_EQ(all.ranks(), (std::map<std::int64_t, std::int64_t>{{5, 1}, {9, 1}}));
  const std::vector<OrbitIndexModel> ordered{model({{"1", '+'}}, 2, 1, 2)};
  EXPECT_EQ(good_count_profile(ordered, {0, 10}, ClassFilter::contractible_only).ranks(),
            (std::map<std::int64_t, std::int64_t>{{9, 1}}));
  const std::vector<OrbitIndexModel> triple{model({{"1", '+'}}, 2, 1, 1, 3)};
  EXPECT_EQ(good_count_profile(triple, {0, 10}, ClassFilter::all).ranks(),
            (std::map<std::int64_t, std::int64_t>{{5, 3}, {9, 3}}));
}

TEST(GoodCountProfile, Errors) {
  const std::vector<OrbitIndexModel> flat{model({}, 0, 1)};
  EXPECT_THROW(good_count_profile(flat, {0, 10}, ClassFilter::all), Error);
  const std::vector<OrbitIndexModel> ok{model({{"1", '+'}}, 2, 1)};
  EXPECT_THROW(good_count_profile(ok, {5, 4}, ClassFilter::all), Error);
}

TEST(GoodCountProfile, ParallelSerialAndNaiveAgree) {
  gen::Rng rng(21);
  for (int t = 0; t < 60; ++t) {
    std::vector<OrbitIndexModel> models;
    const auto count = gen::uniform(rng, 1, 3);
    for (int i = 0; i < count; ++i) {
      auto m = gen::random_rotation_model(rng, gen::uniform(rng, 0, 3), 9, {1, 2, 3}, gen::uniform(rng, 0, 3), true);
      models.push_back(m.with_order(gen::uniform(rng, 1, 3)).with_multiplicity(gen::uniform(rng, 1, 2)));
    }
    const Window w{-5, 80};
    const auto classes = t % 2 == 0 ? ClassFilter::all : ClassFilter::contractible_only;
    const auto fast = good_count_profile(models, w, classes);
    const auto ref = serial::good_count_profile(models, w, classes);
    ASSERT_EQ(fast, ref);

    // Naive double loop with a generous fixed cutoff: mean >= 1/9 here, offsets small.
    std::map<std::int64_t, std::int64_t> naive;
    for (const auto& m : models) {
      for (std::int64_t k = 1; k <= 2000; ++k) {
        const auto mu = test::oracle_index(m, k);
        const bool good = ((k - 1) * m.h()) % 2 == 0;
        const bool contractible = classes == ClassFilter::all || k % m.order() == 0;
        if (w.contains(mu) && good && contractible) naive[mu] += m.multiplicity();
      }
    }
    ASSERT_EQ(fast.ranks(), naive);
  }
}

TEST(EnumerationBound, NoIndexBelowCutoffBeyondBound) {
  gen::Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto m = gen::random_rotation_model(rng, gen::uniform(rng, 0, 3), 12, {-2, 1, 2}, gen::uniform(rng, -2, 3), true);
    const std::int64_t top = 60;
    const std::int64_t bound = enumeration_bound(m, top);
    for (std::int64_t k = std::max<std::int64_t>(bound, 0) + 1; k <= bound + 500; ++k) ASSERT_GT(m.index(k), top);
  }
}

TEST(JumpThreshold, SpecExamplesAndProperty) {
  EXPECT_EQ(lemma32_ell0(model({{"1/3", '-'}}, 2, 1)), 2);
  EXPECT_EQ(lemma32_ell0(model({{"1", '+'}}, 2, 1)), 1);
  EXPECT_EQ(lemma32_ell0(model({}, 2, 0)), 1);
  EXPECT_THROW(lemma32_ell0(model({}, 0, 1)), Error);

  const auto m = model({{"1/3", '-'}}, 2, 1);
  const auto ell0 = lemma32_ell0(m);
  for (std::int64_t k = 1; k <= 10'000; ++k) {
    for (std::int64_t l = ell0; l <= 100; ++l) ASSERT_GT(m.index(k + l), m.index(k) + 2 * m.offset());
  }
  gen::Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto r = gen::random_rotation_model(rng, gen::uniform(rng, 1, 3), 12, {-2, 2}, gen::uniform(rng, 0, 3), true);
    const auto e = lemma32_ell0(r);
    for (std::int64_t k = 1; k <= 300; ++k) {
      for (std::int64_t l = e; l <= e + 40; ++l) ASSERT_GT(r.index(k + l), r.index(k) + 2 * r.offset());
    }
  }
}

TEST(QuasiPeriod, SpecExamples) {
  const auto half = quasi_period(model({{"1/2", '+'}}, 2, 1));
  EXPECT_EQ(half.period, 2);
  EXPECT_EQ(half.jump, 6);
  const auto one = quasi_period(model({{"1", '+'}}, 2, 1));
  EXPECT_EQ(one.period, 1);
  EXPECT_EQ(one.jump, 4);
  const auto m = model({{"1/3", '-'}, {"2/3", '-'}}, 2, 2);
  const auto qp = quasi_period(m);
  EXPECT_EQ(qp.period, 3);
  for (std::int64_t k = 1; k <= 1000; ++k) ASSERT_EQ(m.index(k + 3) - m.index(k), qp.jump);
}

TEST(Invariants, SandwichParityQuasiPeriod) {
  gen::Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    const auto m = gen::random_rotation_model(rng, gen::uniform(rng, 0, 4), 12, {-3, -2, 0, 1, 2}, gen::uniform(rng, -3, 3),
                                              false, true);
    const auto ne = m.angle_count();
    const auto qp = quasi_period(m);
    for (std::int64_t k = 1; k <= 2000; ++k) {
      const auto mu = m.index(k);
      const Rational gap = Rational(mu) - k * m.mean_index();
      ASSERT_GE(gap, Rational(m.offset() - 2 * ne));
      ASSERT_LE(gap, Rational(m.offset()));
      ASSERT_EQ(((mu - m.h() * k - m.offset()) % 2 + 2) % 2, 0);
      ASSERT_EQ(m.index(k + qp.period), mu + qp.jump);
    }
  }
}

TEST(Mirror, NegatesIndices) {
  gen::Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto m = gen::random_rotation_model(rng, gen::uniform(rng, 0, 3), 10, {-2, 1, 2}, gen::uniform(rng, -2, 2), false);
    const auto r = mirror(m);
    for (std::int64_t k = 1; k <= 200; ++k) ASSERT_EQ(r.index(k), -m.index(k));
    EXPECT_EQ(r.offset(), 2 * m.angle_count() - m.offset());
  }
  EXPECT_THROW(mirror(model({{"1/2", '0'}}, 2, 1)), Error);
}

TEST(Model, RejectsBadOrder) {
  EXPECT_THROW(model({}, 2, 1, 0), Error);
  EXPECT_THROW(model({}, 2, 1, 1, 0), Error);
}
