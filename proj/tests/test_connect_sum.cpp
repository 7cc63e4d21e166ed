#include <gtest/gtest.h>

#include "reeb/connect_sum.hpp"
#include "reeb/error.hpp"
#include "reeb/generators.hpp"
#include "reeb/profiles.hpp"

using namespace reeb;
using Ranks = std::map<std::int64_t, std::int64_t>;

namespace {

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

HypothesisCertificate certify(const GradedRanks& r, std::int64_t n, std::int64_t K, Window w) {
  return std::get<HypothesisCertificate>(hypothesis_certify(r, n, K, HypothesisDirection::positive, w));
}

}  // namespace

TEST(BallRanks, Examples) {
  EXPECT_EQ(ball_ranks(1, {0, 7}).ranks(), (Ranks{{3, 1}, {5, 1}, {7, 1}}));
  EXPECT_EQ(*ball_ranks(1, {0, 7}).at(1), 0);
  EXPECT_TRUE(ball_ranks(5, {-10, 6}).ranks().empty());
  EXPECT_EQ(ball_ranks(0, {-3, 4}).ranks(), (Ranks{{2, 1}, {4, 1}}));
}

TEST(TriangleBounds, Examples) {
  const Window w{0, 20};
  GradedRanks flat(w);
  for (std::int64_t d = 0; d <= 20; ++d) flat.set(d, 2);
  const auto disk = ball_ranks(4, w);
  const auto bounds = triangle_bounds(flat, disk);
  ASSERT_EQ(bounds.size(), 21U);
  // disk(4) = disk(3) = 0: equality at n = 4.
  EXPECT_EQ(bounds[4].lower, 2);
  EXPECT_EQ(bounds[4].upper, 2);
  // Degree n + 2j: the disk correction of at most one.
  EXPECT_EQ(bounds[7].lower, 1);

  const auto zero_bounds = triangle_bounds(GradedRanks(w), disk);
  for (const auto& b : zero_bounds) {
    EXPECT_EQ(b.lower, 0);
    EXPECT_EQ(b.upper, *disk.at(b.degree));
  }
  EXPECT_EQ(code_of([&] { triangle_bounds(flat, ball_ranks(4, {0, 21})); }), ErrorCode::WindowMismatch);
}

TEST(TriangleBounds, ContainTrueRankOfRandomExactSequences) {
  // ... -> D_k -f-> W'_k -g-> W_k -c-> D_{k-1} -> ... with image ranks a, b, c.
  gen::Rng rng(1127);
  for (int t = 0; t < 300; ++t) {
    const Window w{0, 30};
    std::map<std::int64_t, std::int64_t> a, b, c;
    for (std::int64_t k = w.lo; k <= w.hi + 1; ++k) {
      a[k] = gen::uniform(rng, 0, 3);
      b[k] = gen::uniform(rng, 0, 3);
      c[k] = gen::uniform(rng, 0, 3);
    }
    c[w.lo] = 0;  // nothing maps below the window
    a[w.lo - 1] = 0;
    GradedRanks wr(w), dr(w);
    std::map<std::int64_t, std::int64_t> middle;
    for (std::int64_t k = w.lo; k <= w.hi; ++k) {
      dr.set(k, c[k + 1] + a[k]);
      middle[k] = a[k] + b[k];
      wr.set(k, b[k] + c[k]);
    }
    for (const auto& bound : triangle_bounds(wr, dr)) {
      ASSERT_LE(bound.lower, middle[bound.degree]);
      ASSERT_GE(bound.upper, middle[bound.degree]);
    }
  }
}

TEST(Hypothesis, Examples) {
  const Window w{0, 60};
  const auto cert = certify(ball_ranks(1, w), 1, 2, w);
  EXPECT_EQ(cert.verified_js.size(), 29U);
  EXPECT_NO_THROW(validate_certificate(ball_ranks(1, w), cert));

  GradedRanks flat(w);
  for (std::int64_t d = 0; d <= 60; ++d) flat.set(d, 1);
  const auto outcome = hypothesis_certify(flat, 1, 2, HypothesisDirection::positive, w);
  ASSERT_TRUE(std::holds_alternative<FailureWitness>(outcome));
  EXPECT_EQ(std::get<FailureWitness>(outcome).j, 1);

  const auto bries = brieskorn_profile(9, 2, {0, 100}).ranks;
  const auto bc = certify(bries, 2, 22, {0, 100});
  EXPECT_EQ(bc.verified_js, (std::vector<std::int64_t>{1, 2, 3, 4}));
  EXPECT_EQ(code_of([&] { hypothesis_certify(bries, 2, 5, HypothesisDirection::positive, {0, 100}); }),
            ErrorCode::UnknownDegreeTouched);
  EXPECT_EQ(code_of([&] { hypothesis_certify(bries, 2, 200, HypothesisDirection::positive, {0, 100}); }),
            ErrorCode::EmptyWindow);
}

TEST(Hypothesis, NegativeDirection) {
  const Window w{-40, 0};
  GradedRanks r(w);
  for (std::int64_t d = -39; d <= -3; d += 2) r.set(d, 1);
  const auto outcome = hypothesis_certify(r, 1, 2, HypothesisDirection::negative, w);
  ASSERT_TRUE(std::holds_alternative<HypothesisCertificate>(outcome));
  EXPECT_NO_THROW(validate_certificate(r, std::get<HypothesisCertificate>(outcome)));
}

TEST(ValidateCertificate, RejectsForgedCertificates) {
  const Window w{0, 60};
  const auto ball = ball_ranks(1, w);
  HypothesisCertificate forged{1, 3, HypothesisDirection::positive, w, {1}};
  // degree 4 has rank 0
  EXPECT_EQ(code_of([&] { validate_certificate(ball, forged); }), ErrorCode::CertInvalid);
  forged.verified_js = {};
  EXPECT_EQ(code_of([&] { validate_certificate(ball, forged); }), ErrorCode::CertInvalid);
}

TEST(ConnectedSum, Examples) {
  const Window w{0, 200};
  const auto ball = ball_ranks(1, w);
  const auto bc = certify(ball, 1, 2, w);
  const auto balls = theorem127_check(ball, bc, ball, bc, 1, w);
  EXPECT_TRUE(balls.passed);
  EXPECT_EQ(balls.K, 2);
  EXPECT_EQ(balls.rank_at_n, 0);
  ASSERT_FALSE(balls.rows.empty());
  EXPECT_EQ(balls.rows.front().chain_lower, 1);
  EXPECT_EQ(balls.certificate.verified_js.size(), balls.rows.size());
  EXPECT_EQ(balls.certificate.K, 2);

  const auto bries = brieskorn_profile(9, 2, w).ranks;
  const auto bcert = certify(bries, 2, 22, w);
  const auto pair = theorem127_check(bries, bcert, bries, bcert, 2, w);
  EXPECT_TRUE(pair.passed);
  EXPECT_EQ(pair.K, 22);
  EXPECT_EQ(pair.rank_at_n, 2);
  for (const auto& row : pair.rows) {
    EXPECT_EQ(row.chain_lower, 3);
    EXPECT_GE(row.triangle_lower, row.chain_lower);
  }

  EXPECT_EQ(code_of([&] { theorem127_check(ball, bc, bries, bcert, 1, w); }), ErrorCode::CertInvalid);
  auto negative = bc;
  negative.direction = HypothesisDirection::negative;
  EXPECT_EQ(code_of([&] { theorem127_check(ball, negative, ball, bc, 1, w); }), ErrorCode::DirectionMismatch);
}

TEST(ConnectedSum, LcmOfConstants) {
  const Window w{0, 300};
  const auto ball = ball_ranks(2, w);
  const auto c2 = certify(ball, 2, 2, w);
  const auto c3 = certify(ball, 2, 4, w);
  const auto result = theorem127_check(ball, c2, ball, c3, 2, w);
  EXPECT_EQ(result.K, 4);
  EXPECT_TRUE(result.passed);
}

TEST(ConnectedSum, PassesForRandomCertifiedProfiles) {
  gen::Rng rng(127);
  const Window w{0, 120};
  for (int t = 0; t < 100; ++t) {
    const std::int64_t n = gen::uniform(rng, 1, 4);
    auto random_profile = [&](std::int64_t K) {
      GradedRanks r(w);
      const std::int64_t base = gen::uniform(rng, 0, 2);
      for (std::int64_t d = 0; d <= 120; ++d) r.set(d, gen::uniform(rng, 0, 3));
      r.set(n, base);
      for (std::int64_t d = n + K; d <= 120; d += K) r.set(d, base + gen::uniform(rng, 1, 3));
      return r;
    };
    const std::int64_t K1 = gen::uniform(rng, 1, 6);
    const std::int64_t K2 = gen::uniform(rng, 1, 6);
    const auto r1 = random_profile(K1);
    const auto r2 = random_profile(K2);
    const auto result = theorem127_check(r1, certify(r1, n, K1, w), r2, certify(r2, n, K2, w), n, w);
    ASSERT_TRUE(result.passed);
  }
}
