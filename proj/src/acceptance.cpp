#include "reeb/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "reeb/connect_sum.hpp"
#include "reeb/error.hpp"
#include "reeb/generators.hpp"
#include "reeb/index_jump.hpp"
#include "reeb/profiles.hpp"
#include "reeb/toric.hpp"
#include "reeb/two_orbit.hpp"

namespace reeb {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

BettiTable cpn_betti(std::int64_t n) {
  BettiTable b;
  for (std::int64_t i = 0; i <= n; ++i) b.set(2 * i, 1);
  return b;
}

Outcome sphere_triple() {
  const Window window{-10, 60};
  for (std::int64_t n = 1; n <= 3; ++n) {
    const GradedRanks pre = prequant_ranks(cpn_betti(n), n + 1, n, RhoSign::positive, window);
    const GradedRanks disp = displaceable_ranks(BettiTable{{2 * n + 2, 1}}, n, window);
    const GradedRanks ball = ball_ranks(n, window);
    for (std::int64_t d = window.lo; d <= window.hi; ++d) {
      const std::int64_t formula = (d > n && (d - n) % 2 == 0) ? 1 : 0;
      if (pre.at(d) != formula || disp.at(d) != formula || ball.at(d) != formula) {
        return {false, "n=" + std::to_string(n) + " disagrees at degree " + std::to_string(d)};
      }
    }
  }
  return {true, "n=1,2,3 on [-10,60]"};
}

Outcome prop51(gen::Rng& rng) {
  for (int t = 0; t < 200; ++t) {
    const std::int64_t n = gen::uniform(rng, 1, 6);
    const BettiTable rel = gen::random_rel_betti_with_top(rng, n, 4);
    const GradedRanks ranks = displaceable_ranks(rel, n, {n, n + 40});
    for (std::int64_t k = 1; k <= 20; ++k) {
      if (*ranks.at(n + 2 * k) != *ranks.at(n) + 1) {
        return {false, "table " + std::to_string(t) + " fails at k=" + std::to_string(k)};
      }
    }
  }
  return {true, "200 tables, k in [1,20]"};
}

Outcome loop_series() {
  std::vector<std::pair<std::int64_t, std::int64_t>> cases;
  for (std::int64_t d : {2, 4, 6, 8}) {
    for (std::int64_t h : {1, 2, 3}) cases.emplace_back(d, h);
  }
  for (std::int64_t d : {3, 5, 7}) cases.emplace_back(d, 1);
  for (const auto& [d, h] : cases) {
    const std::int64_t period = d * (h + 1) - 2;
    const std::int64_t base = d * h - 1;
    const GradedRanks series = poincare_truncated(d, h, base + 20 * period);
    bool ok = *series.at(base) == h;
    for (std::int64_t j = 1; j <= 20 && ok; ++j) ok = *series.at(base + j * period) == h + 1;
    if (!ok) return {false, "d=" + std::to_string(d) + " h=" + std::to_string(h)};
  }
  return {true, std::to_string(cases.size()) + " (d,h) pairs, j in [1,20]"};
}

Outcome prop81(gen::Rng& rng) {
  for (int t = 0; t < 100; ++t) {
    const std::int64_t n = gen::uniform(rng, 1, 4);
    const FacetWithSigns facet = gen::random_facet(rng, n, 20);
    const ReebDecomposition decomp = decompose_reeb(facet.facet);
    const Prop81Report report = prop81_check(decomp, facet.signs, n, 50);
    if (!report.passed) return {false, "facet " + std::to_string(t) + " fails"};
  }
  return {true, "100 facets, k1,k2 in [1,50]"};
}

Outcome index_jump(gen::Rng& rng) {
  const OrbitIndexModel example({PerturbedRational(make_rational(1, 3), Perturbation::minus)}, 2, 1);
  const std::vector<OrbitIndexModel> family{example};
  const CertificateSearch worked = find_certificate(family, 2, 2, 1'000'000);
  const auto* cert = std::get_if<IndexJumpCertificate>(&worked);
  if (cert == nullptr || cert->d != 16 || cert->ks != std::vector<std::int64_t>{6} ||
      !verify_certificate(family, *cert).passed) {
    return {false, "worked example does not give (d=16, k=6)"};
  }

  int found = 0;
  int verified = 0;
  for (int t = 0; t < 50; ++t) {
    const std::int64_t angles = gen::uniform(rng, 1, 3);
    const std::vector<OrbitIndexModel> models{
        gen::random_rotation_model(rng, angles, 12, {-2, 2}, angles, true)};
    const std::int64_t divisor = gen::uniform(rng, 1, 6);
    const std::int64_t ell0 = gen::uniform(rng, 1, 10);
    const CertificateSearch search = find_certificate(models, divisor, ell0, 1'000'000);
    if (const auto* c = std::get_if<IndexJumpCertificate>(&search)) {
      ++found;
      if (verify_certificate(models, *c).passed) ++verified;
    }
  }
  const bool ok = found == 50 && verified == 50;
  return {ok, "worked example (16,6) ok; random: " + std::to_string(found) + "/50 found, " +
                  std::to_string(verified) + " verified"};
}

Outcome refutation(gen::Rng& rng) {
  struct Scenario {
    std::string name;
    GradedRanks profile;
    std::int64_t n;
    std::int64_t K;
  };
  const Window window{0, 400};
  std::vector<Scenario> scenarios{{"sphere", ball_ranks(1, window), 1, 2},
                                  {"brieskorn", brieskorn_profile(9, 2, window).ranks, 2, 22}};
  std::ostringstream detail;
  bool ok = true;
  for (const auto& sc : scenarios) {
    const HypothesisOutcome hyp = hypothesis_certify(sc.profile, sc.n, sc.K, HypothesisDirection::positive, window);
    if (!std::holds_alternative<HypothesisCertificate>(hyp)) return {false, sc.name + " profile not certified"};
    int traces = 0;
    int inconclusive = 0;
    int rechecked = 0;
    for (int t = 0; t < 100; ++t) {
      const std::vector<OrbitIndexModel> models{
          gen::random_rotation_model(rng, sc.n, 12, {-2, 2}, sc.n, true)};
      const RefuteOutcome outcome =
          refute_equal_index(models, sc.n, sc.K, HypothesisDirection::positive, 1'000'000);
      if (const auto* trace = std::get_if<ContradictionTrace>(&outcome)) {
        ++traces;
        if (recheck_trace(models, *trace).passed) ++rechecked;
      } else {
        ++inconclusive;
      }
    }
    ok = ok && inconclusive < 5 && rechecked == traces;
    detail << sc.name << ": " << traces << " traces (" << rechecked << " re-verified), " << inconclusive
           << " inconclusive; ";
  }
  return {ok, detail.str()};
}

Outcome theorem127() {
  const Window window{0, 200};
  const auto certify = [&](const GradedRanks& r, std::int64_t n, std::int64_t K) {
    return std::get<HypothesisCertificate>(hypothesis_certify(r, n, K, HypothesisDirection::positive, window));
  };
  const GradedRanks ball = ball_ranks(1, window);
  const HypothesisCertificate ball_cert = certify(ball, 1, 2);
  const Theorem127Result balls = theorem127_check(ball, ball_cert, ball, ball_cert, 1, window);

  const GradedRanks bries = brieskorn_profile(9, 2, window).ranks;
  const HypothesisCertificate bries_cert = certify(bries, 2, 22);
  const Theorem127Result brieskorns = theorem127_check(bries, bries_cert, bries, bries_cert, 2, window);

  bool ok = balls.passed && balls.K == 2 && brieskorns.passed && brieskorns.K == 22;
  for (const auto* result : {&balls, &brieskorns}) {
    for (const auto& row : result->rows) ok = ok && row.triangle_lower >= row.chain_lower;
  }
  ok = ok && !brieskorns.rows.empty() && brieskorns.rows.front().chain_lower == 3 && brieskorns.rank_at_n == 2;
  return {ok, "ball#ball K=" + std::to_string(balls.K) + " rows=" + std::to_string(balls.rows.size()) +
                  ", brieskorn#brieskorn K=" + std::to_string(brieskorns.K) +
                  " rows=" + std::to_string(brieskorns.rows.size())};
}

Outcome invariants(gen::Rng& rng) {
  const Rational delta = make_rational(1, 1'000'000);
  std::int64_t violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::int64_t angle_count = gen::uniform(rng, 0, 3);
    const std::int64_t offset = gen::uniform(rng, -3, 3);
    const OrbitIndexModel m =
        gen::random_rotation_model(rng, angle_count, 12, {-3, -2, -1, 0, 1, 2, 3}, offset, false, true);
    const std::int64_t ne = m.angle_count();
    const QuasiPeriod qp = quasi_period(m);
    std::vector<Rational> substituted;
    for (const auto& a : m.angles()) substituted.push_back(a.standard() + static_cast<int>(a.perturbation()) * delta);

    for (std::int64_t k = 1; k <= 10'000; ++k) {
      const std::int64_t mu = m.index(k);
      const Rational gap = Rational(mu) - k * m.mean_index();
      if (gap < offset - 2 * ne || gap > offset) ++violations;
      if (m.index(k + qp.period) != mu + qp.jump) ++violations;
      if (k <= 1000) {
        Integer sum = 0;
        for (const auto& x : substituted) sum += floor_of(k * x);
        if (to_int64(2 * sum) + m.h() * k + offset != mu) ++violations;
      }
    }
  }
  return {violations == 0, "1000 models, " + std::to_string(violations) + " violations"};
}

Outcome morse(gen::Rng& rng) {
  for (int t = 0; t < 200; ++t) {
    const BettiTable m = gen::random_lacunary(rng, 20, 4);
    const BettiTable b = morse_deduce(m);
    if (!(b == m)) return {false, "table " + std::to_string(t) + ": b != m"};
    if (!morse_verify(m, b, 21).passed) return {false, "table " + std::to_string(t) + ": verify fails"};
    for (std::int64_t k = 0; k <= 21; ++k) {
      BettiTable bumped = b;
      bumped.add(k, 1);
      if (morse_verify(m, bumped, 21).passed) {
        return {false, "table " + std::to_string(t) + ": bump at " + std::to_string(k) + " not reported"};
      }
    }
  }
  return {true, "200 tables, every single bump reported"};
}

CriterionResult timed(int id, std::string name, double budget, const std::function<Outcome()>& body) {
  CriterionResult r{id, std::move(name), false, 0.0, budget, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = body();
    r.passed = o.passed;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > budget) {
    r.passed = false;
    r.detail += " [over time budget]";
  }
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  // Each randomized criterion gets its own stream so results do not depend on run order.
  auto rng_for = [seed](int id) { return gen::Rng(seed * 1'000'003ULL + static_cast<std::uint64_t>(id)); };
  std::vector<CriterionResult> out;
  out.push_back(timed(1, "sphere triple agreement", 1.0, sphere_triple));
  out.push_back(timed(2, "displaceable top-class shift", 1.0, [&] { auto r = rng_for(2); return prop51(r); }));
  out.push_back(timed(3, "truncated loop-space series", 1.0, loop_series));
  out.push_back(timed(4, "toric iteration identities", 5.0, [&] { auto r = rng_for(4); return prop81(r); }));
  out.push_back(timed(5, "common index jump", 30.0, [&] { auto r = rng_for(5); return index_jump(r); }));
  out.push_back(timed(6, "equal-index refutation", 60.0, [&] { auto r = rng_for(6); return refutation(r); }));
  out.push_back(timed(7, "connected-sum arithmetic", 1.0, theorem127));
  out.push_back(timed(8, "index invariants", 30.0, [&] { auto r = rng_for(8); return invariants(r); }));
  out.push_back(timed(9, "lacunary Morse equality", 1.0, [&] { auto r = rng_for(9); return morse(r); }));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  (" << r.seconds << " s / "
      << r.budget_seconds << " s)  " << r.detail;
  return out.str();
}

}  // namespace reeb
