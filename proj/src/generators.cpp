#include "reeb/generators.hpp"

#include "reeb/error.hpp"

namespace reeb::gen {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational random_angle(Rng& rng, std::int64_t max_den) {
  const std::int64_t q = uniform(rng, 1, max_den);
  const std::int64_t p = uniform(rng, 0, max_den);
  return make_rational(p, q);
}

Perturbation random_sign(Rng& rng, bool allow_zero) {
  if (allow_zero) return static_cast<Perturbation>(uniform(rng, -1, 1));
  return uniform(rng, 0, 1) == 0 ? Perturbation::minus : Perturbation::plus;
}

OrbitIndexModel random_rotation_model(Rng& rng, std::int64_t angle_count, std::int64_t max_den,
                                      const std::vector<std::int64_t>& h_choices, std::int64_t offset,
                                      bool positive_mean, bool allow_zero_sign) {
  for (;;) {
    std::vector<PerturbedRational> angles;
    for (std::int64_t j = 0; j < angle_count; ++j) {
      angles.emplace_back(random_angle(rng, max_den), random_sign(rng, allow_zero_sign));
    }
    const std::int64_t h = h_choices[static_cast<std::size_t>(uniform(rng, 0, std::ssize(h_choices) - 1))];
    OrbitIndexModel model(std::move(angles), h, offset);
    if (!positive_mean || sgn(model.mean_index()) > 0) return model;
  }
}

FacetWithSigns random_facet(Rng& rng, std::int64_t n, std::int64_t max_den) {
  // Rows 0..n-1 of an (n+1)-square matrix whose last row is all ones; row
  // operations among the top rows and adding multiples of the ones row keep
  // the determinant at +-1 and the last row fixed.
  const auto size = static_cast<std::size_t>(n + 1);
  std::vector<std::vector<std::int64_t>> top(static_cast<std::size_t>(n), std::vector<std::int64_t>(size, 0));
  for (std::size_t i = 0; i < top.size(); ++i) top[i][i] = 1;
  const std::int64_t ops = 3 * n + 2;
  for (std::int64_t op = 0; op < ops; ++op) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, n - 1));
    const std::int64_t c = uniform(rng, -2, 2);
    const auto src = static_cast<std::size_t>(uniform(rng, 0, n));
    for (std::size_t col = 0; col < size; ++col) {
      const std::int64_t add = src == static_cast<std::size_t>(n) ? 1 : top[src][col];
      if (src != i) top[i][col] += c * add;
    }
  }

  FacetWithSigns out;
  for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
    std::vector<std::int64_t> v;
    for (std::size_t i = 0; i < top.size(); ++i) v.push_back(top[i][j]);
    out.facet.vertices.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < top.size(); ++i) out.facet.eta.push_back(top[i][static_cast<std::size_t>(n)]);

  for (;;) {
    out.facet.reeb.clear();
    for (std::int64_t i = 0; i < n; ++i) {
      const std::int64_t q = uniform(rng, 1, max_den);
      out.facet.reeb.push_back(make_rational(uniform(rng, -2 * q, 2 * q), q));
    }
    out.facet.reeb.emplace_back(1);
    try {
      decompose_reeb(out.facet);
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ZeroB) throw;
    }
  }
  out.signs.clear();
  for (std::int64_t j = 0; j < n; ++j) out.signs.push_back(random_sign(rng));
  return out;
}

BettiTable random_rel_betti_with_top(Rng& rng, std::int64_t n, std::int64_t max_count) {
  BettiTable table;
  for (std::int64_t i = 0; i <= 2 * n + 1; ++i) table.set(i, uniform(rng, 0, max_count));
  table.set(2 * n + 2, 1);
  return table;
}

BettiTable random_lacunary(Rng& rng, std::int64_t max_degree, std::int64_t max_count) {
  BettiTable table;
  const std::int64_t parity = uniform(rng, 0, 1);
  for (std::int64_t k = parity; k <= max_degree; k += 2) table.set(k, uniform(rng, 0, max_count));
  return table;
}

}  // namespace reeb::gen
