#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "reeb/index_model.hpp"
#include "reeb/toric.hpp"

namespace reeb::gen {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Angle p/q with 1 <= q <= max_den and 0 <= p <= max_den.
Rational random_angle(Rng& rng, std::int64_t max_den);

/// Nonzero perturbation sign, or any of the three when allow_zero is set.
Perturbation random_sign(Rng& rng, bool allow_zero = false);

/// Rotation model with the given number of angles; h drawn from h_choices.
/// With positive_mean set, draws are repeated until the mean index is positive.
OrbitIndexModel random_rotation_model(Rng& rng, std::int64_t angle_count, std::int64_t max_den,
                                      const std::vector<std::int64_t>& h_choices, std::int64_t offset,
                                      bool positive_mean, bool allow_zero_sign = false);

/// Facet whose columns (v_j, 1), (eta, 1) form a lattice basis, with a Reeb vector
/// of denominators <= max_den, last coordinate 1 and b != 0, and random signs.
FacetWithSigns random_facet(Rng& rng, std::int64_t n, std::int64_t max_den);

/// Relative Betti numbers of a 2n+2 dimensional filling with the top class present.
BettiTable random_rel_betti_with_top(Rng& rng, std::int64_t n, std::int64_t max_count);

/// Morse type numbers supported on one parity.
BettiTable random_lacunary(Rng& rng, std::int64_t max_degree, std::int64_t max_count);

}  // namespace reeb::gen
