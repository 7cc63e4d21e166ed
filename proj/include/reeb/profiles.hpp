#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reeb/graded.hpp"

namespace reeb {

enum class RhoSign { positive, negative };

RhoSign parse_rho_sign(std::string_view text);

/// A Morse-Bott family of closed orbits at one action level, given by the
/// S^1-equivariant Betti numbers of the family and its Robbin-Salamon index.
struct MorseBottComponent {
  std::int64_t action_level = 1;
  std::int64_t rs_index = 0;
  BettiTable equivariant_betti;
};

/// First page E^1_{p,q}; zero entries are not stored.
struct E1Page {
  Window q_window;
  std::int64_t p_max = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> entries;

  std::int64_t at(std::int64_t p, std::int64_t q) const;
  /// sum over p of E^1_{p, D - p}
  std::int64_t total(std::int64_t degree) const;
};

struct Prop91Report {
  bool passed = true;
  std::int64_t base_rank = 0;  // rank at n (or -n)
  std::vector<std::pair<std::int64_t, std::int64_t>> checked;  // (degree, rank)
  std::string failure;
};

struct MorseReport {
  bool passed = true;
  std::vector<std::string> violations;
};

struct BrieskornProfile {
  GradedRanks ranks;  // partial: unknown outside the stated degrees
  std::int64_t K = 0;
};

/// Ranks of the positive part when the filling is displaceable:
/// rank(D) = sum over i + j = D + n, j >= 0 even, of rel_betti(i).
GradedRanks displaceable_ranks(const BettiTable& rel_betti, std::int64_t n, Window window);

/// Rational Poincare series of (free loop space / S^1, constants) for a truncated
/// polynomial cohomology T_{d,h+1}, coefficients of degrees 0..max_degree.
GradedRanks poincare_truncated(std::int64_t d, std::int64_t h, std::int64_t max_degree);

/// Positive equivariant homology of the unit codisk bundle; same ranks as the
/// loop-space series under the Morse-index grading.
GradedRanks cosphere_ranks(std::int64_t d, std::int64_t h, std::int64_t max_degree);

/// rank(k) = sum_{m >= 1} base_betti(k - 2 m c_B + n) for positive rho and
/// sum_{m >= 1} base_betti(k + 2 m c_B + n) for negative rho.
GradedRanks prequant_ranks(const BettiTable& base_betti, std::int64_t c_B, std::int64_t n,
                           RhoSign rho, Window window);

Prop91Report prop91_check(const BettiTable& base_betti, std::int64_t c_B, std::int64_t n,
                          RhoSign rho, std::int64_t j_max);

BrieskornProfile brieskorn_profile(std::int64_t p, std::int64_t n, Window window);

E1Page e1_page(std::span<const MorseBottComponent> components, const BettiTable& filling_rel_betti,
               std::int64_t n, bool positive_part, Window q_window);

BettiTable morse_deduce(const BettiTable& m);
MorseReport morse_verify(const BettiTable& m, const BettiTable& b, std::int64_t k_max);

}  // namespace reeb
