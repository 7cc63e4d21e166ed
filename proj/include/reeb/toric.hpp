#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "reeb/graded.hpp"
#include "reeb/index_model.hpp"
#include "reeb/rational.hpp"

namespace reeb {

/// One facet of a toric diagram: vertices v_1..v_n in Z^n, an auxiliary lattice
/// point eta, and the Reeb vector R in Q^{n+1}. The vectors (v_j, 1) together
/// with (eta, 1) must form a Z-basis of Z^{n+1}.
struct ToricFacetData {
  std::vector<std::vector<std::int64_t>> vertices;
  std::vector<std::int64_t> eta;
  std::vector<Rational> reeb;

  std::int64_t dimension() const noexcept { return static_cast<std::int64_t>(vertices.size()); }
  bool operator==(const ToricFacetData&) const = default;
};

/// R = sum_j b_j (v_j, 1) + b (eta, 1), with the resonance data
/// q = lcm of the denominators of b_j/|b| and N = q/|b|.
struct ReebDecomposition {
  std::vector<Rational> b_list;
  Rational b;
  std::int64_t q = 1;
  std::int64_t N = 1;
  std::vector<Perturbation> signs;  // empty until chosen
  std::int64_t s = 0;               // number of minus signs

  /// b_j / |b|, the standard part of the j-th rotation angle.
  Rational angle(std::size_t j) const;
};

struct FacetWithSigns {
  ToricFacetData facet;
  std::vector<Perturbation> signs;
};

struct Prop81Counterexample {
  int identity = 1;  // 1: shift identity, 2: value at multiples of q
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
};

struct Prop81Report {
  bool passed = true;
  std::int64_t L = 0;
  std::int64_t s = 0;
  std::int64_t q = 1;
  std::int64_t N = 1;
  std::optional<Prop81Counterexample> counterexample;  // smallest (k1, k2) in row-major order
};

struct ToricProfile {
  GradedRanks ranks;
  std::int64_t K = 0;
  std::vector<std::int64_t> Ns;
};

struct Theorem82Violation {
  std::int64_t s = 0;
  std::int64_t d = 0;
  std::int64_t base_rank = 0;
  std::int64_t shifted_rank = 0;
};

struct Theorem82Report {
  bool passed = true;
  Window window;
  std::int64_t comparisons = 0;
  std::int64_t skipped_unknown = 0;
  std::vector<Theorem82Violation> violations;
};

std::int64_t integer_determinant(const std::vector<std::vector<std::int64_t>>& matrix);

ReebDecomposition decompose_reeb(const ToricFacetData& facet);

/// Attaches signs and returns the perturbed orbit model of the facet:
/// angles b_j/|b| with the chosen signs, h = 2 sign(b), offset n.
OrbitIndexModel orbit_model_from_facet(const ReebDecomposition& decomp,
                                       std::span<const Perturbation> signs, std::int64_t n,
                                       std::int64_t order = 1);

/// Checks mu(k1 + k2 q) = mu(k1) + 2 k2 N and mu(k2 q) = n - 2 s + 2 k2 N for
/// all 1 <= k1, k2 <= L. Parallel over k1.
Prop81Report prop81_check(const ReebDecomposition& decomp, std::span<const Perturbation> signs,
                          std::int64_t n, std::int64_t L);

ToricProfile toric_rank_profile(std::span<const FacetWithSigns> facets, std::int64_t p,
                                Window window);

Theorem82Report theorem82_check(const GradedRanks& profile, std::int64_t n, std::int64_t K,
                                Window window);

namespace serial {

Prop81Report prop81_check(const ReebDecomposition& decomp, std::span<const Perturbation> signs,
                          std::int64_t n, std::int64_t L);

}  // namespace serial

}  // namespace reeb
