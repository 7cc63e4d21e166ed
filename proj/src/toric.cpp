#include "reeb/toric.hpp"

#include <algorithm>
#include <limits>

#include "reeb/error.hpp"

namespace reeb {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan over Q; the matrix is known to be invertible.
std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) fail(ErrorCode::NotUnimodular, "singular facet basis");
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t c = col; c < n; ++c) a[col][c] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  return rhs;
}

void validate_shape(const ToricFacetData& facet) {
  const std::size_t n = facet.vertices.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "facet needs at least one vertex");
  for (const auto& v : facet.vertices) {
    if (v.size() != n) fail(ErrorCode::InvalidArgument, "vertex dimension must equal the vertex count");
  }
  if (facet.eta.size() != n) fail(ErrorCode::InvalidArgument, "eta dimension must equal the vertex count");
  if (facet.reeb.size() != n + 1) fail(ErrorCode::InvalidArgument, "Reeb vector must have n + 1 entries");
}

// Columns (v_j, 1) for j = 1..n followed by (eta, 1).
std::vector<std::vector<std::int64_t>> basis_matrix(const ToricFacetData& facet) {
  const std::size_t n = facet.vertices.size();
  std::vector<std::vector<std::int64_t>> m(n + 1, std::vector<std::int64_t>(n + 1, 1));
  for (std::size_t j = 0; j <= n; ++j) {
    const auto& column = j < n ? facet.vertices[j] : facet.eta;
    for (std::size_t i = 0; i < n; ++i) m[i][j] = column[i];
  }
  return m;
}

void validate_signs(const ReebDecomposition& decomp, std::span<const Perturbation> signs,
                    std::int64_t n) {
  if (static_cast<std::size_t>(n) != decomp.b_list.size()) {
    fail(ErrorCode::InvalidArgument, "n must equal the number of facet vertices");
  }
  if (signs.size() != decomp.b_list.size()) {
    fail(ErrorCode::InvalidArgument, "one perturbation sign per vertex is required");
  }
  for (auto s : signs) {
    if (s == Perturbation::zero) {
      fail(ErrorCode::ZeroSign, "a zero perturbation sign leaves the Reeb flow degenerate");
    }
  }
}

std::int64_t count_minus(std::span<const Perturbation> signs) {
  return std::count(signs.begin(), signs.end(), Perturbation::minus);
}

Prop81Report report_header(const ReebDecomposition& decomp, std::span<const Perturbation> signs,
                           std::int64_t L) {
  Prop81Report report;
  report.L = L;
  report.s = count_minus(signs);
  report.q = decomp.q;
  report.N = decomp.N;
  return report;
}

// Second identity, checked after the first one in report order.
std::optional<Prop81Counterexample> check_multiples(const OrbitIndexModel& model,
                                                    const ReebDecomposition& decomp, std::int64_t n,
                                                    std::int64_t s, std::int64_t L) {
  for (std::int64_t k2 = 1; k2 <= L; ++k2) {
    const std::int64_t expected = n - 2 * s + 2 * k2 * decomp.N;
    const std::int64_t actual = model.index(k2 * decomp.q);
    if (actual != expected) return Prop81Counterexample{2, 0, k2, expected, actual};
  }
  return std::nullopt;
}

std::optional<Prop81Counterexample> check_shift_row(const OrbitIndexModel& model,
                                                    const ReebDecomposition& decomp,
                                                    std::int64_t k1, std::int64_t L) {
  const std::int64_t base = model.index(k1);
  for (std::int64_t k2 = 1; k2 <= L; ++k2) {
    const std::int64_t expected = base + 2 * k2 * decomp.N;
    const std::int64_t actual = model.index(k1 + k2 * decomp.q);
    if (actual != expected) return Prop81Counterexample{1, k1, k2, expected, actual};
  }
  return std::nullopt;
}

}  // namespace

Rational ReebDecomposition::angle(std::size_t j) const { return b_list.at(j) / abs(b); }

std::int64_t integer_determinant(const std::vector<std::vector<std::int64_t>>& matrix) {
  // Fraction-free Bareiss elimination.
  const std::size_t n = matrix.size();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) fail(ErrorCode::InvalidArgument, "determinant needs a square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(matrix[i][j]);
  }
  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      }
    }
    previous = a[k][k];
  }
  if (n == 0) return 1;
  return sign * to_int64(a[n - 1][n - 1]);
}

ReebDecomposition decompose_reeb(const ToricFacetData& facet) {
  validate_shape(facet);
  const auto m = basis_matrix(facet);
  const std::int64_t det = integer_determinant(m);
  if (det != 1 && det != -1) {
    fail(ErrorCode::NotUnimodular, "basis determinant is " + std::to_string(det) + ", expected +-1");
  }
  const std::size_t n = facet.vertices.size();
  RationalMatrix a(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) a[i][j] = Rational(Integer(static_cast<long>(m[i][j])));
  }
  const auto x = solve(std::move(a), facet.reeb);

  ReebDecomposition out;
  out.b_list.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
  out.b = x[n];
  Rational total = out.b;
  for (const auto& bj : out.b_list) total += bj;
  if (total != 1) {
    fail(ErrorCode::NonintegralN, "coefficients sum to " + to_string(total) +
                                      " instead of 1 (last Reeb coordinate must be 1)");
  }
  if (out.b == 0) fail(ErrorCode::ZeroB, "b = 0: the Reeb vector is not admissible for this facet");

  std::int64_t q = 1;
  for (std::size_t j = 0; j < n; ++j) q = lcm64(q, to_int64(out.angle(j).get_den()));
  out.q = q;
  const Rational ratio = Rational(Integer(static_cast<long>(q))) / abs(out.b);
  if (ratio.get_den() != 1 || ratio <= 0) {
    fail(ErrorCode::NonintegralN, "q/|b| = " + to_string(ratio) + " is not a positive integer");
  }
  out.N = to_int64(ratio.get_num());
  return out;
}

OrbitIndexModel orbit_model_from_facet(const ReebDecomposition& decomp,
                                       std::span<const Perturbation> signs, std::int64_t n,
                                       std::int64_t order) {
  validate_signs(decomp, signs, n);
  std::vector<PerturbedRational> angles;
  angles.reserve(signs.size());
  for (std::size_t j = 0; j < signs.size(); ++j) angles.emplace_back(decomp.angle(j), signs[j]);
  const std::int64_t h = decomp.b > 0 ? 2 : -2;
  return OrbitIndexModel(std::move(angles), h, n, order, 1);
}

Prop81Report prop81_check(const ReebDecomposition& decomp, std::span<const Perturbation> signs,
                          std::int64_t n, std::int64_t L) {
  const OrbitIndexModel model = orbit_model_from_facet(decomp, signs, n);
  Prop81Report report = report_header(decomp, signs, L);

  std::int64_t first_bad = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : first_bad)
  for (std::int64_t k1 = 1; k1 <= L; ++k1) {
    if (check_shift_row(model, decomp, k1, L)) first_bad = std::min(first_bad, k1);
  }
  if (first_bad != std::numeric_limits<std::int64_t>::max()) {
    report.counterexample = check_shift_row(model, decomp, first_bad, L);
  } else {
    report.counterexample = check_multiples(model, decomp, n, report.s, L);
  }
  report.passed = !report.counterexample.has_value();
  return report;
}

namespace serial {

Prop81Report prop81_check(const ReebDecomposition& decomp, std::span<const Perturbation> signs,
                          std::int64_t n, std::int64_t L) {
  const OrbitIndexModel model = orbit_model_from_facet(decomp, signs, n);
  Prop81Report report = report_header(decomp, signs, L);
  for (std::int64_t k1 = 1; k1 <= L && !report.counterexample; ++k1) {
    report.counterexample = check_shift_row(model, decomp, k1, L);
  }
  if (!report.counterexample) report.counterexample = check_multiples(model, decomp, n, report.s, L);
  report.passed = !report.counterexample.has_value();
  return report;
}

}  // namespace serial

ToricProfile toric_rank_profile(std::span<const FacetWithSigns> facets, std::int64_t p,
                                Window window) {
  if (facets.empty()) fail(ErrorCode::InvalidArgument, "no facets, hence no orbits");
  if (p < 1) fail(ErrorCode::InvalidArgument, "order of the fundamental group must be positive");
  std::vector<OrbitIndexModel> models;
  ToricProfile out;
  std::int64_t lcm = p;
  for (const auto& f : facets) {
    const auto decomp = decompose_reeb(f.facet);
    models.push_back(orbit_model_from_facet(decomp, f.signs, f.facet.dimension(), p));
    out.Ns.push_back(decomp.N);
    lcm = lcm64(lcm, decomp.N);
  }
  out.K = 2 * lcm;
  out.ranks = good_count_profile(models, window, ClassFilter::contractible_only);
  return out;
}

Theorem82Report theorem82_check(const GradedRanks& profile, std::int64_t n, std::int64_t K,
                                Window window) {
  if (K < 1) fail(ErrorCode::InvalidArgument, "K must be positive");
  if (n < 0) fail(ErrorCode::InvalidArgument, "n must be nonnegative");
  const Window& pw = profile.window();
  const Window effective{std::max(window.lo, pw.lo), std::min(window.hi, pw.hi)};
  Theorem82Report report;
  report.window = effective;
  if (effective.empty()) fail(ErrorCode::EmptyWindow, "check window does not meet the profile window");

  for (std::int64_t s = 0; s <= n; ++s) {
    const std::int64_t base_degree = n - 2 * s;
    if (!effective.contains(base_degree)) continue;
    const auto base = profile.at(base_degree);
    if (!base) {
      ++report.skipped_unknown;
      continue;
    }
    for (std::int64_t d = 1; base_degree + d * K <= effective.hi; ++d) {
      const std::int64_t degree = base_degree + d * K;
      const auto shifted = profile.at(degree);
      if (!shifted) {
        ++report.skipped_unknown;
        continue;
      }
      ++report.comparisons;
      if (*base >= *shifted) report.violations.push_back({s, d, *base, *shifted});
    }
  }
  if (report.comparisons == 0) {
    fail(ErrorCode::EmptyWindow, "window " + to_string(effective) + " admits no comparison");
  }
  report.passed = report.violations.empty();
  return report;
}

}  // namespace reeb
