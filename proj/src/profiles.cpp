#include "reeb/profiles.hpp"

#include <algorithm>

#include "reeb/error.hpp"

namespace reeb {

namespace {

constexpr std::int64_t kMaxExplicitWindow = std::int64_t{1} << 22;

// Power series with integer coefficients truncated above a fixed degree.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::int64_t max_degree)
      : coeffs_(static_cast<std::size_t>(max_degree + 1), 0) {}

  static TruncatedSeries monomial(std::int64_t max_degree, std::int64_t exponent) {
    TruncatedSeries s(max_degree);
    if (exponent <= max_degree) s.coeffs_[exponent] = 1;
    return s;
  }

  // 1 / (1 - t^step)
  static TruncatedSeries geometric(std::int64_t max_degree, std::int64_t step) {
    TruncatedSeries s(max_degree);
    for (std::int64_t e = 0; e <= max_degree; e += step) s.coeffs_[e] = 1;
    return s;
  }

  // 1 + t^step + ... + t^{step (terms - 1)}
  static TruncatedSeries geometric_sum(std::int64_t max_degree, std::int64_t step, std::int64_t terms) {
    TruncatedSeries s(max_degree);
    for (std::int64_t i = 0; i < terms && i * step <= max_degree; ++i) s.coeffs_[i * step] += 1;
    return s;
  }

  std::int64_t max_degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  std::int64_t operator[](std::int64_t e) const { return coeffs_[e]; }

  TruncatedSeries operator+(const TruncatedSeries& other) const {
    TruncatedSeries out(*this);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
    return out;
  }

  TruncatedSeries operator*(const TruncatedSeries& other) const {
    TruncatedSeries out(max_degree());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < coeffs_.size(); ++j) out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return out;
  }

 private:
  std::vector<std::int64_t> coeffs_;
};

void require_explicit_window(Window window) {
  if (window.empty()) fail(ErrorCode::EmptyWindow, "window is empty");
  if (window.hi - window.lo + 1 > kMaxExplicitWindow) {
    fail(ErrorCode::InvalidArgument, "window " + to_string(window) + " is too wide");
  }
}

std::int64_t viterbo_rank(const BettiTable& rel_betti, std::int64_t n, std::int64_t degree) {
  std::int64_t total = 0;
  for (const auto& [i, count] : rel_betti.entries()) {
    const std::int64_t j = degree + n - i;
    if (j >= 0 && j % 2 == 0) total += count;
  }
  return total;
}

std::int64_t prequant_rank(const BettiTable& base, std::int64_t c_B, std::int64_t n, RhoSign rho,
                           std::int64_t k) {
  if (base.empty()) return 0;
  // The argument moves by 2 c_B per step in one direction, so the loop ends
  // once it leaves the finite support of the Betti table on that side.
  std::int64_t total = 0;
  if (rho == RhoSign::positive) {
    const std::int64_t floor_degree = *base.min_degree();
    for (std::int64_t arg = k + n - 2 * c_B; arg >= floor_degree; arg -= 2 * c_B) total += base[arg];
  } else {
    const std::int64_t ceiling_degree = *base.max_degree();
    for (std::int64_t arg = k + n + 2 * c_B; arg <= ceiling_degree; arg += 2 * c_B) total += base[arg];
  }
  return total;
}

void validate_morse_table(const BettiTable& table, const char* name) {
  if (auto lo = table.min_degree(); lo && *lo < 0) {
    fail(ErrorCode::InvalidArgument, std::string(name) + " has a negative degree");
  }
}

std::int64_t alternating_sum(const BettiTable& table, std::int64_t k) {
  std::int64_t total = 0;
  for (std::int64_t i = 0; i <= k; ++i) total += ((k - i) % 2 == 0 ? 1 : -1) * table[i];
  return total;
}

}  // namespace

RhoSign parse_rho_sign(std::string_view text) {
  if (text == "+" || text == "positive") return RhoSign::positive;
  if (text == "-" || text == "negative") return RhoSign::negative;
  fail(ErrorCode::ParseError, "rho sign must be '+' or '-', got '" + std::string(text) + "'");
}

std::int64_t E1Page::at(std::int64_t p, std::int64_t q) const {
  auto it = entries.find({p, q});
  return it == entries.end() ? 0 : it->second;
}

std::int64_t E1Page::total(std::int64_t degree) const {
  std::int64_t sum = 0;
  for (const auto& [pq, rank] : entries) {
    if (pq.first + pq.second == degree) sum += rank;
  }
  return sum;
}

GradedRanks displaceable_ranks(const BettiTable& rel_betti, std::int64_t n, Window window) {
  require_explicit_window(window);
  GradedRanks out(window);
  for (std::int64_t degree = window.lo; degree <= window.hi; ++degree) {
    out.set(degree, viterbo_rank(rel_betti, n, degree));
  }
  return out;
}

GradedRanks poincare_truncated(std::int64_t d, std::int64_t h, std::int64_t max_degree) {
  if (d < 2) fail(ErrorCode::InvalidDegree, "generator degree d must be at least 2");
  if (h < 1) fail(ErrorCode::InvalidArgument, "height parameter h must be positive");
  if (d % 2 == 1 && h != 1) fail(ErrorCode::OddDWithHNot1, "odd d forces h = 1");
  if (max_degree < d - 1) fail(ErrorCode::InvalidArgument, "max degree must be at least d - 1");
  if (max_degree + 1 > kMaxExplicitWindow) fail(ErrorCode::InvalidArgument, "max degree too large");

  const std::int64_t top = max_degree;
  const auto lead = TruncatedSeries::monomial(top, d - 1);
  const auto even_part = TruncatedSeries::geometric(top, 2);
  TruncatedSeries series(top);
  if (d % 2 == 0) {
    const std::int64_t period = d * (h + 1) - 2;
    const auto tail = TruncatedSeries::monomial(top, period) * TruncatedSeries::geometric(top, period);
    const auto cohomology = TruncatedSeries::geometric_sum(top, d, h);  // (1 - t^{dh}) / (1 - t^d)
    series = lead * (even_part + tail) * cohomology;
  } else {
    const auto tail = TruncatedSeries::monomial(top, d - 1) * TruncatedSeries::geometric(top, d - 1);
    series = lead * (even_part + tail);
  }

  GradedRanks out(Window{0, max_degree});
  for (std::int64_t e = 0; e <= max_degree; ++e) out.set(e, series[e]);
  return out;
}

GradedRanks cosphere_ranks(std::int64_t d, std::int64_t h, std::int64_t max_degree) {
  return poincare_truncated(d, h, max_degree);
}

GradedRanks prequant_ranks(const BettiTable& base_betti, std::int64_t c_B, std::int64_t n,
                           RhoSign rho, Window window) {
  if (c_B < 1) fail(ErrorCode::InvalidArgument, "minimal Chern number must be positive");
  require_explicit_window(window);
  GradedRanks out(window);
  for (std::int64_t k = window.lo; k <= window.hi; ++k) out.set(k, prequant_rank(base_betti, c_B, n, rho, k));
  return out;
}

Prop91Report prop91_check(const BettiTable& base_betti, std::int64_t c_B, std::int64_t n,
                          RhoSign rho, std::int64_t j_max) {
  if (c_B < 1) fail(ErrorCode::InvalidArgument, "minimal Chern number must be positive");
  if (j_max < 1) fail(ErrorCode::InvalidArgument, "j_max must be positive");
  if (base_betti[2 * n] < 1) {
    fail(ErrorCode::PreconditionViolated, "top Betti number H_{2n}(B) must be nonzero");
  }
  if (rho == RhoSign::negative && base_betti[0] < 1) {
    fail(ErrorCode::PreconditionViolated, "H_0(B) must be nonzero");
  }
  const bool odd_free = std::none_of(base_betti.entries().begin(), base_betti.entries().end(),
                                     [](const auto& e) { return e.first % 2 != 0; });
  if (!odd_free && c_B <= n) {
    fail(ErrorCode::PreconditionViolated,
         "B has odd Betti numbers and c_B <= n; one of the two conditions is required");
  }

  Prop91Report report;
  const std::int64_t sign = rho == RhoSign::positive ? 1 : -1;
  const std::int64_t base_degree = sign * n;
  report.base_rank = prequant_rank(base_betti, c_B, n, rho, base_degree);
  for (std::int64_t j = 1; j <= j_max; ++j) {
    const std::int64_t degree = base_degree + sign * 2 * j * c_B;
    const std::int64_t rank = prequant_rank(base_betti, c_B, n, rho, degree);
    report.checked.emplace_back(degree, rank);
    if (rank <= report.base_rank && report.passed) {
      report.passed = false;
      report.failure = "rank " + std::to_string(rank) + " at degree " + std::to_string(degree) +
                       " does not exceed " + std::to_string(report.base_rank);
    }
  }
  return report;
}

BrieskornProfile brieskorn_profile(std::int64_t p, std::int64_t n, Window window) {
  if (p < 1 || p % 8 != 1) fail(ErrorCode::BadCongruence, "p must be congruent to 1 mod 8");
  if (n % 2 != 0) fail(ErrorCode::OddN, "n must be even");
  if (n < 2) fail(ErrorCode::InvalidArgument, "n must be a positive even number");
  require_explicit_window(window);

  BrieskornProfile out;
  out.K = 4 + 2 * p * (n - 1);
  out.ranks = GradedRanks(window);
  for (std::int64_t degree = window.lo; degree <= window.hi; ++degree) {
    if (degree == n) {
      out.ranks.set(degree, 1);
    } else if (degree > n && (degree - n) % out.K == 0) {
      out.ranks.set(degree, 2);
    } else {
      out.ranks.mark_unknown(degree);
    }
  }
  return out;
}

E1Page e1_page(std::span<const MorseBottComponent> components, const BettiTable& filling_rel_betti,
               std::int64_t n, bool positive_part, Window q_window) {
  require_explicit_window(q_window);
  E1Page page;
  page.q_window = q_window;
  for (const auto& c : components) {
    if (c.action_level < 1) fail(ErrorCode::InvalidArgument, "action level must be positive");
    page.p_max = std::max(page.p_max, c.action_level);
  }
  auto put = [&page](std::int64_t p, std::int64_t q, std::int64_t rank) {
    if (rank != 0) page.entries[{p, q}] += rank;
  };
  for (const auto& c : components) {
    for (std::int64_t q = q_window.lo; q <= q_window.hi; ++q) {
      put(c.action_level, q, c.equivariant_betti[c.action_level + q + c.rs_index]);
    }
  }
  if (!positive_part) {
    for (std::int64_t q = q_window.lo; q <= q_window.hi; ++q) {
      // H^{S^1}_{q+n+1}(W, dW) with the trivial circle action.
      std::int64_t rank = 0;
      for (const auto& [i, count] : filling_rel_betti.entries()) {
        const std::int64_t j = q + n + 1 - i;
        if (j >= 0 && j % 2 == 0) rank += count;
      }
      put(0, q, rank);
    }
  }
  return page;
}

BettiTable morse_deduce(const BettiTable& m) {
  validate_morse_table(m, "Morse table");
  if (!m.empty()) {
    const std::int64_t parity = m.entries().begin()->first % 2;
    for (const auto& [k, count] : m.entries()) {
      if (k % 2 != parity) {
        fail(ErrorCode::NotLacunary, "Morse numbers occupy both parities (degree " + std::to_string(k) + ")");
      }
    }
  }
  BettiTable b = m;
  const auto report = morse_verify(m, b, m.max_degree().value_or(0));
  if (!report.passed) fail(ErrorCode::InvalidArgument, "internal: lacunary table failed the Morse chain");
  return b;
}

MorseReport morse_verify(const BettiTable& m, const BettiTable& b, std::int64_t k_max) {
  validate_morse_table(m, "Morse table");
  validate_morse_table(b, "Betti table");
  MorseReport report;
  for (std::int64_t k = 0; k <= k_max; ++k) {
    const std::int64_t sm = alternating_sum(m, k);
    const std::int64_t sb = alternating_sum(b, k);
    if (sm < sb) {
      report.violations.push_back("alternating sum at k = " + std::to_string(k) + ": " +
                                  std::to_string(sm) + " < " + std::to_string(sb));
    }
    if (b[k] > m[k]) {
      report.violations.push_back("b_" + std::to_string(k) + " = " + std::to_string(b[k]) +
                                  " exceeds m_" + std::to_string(k) + " = " + std::to_string(m[k]));
    }
  }
  report.passed = report.violations.empty();
  return report;
}

}  // namespace reeb
