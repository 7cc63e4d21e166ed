#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace reeb {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Accepts "p/q", "p" and optional leading sign; rejects q = 0.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

/// Narrowing with overflow check.
std::int64_t to_int64(const Integer& value);
std::optional<std::int64_t> try_int64(const Integer& value);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
/// Throws InvalidArgument on overflow.
std::int64_t lcm64(std::int64_t a, std::int64_t b);

enum class Perturbation : std::int8_t { minus = -1, zero = 0, plus = 1 };

char to_char(Perturbation p) noexcept;
Perturbation parse_perturbation(std::string_view text);
Perturbation flip(Perturbation p) noexcept;

/// A rational plus a signed positive infinitesimal: standard + sign * delta.
///
/// floor(k * x) for k >= 1 equals floor(k * standard) unless k * standard is an
/// integer, in which case a minus perturbation pushes it down by one.
class PerturbedRational {
 public:
  PerturbedRational() = default;
  PerturbedRational(Rational standard, Perturbation pert);

  const Rational& standard() const noexcept { return standard_; }
  Perturbation perturbation() const noexcept { return pert_; }

  /// floor(k * x), exact; k must be positive.
  std::int64_t floor_times(std::int64_t k) const;

  PerturbedRational operator-() const;
  /// The infinitesimal parts must not cancel; opposite nonzero signs throw.
  PerturbedRational operator+(const PerturbedRational& other) const;
  PerturbedRational operator+(const Rational& shift) const;
  /// Scaling by a positive rational keeps the sign; negative flips it; zero throws.
  PerturbedRational scaled(const Rational& factor) const;

  bool operator==(const PerturbedRational& other) const {
    return standard_ == other.standard_ && pert_ == other.pert_;
  }

 private:
  Rational standard_{0};
  Perturbation pert_ = Perturbation::zero;
  // Fast path when numerator and denominator fit in int64.
  bool small_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace reeb
