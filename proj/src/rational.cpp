#include "reeb/rational.hpp"

#include <limits>
#include <numeric>

#include "reeb/error.hpp"

namespace reeb {

namespace {

__extension__ typedef __int128 i128;

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

bool fits_small(const Integer& value) {
  return value.fits_slong_p() && value.get_si() < kSmallLimit && value.get_si() > -kSmallLimit;
}

std::int64_t floor_div(i128 num, std::int64_t den) {
  i128 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min()) {
    fail(ErrorCode::InvalidArgument, "floor value exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(q);
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) fail(ErrorCode::ParseError, "empty rational");
  if (s.front() == '+') s.erase(s.begin());
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto valid = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && part[0] == '-') i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  if (!valid(num, true) || !valid(den, false)) {
    fail(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor_of(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

std::optional<std::int64_t> try_int64(const Integer& value) {
  if (!value.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(value.get_si());
}

std::int64_t to_int64(const Integer& value) {
  auto v = try_int64(value);
  if (!v) fail(ErrorCode::InvalidArgument, "integer " + value.get_str() + " exceeds 64-bit range");
  return *v;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::int64_t g = std::gcd(a, b);
  const i128 l = static_cast<i128>(a / g) * b;
  const i128 mag = l < 0 ? -l : l;
  if (mag > std::numeric_limits<std::int64_t>::max()) {
    fail(ErrorCode::InvalidArgument, "lcm overflow");
  }
  return static_cast<std::int64_t>(mag);
}

char to_char(Perturbation p) noexcept {
  switch (p) {
    case Perturbation::minus: return '-';
    case Perturbation::plus: return '+';
    case Perturbation::zero: break;
  }
  return '0';
}

Perturbation parse_perturbation(std::string_view text) {
  if (text == "+") return Perturbation::plus;
  if (text == "-") return Perturbation::minus;
  if (text == "0") return Perturbation::zero;
  fail(ErrorCode::ParseError, "perturbation sign must be '+', '-' or '0', got '" +
                                  std::string(text) + "'");
}

Perturbation flip(Perturbation p) noexcept { return static_cast<Perturbation>(-static_cast<int>(p)); }

PerturbedRational::PerturbedRational(Rational standard, Perturbation pert)
    : standard_(std::move(standard)), pert_(pert) {
  standard_.canonicalize();
  small_ = fits_small(standard_.get_num()) && fits_small(standard_.get_den());
  if (small_) {
    num_ = standard_.get_num().get_si();
    den_ = standard_.get_den().get_si();
  }
}

std::int64_t PerturbedRational::floor_times(std::int64_t k) const {
  if (k < 1) fail(ErrorCode::InvalidArgument, "iterate must be positive");
  if (small_) {
    const i128 scaled = static_cast<i128>(num_) * k;
    std::int64_t q = floor_div(scaled, den_);
    if (pert_ == Perturbation::minus && scaled % den_ == 0) --q;
    return q;
  }
  const Rational scaled = standard_ * Rational(Integer(static_cast<long>(k)));
  Integer q = floor_of(scaled);
  if (pert_ == Perturbation::minus && scaled.get_den() == 1) q -= 1;
  return to_int64(q);
}

PerturbedRational PerturbedRational::operator-() const {
  return PerturbedRational(-standard_, flip(pert_));
}

PerturbedRational PerturbedRational::operator+(const PerturbedRational& other) const {
  Perturbation sign = pert_;
  if (pert_ == Perturbation::zero) {
    sign = other.pert_;
  } else if (other.pert_ != Perturbation::zero && other.pert_ != pert_) {
    fail(ErrorCode::InvalidArgument, "sum of opposite infinitesimals has indeterminate sign");
  }
  return PerturbedRational(standard_ + other.standard_, sign);
}

PerturbedRational PerturbedRational::operator+(const Rational& shift) const {
  return PerturbedRational(standard_ + shift, pert_);
}

PerturbedRational PerturbedRational::scaled(const Rational& factor) const {
  if (factor == 0) fail(ErrorCode::InvalidArgument, "scaling by zero drops the perturbation");
  return PerturbedRational(standard_ * factor, factor > 0 ? pert_ : flip(pert_));
}

}  // namespace reeb
