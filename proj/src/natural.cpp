#include "reecd/natural.hpp"

#include "reecd/errors.hpp"

namespace reecd {

void Natural::throw_negative() {
  throw DomainError("Natural: negative value");
}

Natural Natural::parse(std::string_view digits) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw DomainError("Natural: not a decimal integer: '" + std::string(digits) + "'");
  }
  return Natural(mpz_class(std::string(digits), 10));
}

Natural Natural::from_mpz(mpz_class v) {
  if (sgn(v) < 0) throw_negative();
  return Natural(std::move(v));
}

Natural Natural::pow(const Natural& base, std::uint64_t exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.value_.get_mpz_t(), exponent);
  return Natural(std::move(r));
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw DomainError("Natural: value exceeds 64 bits: " + str());
  return mpz_get_ui(value_.get_mpz_t());
}

std::size_t Natural::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Natural& Natural::operator+=(const Natural& o) {
  value_ += o.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& o) {
  if (cmp(value_, o.value_) < 0) throw_negative();
  value_ -= o.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& o) {
  value_ *= o.value_;
  return *this;
}

Natural operator/(const Natural& a, const Natural& b) {
  if (b.is_zero()) throw DomainError("Natural: division by zero");
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return Natural(std::move(r));
}

Natural operator%(const Natural& a, const Natural& b) {
  if (b.is_zero()) throw DomainError("Natural: division by zero");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return Natural(std::move(r));
}

bool divides(const Natural& a, const Natural& b) {
  if (a.is_zero()) throw DomainError("divides: zero divisor");
  return mpz_divisible_p(b.mpz().get_mpz_t(), a.mpz().get_mpz_t()) != 0;
}

Natural exact_div(const Natural& b, const Natural& a, std::string_view what) {
  if (!divides(a, b)) {
    throw FormulaError(std::string(what) + ": " + b.str() + " is not divisible by " + a.str());
  }
  return b / a;
}

}  // namespace reecd
