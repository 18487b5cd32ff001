#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace reecd {

/// Arbitrary-precision non-negative integer.
///
/// Every group order, degree and index in the library is a Natural; there is
/// no floating point anywhere. Subtraction that would go negative throws
/// DomainError instead of wrapping, so a sign slip in a formula surfaces
/// immediately.
class Natural {
 public:
  Natural() = default;

  template <std::integral T>
  Natural(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (v < 0) throw_negative();
      value_ = static_cast<unsigned long>(v);
    } else {
      value_ = static_cast<unsigned long>(v);
    }
  }

  static Natural parse(std::string_view digits);
  static Natural from_mpz(mpz_class v);
  static Natural pow(const Natural& base, std::uint64_t exponent);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_even() const { return mpz_even_p(value_.get_mpz_t()) != 0; }
  bool fits_u64() const { return mpz_fits_ulong_p(value_.get_mpz_t()) != 0; }
  std::uint64_t to_u64() const;
  std::size_t bit_length() const;
  std::string str() const { return value_.get_str(); }

  const mpz_class& mpz() const { return value_; }

  Natural& operator+=(const Natural& o);
  Natural& operator-=(const Natural& o);
  Natural& operator*=(const Natural& o);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  /// Floor division; divisor must be nonzero.
  friend Natural operator/(const Natural& a, const Natural& b);
  friend Natural operator%(const Natural& a, const Natural& b);

  friend bool operator==(const Natural& a, const Natural& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.value_.get_str();
  }

 private:
  explicit Natural(mpz_class v) : value_(std::move(v)) {}
  [[noreturn]] static void throw_negative();

  mpz_class value_;
};

/// True iff a divides b. a must be nonzero.
bool divides(const Natural& a, const Natural& b);

/// b / a, asserting the division is exact; throws FormulaError otherwise.
/// `what` names the formula for the error message.
Natural exact_div(const Natural& b, const Natural& a, std::string_view what);

}  // namespace reecd
