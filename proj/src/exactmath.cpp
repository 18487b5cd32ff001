#include "reecd/exactmath.hpp"

#include <map>
#include <string>

#include "reecd/errors.hpp"

namespace reecd {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

void require_prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw DomainError("not a prime: " + std::to_string(p));
}

// Trial-division bound for is_prime_power. Values below kTrialBound^2 with
// no factor under the bound are prime.
constexpr std::uint64_t kTrialBound = 1000;

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // This base set is a proven witness set for all n < 2^64.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    a %= n;
    if (a == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

unsigned val_p(const Natural& n, std::uint64_t p) {
  if (n.is_zero()) throw UndefinedValuation("val_p(0) is undefined");
  require_prime(p);
  mpz_class rest;
  mpz_class prime(static_cast<unsigned long>(p));
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.mpz().get_mpz_t(), prime.get_mpz_t()));
}

Valuation valuation(const Natural& n, std::uint64_t p) {
  return {p, val_p(n, p)};
}

Natural part_p(const Natural& n, std::uint64_t p) {
  return Natural::pow(p, val_p(n, p));
}

std::optional<PrimePower> is_prime_power(const Natural& n) {
  if (n < Natural(2)) throw DomainError("is_prime_power: n must be >= 2, got " + n.str());

  for (std::uint64_t p = 2; p < kTrialBound; ++p) {
    if (!is_prime_u64(p) || !divides(p, n)) continue;
    const unsigned a = val_p(n, p);
    if (Natural::pow(p, a) == n) return PrimePower{p, a};
    return std::nullopt;
  }
  if (n < Natural(kTrialBound * kTrialBound)) return PrimePower{n, 1};

  // No factor below the bound, so any base is >= kTrialBound and the
  // exponent is at most log_{kTrialBound}(n). The largest exact root wins.
  const std::size_t max_exp = n.bit_length() / 9 + 1;
  mpz_class root;
  for (std::size_t a = max_exp; a >= 2; --a) {
    if (mpz_root(root.get_mpz_t(), n.mpz().get_mpz_t(), a) != 0) {
      if (mpz_probab_prime_p(root.get_mpz_t(), 40) == 0) return std::nullopt;
      return PrimePower{Natural::from_mpz(root), static_cast<unsigned>(a)};
    }
  }
  if (mpz_probab_prime_p(n.mpz().get_mpz_t(), 40) == 0) return std::nullopt;
  return PrimePower{n, 1};
}

Natural cyclotomic_eval(unsigned i, const Natural& x) {
  if (i == 0) throw DomainError("cyclotomic_eval: index must be >= 1");
  if (x < Natural(2)) throw DomainError("cyclotomic_eval: x must be >= 2");

  std::map<unsigned, Natural> phi;
  for (std::uint64_t d : divisors(i)) {
    Natural lower = 1;
    for (const auto& [e, value] : phi) {
      if (d % e == 0) lower *= value;
    }
    const Natural numerator = Natural::pow(x, d) - Natural(1);
    phi.emplace(static_cast<unsigned>(d),
                exact_div(numerator, lower, "cyclotomic Phi_" + std::to_string(d)));
  }
  return phi.at(i);
}

Natural gcd(const Natural& a, const Natural& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural::from_mpz(std::move(g));
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw DomainError("divisors(0)");
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t a = 1; a * a <= n; ++a) {
    if (n % a != 0) continue;
    small.push_back(a);
    if (a * a != n) large.push_back(n / a);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d : divisors(n)) {
    if (is_prime_u64(d)) out.push_back(d);
  }
  return out;
}

}  // namespace reecd
