#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "reecd/natural.hpp"

namespace reecd {

/// p-adic valuation of a positive integer: p^exponent || n.
struct Valuation {
  std::uint64_t prime = 2;
  unsigned exponent = 0;

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// n = prime^exponent.
struct PrimePower {
  Natural prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Exponent of p in n. Throws UndefinedValuation for n = 0 and DomainError
/// when p is not prime.
unsigned val_p(const Natural& n, std::uint64_t p);
Valuation valuation(const Natural& n, std::uint64_t p);

/// p^{val_p(n, p)}.
Natural part_p(const Natural& n, std::uint64_t p);

/// (p, a) with n = p^a, or nullopt. Throws DomainError for n < 2.
std::optional<PrimePower> is_prime_power(const Natural& n);

/// Phi_i(x), the i-th cyclotomic polynomial at x, by exact division of
/// x^i - 1 by the lower cyclotomic factors. Requires i >= 1 and x >= 2.
Natural cyclotomic_eval(unsigned i, const Natural& x);

/// Throws DomainError for gcd(0, 0).
Natural gcd(const Natural& a, const Natural& b);

/// Positive divisors of n in increasing order (n >= 1, small n only).
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Distinct prime divisors of n in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace reecd
