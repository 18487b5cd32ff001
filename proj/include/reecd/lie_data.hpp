#pragma once

// Degree data for the simple groups that can appear as a chief factor:
// Steinberg and selected unipotent degrees of groups of Lie type, the
// alternating-group family chi_{r,s}, and sporadic witness degrees.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reecd/natural.hpp"

namespace reecd {

enum class LieFamilyTag {
  PSL,       // PSL_m(q)
  PSU,       // PSU_m(q)
  PSp,       // PSp_{2m}(q)
  OmegaOdd,  // POmega_{2m+1}(q)
  OmegaPM,   // POmega^{+-}_{2m}(q)
  B2Twisted,  // 2B2(q)
  D4Triality,  // 3D4(q)
  E6,        // E6^{+-}(q)
  E7,
  E8,
  F4,
  F4Twisted,  // 2F4(q)
  G2,
  G2Twisted,  // 2G2(q)
};

enum class Sign { Plus, Minus };

/// A Lie-type family. `rank` is the m of the classical families and unused
/// (zero) for exceptional ones; `sign` matters for OmegaPM and E6 only.
struct LieFamily {
  LieFamilyTag tag = LieFamilyTag::PSL;
  unsigned rank = 0;
  Sign sign = Sign::Plus;

  std::string name() const;
  friend bool operator==(const LieFamily&, const LieFamily&) = default;
};

/// S(q0) with q0 = p^e.
struct LieCandidate {
  LieFamily family;
  std::uint64_t p = 3;
  unsigned e = 1;

  Natural q0() const { return Natural::pow(p, e); }
  friend bool operator==(const LieCandidate&, const LieCandidate&) = default;
};

struct AlternatingCandidate {
  unsigned n = 5;
  friend bool operator==(const AlternatingCandidate&, const AlternatingCandidate&) = default;
};

struct SporadicCandidate {
  std::string name;
  friend bool operator==(const SporadicCandidate&, const SporadicCandidate&) = default;
};

/// The Tits group 2F4(2)'.
struct TitsCandidate {
  friend bool operator==(const TitsCandidate&, const TitsCandidate&) = default;
};

using SimpleCandidate =
    std::variant<LieCandidate, AlternatingCandidate, SporadicCandidate, TitsCandidate>;

std::string candidate_name(const SimpleCandidate& candidate);

/// Rank conditions of the family alone (PSL m >= 2, PSU m >= 3, PSp m >= 2,
/// odd orthogonal m >= 3, even orthogonal m >= 4).
bool family_admissible(const LieFamily& family);

/// Family conditions plus the field conditions on (p, e): the listed small
/// exceptions, odd q for POmega_{2m+1}, q = 2^{odd} >= 8 for 2B2 and 2F4,
/// q = 3^{odd} >= 27 for 2G2.
bool admissible(const LieCandidate& candidate);

/// N with St(1) = |S|_p = q0^N. Throws DomainError for an inadmissible family.
unsigned steinberg_exponent(const LieFamily& family);

/// The tabulated non-Steinberg unipotent degree, evaluated at q0, for
/// PSL (m >= 4), PSU (m >= 4), PSp (m >= 2), POmega_{2m+1} (m >= 3) and E7;
/// nullopt for every other family. Throws DomainError for an inadmissible
/// candidate.
std::optional<Natural> unipotent_degree(const LieCandidate& candidate);

/// chi_{r,s}(1) = C(n,s) C(n-s-1,r-1) (n-2s-r)/(r+s), the degree of the S_n
/// character on the partition (n-s-r, s+1, r-1). Requires n >= 8, r >= 1,
/// r + 2s + 1 <= n; throws DomainError otherwise.
Natural alt_char_degree(unsigned n, unsigned r, unsigned s);

struct AltWitness {
  unsigned r = 0;
  unsigned s = 0;
  Natural degree;
};

/// A character of A_n (n >= 8) whose degree is divisible by 16:
/// chi_{1,2} for n = 4t+1, chi_{3,2} for n = 4t+3, chi_{2,1} for n = 2t.
/// Each choice restricts irreducibly from S_n.
AltWitness alt_16_witness(unsigned n);

/// Degrees of the small alternating groups used directly by the elimination.
inline constexpr unsigned kA5OddPrimeDegree = 5;  // extends to S5
inline constexpr unsigned kA6SquareDegree = 9;    // extends to A6.2^2
inline constexpr unsigned kA7EvenDegree = 6;      // extends to Aut(A7)

struct SporadicFact {
  std::string name;
  bool exceptional = false;  // J1 and M22
  std::vector<Natural> witness_even_degrees;
  bool has_degree_div_16 = false;
};

/// The 26 sporadic groups and "Tits", in table order. Loading validates that
/// every non-exceptional witness is divisible by 16 and that exactly J1 and
/// M22 are exceptional.
std::span<const SporadicFact> sporadic_table();

/// Throws DomainError for an unknown name.
const SporadicFact& sporadic_fact(std::string_view name);

}  // namespace reecd
