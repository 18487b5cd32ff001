#include "reecd/lie_data.hpp"

#include <algorithm>
#include <sstream>

#include "reecd/errors.hpp"
#include "reecd/exactmath.hpp"

namespace reecd {

namespace detail {
extern const std::string_view kSporadicTable;
}  // namespace detail

namespace {

Natural binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Natural::from_mpz(std::move(r));
}

std::string field_name(std::uint64_t p, unsigned e) {
  std::string s = std::to_string(p);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

bool listed_exceptional(const std::vector<SporadicFact>& facts, std::string_view name) {
  return std::any_of(facts.begin(), facts.end(),
                     [&](const SporadicFact& f) { return f.name == name && f.exceptional; });
}

std::vector<SporadicFact> load_sporadic_table() {
  std::vector<SporadicFact> facts;
  std::istringstream in{std::string(detail::kSporadicTable)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string name;
    std::string flag;
    std::string degrees;
    if (!(fields >> name >> flag >> degrees)) continue;

    SporadicFact fact;
    fact.name = name;
    fact.exceptional = flag == "yes";
    std::istringstream list(degrees);
    std::string item;
    while (std::getline(list, item, ',')) fact.witness_even_degrees.push_back(Natural::parse(item));
    fact.has_degree_div_16 = !fact.exceptional;

    if (fact.witness_even_degrees.empty()) throw FormulaError("sporadic table: no degrees for " + name);
    for (const Natural& deg : fact.witness_even_degrees) {
      if (!deg.is_even()) throw FormulaError("sporadic table: odd witness for " + name);
      if (!fact.exceptional && !divides(16, deg)) {
        throw FormulaError("sporadic table: witness " + deg.str() + " of " + name +
                           " is not divisible by 16");
      }
      if (fact.exceptional && divides(16, deg)) {
        throw FormulaError("sporadic table: exceptional group " + name + " lists a degree divisible by 16");
      }
    }
    facts.push_back(std::move(fact));
  }

  const auto exceptional = std::count_if(facts.begin(), facts.end(),
                                         [](const SporadicFact& f) { return f.exceptional; });
  if (facts.size() != 27 || exceptional != 2 || !listed_exceptional(facts, "J1") ||
      !listed_exceptional(facts, "M22")) {
    throw FormulaError("sporadic table: expected 26 sporadic groups plus Tits, with J1 and M22 exceptional");
  }
  return facts;
}

}  // namespace

std::string LieFamily::name() const {
  const std::string m = std::to_string(rank);
  switch (tag) {
    case LieFamilyTag::PSL: return "PSL_" + m;
    case LieFamilyTag::PSU: return "PSU_" + m;
    case LieFamilyTag::PSp: return "PSp_" + std::to_string(2 * rank);
    case LieFamilyTag::OmegaOdd: return "Omega_" + std::to_string(2 * rank + 1);
    case LieFamilyTag::OmegaPM:
      return std::string("Omega") + (sign == Sign::Plus ? "+" : "-") + "_" + std::to_string(2 * rank);
    case LieFamilyTag::B2Twisted: return "2B2";
    case LieFamilyTag::D4Triality: return "3D4";
    case LieFamilyTag::E6: return sign == Sign::Plus ? "E6" : "2E6";
    case LieFamilyTag::E7: return "E7";
    case LieFamilyTag::E8: return "E8";
    case LieFamilyTag::F4: return "F4";
    case LieFamilyTag::F4Twisted: return "2F4";
    case LieFamilyTag::G2: return "G2";
    case LieFamilyTag::G2Twisted: return "2G2";
  }
  return "?";
}

std::string candidate_name(const SimpleCandidate& candidate) {
  struct Visitor {
    std::string operator()(const LieCandidate& c) const {
      return c.family.name() + "(" + field_name(c.p, c.e) + ")";
    }
    std::string operator()(const AlternatingCandidate& c) const { return "A" + std::to_string(c.n); }
    std::string operator()(const SporadicCandidate& c) const { return c.name; }
    std::string operator()(const TitsCandidate&) const { return "2F4(2)'"; }
  };
  return std::visit(Visitor{}, candidate);
}

bool family_admissible(const LieFamily& family) {
  switch (family.tag) {
    case LieFamilyTag::PSL: return family.rank >= 2;
    case LieFamilyTag::PSU: return family.rank >= 3;
    case LieFamilyTag::PSp: return family.rank >= 2;
    case LieFamilyTag::OmegaOdd: return family.rank >= 3;
    case LieFamilyTag::OmegaPM: return family.rank >= 4;
    default: return true;
  }
}

bool admissible(const LieCandidate& c) {
  if (!family_admissible(c.family) || c.e == 0 || !is_prime_u64(c.p)) return false;
  const bool q_is_2 = c.p == 2 && c.e == 1;
  const unsigned m = c.family.rank;
  switch (c.family.tag) {
    case LieFamilyTag::PSL:
      if (m == 2) return c.q0() >= Natural(5);
      return !((m == 3 || m == 4) && q_is_2);
    case LieFamilyTag::PSU: return !((m == 3 || m == 4) && q_is_2);
    case LieFamilyTag::PSp: return !(m == 2 && q_is_2);
    case LieFamilyTag::OmegaOdd: return c.p != 2;
    case LieFamilyTag::B2Twisted:
    case LieFamilyTag::F4Twisted: return c.p == 2 && c.e % 2 == 1 && c.e >= 3;
    case LieFamilyTag::G2: return c.q0() >= Natural(3);
    case LieFamilyTag::G2Twisted: return c.p == 3 && c.e % 2 == 1 && c.e >= 3;
    default: return true;
  }
}

unsigned steinberg_exponent(const LieFamily& family) {
  if (!family_admissible(family)) {
    throw DomainError("inadmissible family " + family.name());
  }
  const unsigned m = family.rank;
  switch (family.tag) {
    case LieFamilyTag::PSL:
    case LieFamilyTag::PSU: return m * (m - 1) / 2;
    case LieFamilyTag::PSp:
    case LieFamilyTag::OmegaOdd: return m * m;
    case LieFamilyTag::OmegaPM: return m * (m - 1);
    case LieFamilyTag::B2Twisted: return 2;
    case LieFamilyTag::D4Triality: return 12;
    case LieFamilyTag::E6: return 36;
    case LieFamilyTag::E7: return 63;
    case LieFamilyTag::E8: return 120;
    case LieFamilyTag::F4: return 24;
    case LieFamilyTag::F4Twisted: return 12;
    case LieFamilyTag::G2: return 6;
    case LieFamilyTag::G2Twisted: return 3;
  }
  throw DomainError("unknown family");
}

std::optional<Natural> unipotent_degree(const LieCandidate& c) {
  if (!admissible(c)) throw DomainError("inadmissible candidate " + candidate_name(c));
  const Natural q = c.q0();
  const Natural one = 1;
  const unsigned m = c.family.rank;
  const std::string label = "unipotent degree of " + candidate_name(c);

  switch (c.family.tag) {
    case LieFamilyTag::PSL:
      if (m < 4) return std::nullopt;
      return exact_div(q * (Natural::pow(q, m - 1) - one), q - one, label);
    case LieFamilyTag::PSU: {
      if (m < 4) return std::nullopt;
      // q^{m-1} - (-1)^{m-1}
      const Natural power = Natural::pow(q, m - 1);
      const Natural signed_term = (m - 1) % 2 == 0 ? power - one : power + one;
      return exact_div(q * signed_term, q + one, label);
    }
    case LieFamilyTag::PSp:
    case LieFamilyTag::OmegaOdd:
      return exact_div(q * (Natural::pow(q, m) - one) * (Natural::pow(q, m - 1) + one), q - one, label);
    case LieFamilyTag::E7:
      return Natural::pow(q, 46) * cyclotomic_eval(7, q) * cyclotomic_eval(12, q) *
             cyclotomic_eval(14, q);
    default: return std::nullopt;
  }
}

Natural alt_char_degree(unsigned n, unsigned r, unsigned s) {
  if (n < 8 || r < 1 || r + 2 * s + 1 > n) {
    throw DomainError("alt_char_degree: need n >= 8, r >= 1, r + 2s + 1 <= n; got (" +
                      std::to_string(n) + ", " + std::to_string(r) + ", " + std::to_string(s) + ")");
  }
  const Natural numerator = binomial(n, s) * binomial(n - s - 1, r - 1) * Natural(n - 2 * s - r);
  return exact_div(numerator, Natural(r + s), "chi_{r,s}(1)");
}

AltWitness alt_16_witness(unsigned n) {
  if (n < 8) throw DomainError("alt_16_witness: n must be >= 8");
  unsigned r = 2;
  unsigned s = 1;  // n = 2t, t >= 4
  if (n % 4 == 1) {
    r = 1;
    s = 2;
  } else if (n % 4 == 3) {
    r = 3;
    s = 2;
  }
  return AltWitness{r, s, alt_char_degree(n, r, s)};
}

std::span<const SporadicFact> sporadic_table() {
  static const std::vector<SporadicFact> table = load_sporadic_table();
  return table;
}

const SporadicFact& sporadic_fact(std::string_view name) {
  for (const SporadicFact& fact : sporadic_table()) {
    if (fact.name == name) return fact;
  }
  throw DomainError("unknown sporadic group: " + std::string(name));
}

}  // namespace reecd
