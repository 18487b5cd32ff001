#include "reecd/elimination.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "reecd/errors.hpp"
#include "reecd/exactmath.hpp"

namespace reecd {

using nlohmann::ordered_json;

std::string_view reason_code_name(ReasonCode code) {
  switch (code) {
    case ReasonCode::NotP3: return "not-p3";
    case ReasonCode::ExponentEquation: return "exponent-equation";
    case ReasonCode::Parity3f: return "parity-3f";
    case ReasonCode::K2Parity: return "k2-parity";
    case ReasonCode::Divisibility16: return "16-divisibility";
    case ReasonCode::PrimePowerMismatch: return "prime-power-mismatch";
    case ReasonCode::EvenDegreeTooSmall: return "even-degree-too-small";
    case ReasonCode::Unipotent3PartBound: return "unipotent-3part-bound";
    case ReasonCode::PslPsuRankBound: return "psl-psu-rank-bound";
    case ReasonCode::PspRankBound: return "psp-rank-bound";
    case ReasonCode::Psl2Divisibility: return "psl2-divisibility";
    case ReasonCode::E7ThreePartOverflow: return "e7-3part-overflow";
    case ReasonCode::G2TwistedK3Bound: return "2g2-k3-bound";
    case ReasonCode::A6Exponent: return "a6-exponent";
    case ReasonCode::A7Bound: return "a7-bound";
    case ReasonCode::SporadicWitness: return "sporadic-witness";
  }
  return "?";
}

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::Equal: return "==";
    case Relation::Less: return "<";
    case Relation::LessEqual: return "<=";
    case Relation::GreaterEqual: return ">=";
    case Relation::DividesSomeMember: return "divides some member of";
  }
  return "?";
}

bool Witness::holds() const {
  switch (required) {
    case Relation::Equal: return lhs == rhs;
    case Relation::Less: return lhs < rhs;
    case Relation::LessEqual: return lhs <= rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
    case Relation::DividesSomeMember:
      throw std::logic_error("DividesSomeMember needs a degree set");
  }
  return false;
}

bool Witness::holds_against(const DegreeSet& superset) const {
  if (required != Relation::DividesSomeMember) return holds();
  return std::any_of(superset.begin(), superset.end(),
                     [&](const auto& member) { return divides(lhs, member.first); });
}

bool steinberg_constraint(const LieCandidate& candidate, int f, unsigned k) {
  if (candidate.p != 3 || !family_admissible(candidate.family)) return false;
  const std::uint64_t n = steinberg_exponent(candidate.family);
  return static_cast<std::uint64_t>(candidate.e) * n * k == 3ULL * static_cast<std::uint64_t>(f);
}

MixedThreeParts max_v3_mixed(const DegreeSet& set) {
  MixedThreeParts out;
  for (const auto& [value, prov] : set) {
    if (value <= Natural(1) || is_prime_power(value)) continue;
    const unsigned v = val_p(value, 3);
    out.max = std::max(out.max, v);
    if (v > 0 && (!out.min_positive || v < *out.min_positive)) out.min_positive = v;
  }
  return out;
}

namespace {

// Everything the tests need from H, computed once per spec.
struct Context {
  const AlmostSimpleSpec& spec;
  DegreeSet superset;
  Natural max_two;
  Natural smallest_even;
  MixedThreeParts v3;
  EliminationOptions options;

  Context(const AlmostSimpleSpec& s, EliminationOptions o)
      : spec(s),
        superset(cd_superset(s)),
        max_two(max_two_part(superset)),
        smallest_even(smallest_even_degree(superset)),
        v3(max_v3_mixed(superset)),
        options(o) {}

  int f() const { return spec.params.f; }
  Natural three_f() const { return Natural(3 * f()); }
};

Witness make(Relation r, std::string lhs_label, Natural lhs, std::string rhs_label, Natural rhs,
             std::string note = {}) {
  return Witness{r, std::move(lhs_label), std::move(lhs), std::move(rhs_label), std::move(rhs),
                 std::move(note)};
}

using Verdict = std::variant<Survives, RuledOut>;

Verdict check(ReasonCode code, Witness w, const DegreeSet& superset) {
  if (w.holds_against(superset)) return Survives{};
  return RuledOut{code, std::move(w)};
}

bool is_classical_odd(LieFamilyTag t) { return t == LieFamilyTag::PSp || t == LieFamilyTag::OmegaOdd; }

Verdict unipotent_bound(const Context& ctx, const LieCandidate& c, unsigned k) {
  const Natural u = *unipotent_degree(c);
  const unsigned v = k * val_p(u, 3);
  // 3^v >= theta / 3  <=>  2v + 1 >= f
  Verdict out = check(ReasonCode::Unipotent3PartBound,
                      make(Relation::GreaterEqual, "2*v3(u^k)+1", Natural(2 * v + 1), "f", Natural(ctx.f()),
                           "u = " + u.str() + ", v3(u^k) = " + std::to_string(v)),
                      ctx.superset);
  if (!std::holds_alternative<Survives>(out) || !ctx.options.strict) return out;

  bool matched = false;
  std::size_t scanned = 0;
  for (const auto& [value, prov] : ctx.superset) {
    if (value <= Natural(1) || is_prime_power(value)) continue;
    ++scanned;
    if (val_p(value, 3) == v) matched = true;
  }
  if (matched) return Survives{};
  return RuledOut{ReasonCode::Unipotent3PartBound,
                  make(Relation::Equal, "v3(u^k)", Natural(v), "max v3 over mixed members", Natural(ctx.v3.max),
                       "strict: no non-prime-power member has 3-adic valuation " + std::to_string(v) +
                           " (" + std::to_string(scanned) + " scanned)")};
}

Verdict eliminate_lie(const Context& ctx, const LieCandidate& c, unsigned k) {
  if (!admissible(c)) throw std::invalid_argument("inadmissible candidate " + candidate_name(c));
  if (c.p != 3) {
    return RuledOut{ReasonCode::NotP3,
                    make(Relation::Equal, "p", Natural(c.p), "3", Natural(3),
                         "q^3 is the only prime-power degree, so St(1) must be a power of 3")};
  }
  const unsigned n = steinberg_exponent(c.family);
  const Natural enk = Natural(c.e) * Natural(n) * Natural(k);
  if (k == 2) {
    return RuledOut{ReasonCode::K2Parity,
                    make(Relation::Equal, "e*N*k", enk, "3f", ctx.three_f(), "e*N*2 is even, 3f is odd")};
  }
  if (n % 2 == 0) {
    return RuledOut{ReasonCode::Parity3f,
                    make(Relation::Equal, "e*N*k", enk, "3f", ctx.three_f(), "N = " + std::to_string(n) + " is even")};
  }
  if (enk != ctx.three_f()) {
    return RuledOut{ReasonCode::ExponentEquation, make(Relation::Equal, "e*N*k", enk, "3f", ctx.three_f())};
  }

  const Natural q0 = c.q0();
  const unsigned m = c.family.rank;
  switch (c.family.tag) {
    case LieFamilyTag::PSL:
    case LieFamilyTag::PSU: {
      if (m == 2) {
        const Natural one = 1;
        Natural div = k == 3 ? q0 * q0 * (q0 - one) : q0 - one;
        const std::string label = k == 3 ? "q0^2(q0-1)" : "q0-1";
        return check(ReasonCode::Psl2Divisibility,
                     make(Relation::DividesSomeMember, label, std::move(div), "members scanned",
                          Natural(ctx.superset.size())),
                     ctx.superset);
      }
      if (m == 3) {
        const Natural one = 1;
        const bool unitary = c.family.tag == LieFamilyTag::PSU;
        const Natural deg = unitary ? (q0 - one) * (q0 + one) * (q0 + one) : (q0 - one) * (q0 - one) * (q0 + one);
        return check(ReasonCode::Divisibility16,
                     make(Relation::LessEqual, "2-part of degree", part_p(deg, 2), "max 2-part of cd_superset",
                          ctx.max_two,
                          std::string(unitary ? "(q0-1)(q0+1)^2" : "(q0-1)^2(q0+1)") + " = " + deg.str()),
                     ctx.superset);
      }
      Verdict v = unipotent_bound(ctx, c, k);
      if (!std::holds_alternative<Survives>(v)) return v;
      return check(ReasonCode::PslPsuRankBound,
                   make(Relation::LessEqual, "m(m-1)", Natural(m * (m - 1)), "18", Natural(18)), ctx.superset);
    }
    case LieFamilyTag::E7: {
      const Natural u = *unipotent_degree(c);
      const unsigned v = k * val_p(u, 3);
      return check(ReasonCode::E7ThreePartOverflow,
                   make(Relation::LessEqual, "46ek", Natural(v), "max v3 of non-prime-power members",
                        Natural(ctx.v3.max),
                        "looser bound: 46ek = " + std::to_string(v) + " vs 2f = " + std::to_string(2 * ctx.f())),
                   ctx.superset);
    }
    case LieFamilyTag::G2Twisted:
      if (k == 3) {
        const int f = ctx.f();
        return check(ReasonCode::G2TwistedK3Bound,
                     make(Relation::Less, "3^(2f)", Natural::pow(3, 2 * f), "f^3", Natural::pow(f, 3)),
                     ctx.superset);
      }
      return Survives{};
    default:
      if (is_classical_odd(c.family.tag)) {
        Verdict v = unipotent_bound(ctx, c, k);
        if (!std::holds_alternative<Survives>(v)) return v;
        return check(ReasonCode::PspRankBound, make(Relation::Less, "m^2", Natural(m * m), "7", Natural(7)),
                     ctx.superset);
      }
      return Survives{};
  }
}

Verdict two_part_witness(const Context& ctx, ReasonCode code, const Natural& degree, unsigned k,
                         std::string note) {
  const Natural power = Natural::pow(degree, k);
  return check(code,
               make(Relation::LessEqual, "2-part of degree^k", part_p(power, 2), "max 2-part of cd_superset",
                    ctx.max_two, std::move(note)),
               ctx.superset);
}

Verdict eliminate_alternating(const Context& ctx, const AlternatingCandidate& c, unsigned k) {
  if (c.n < 5) throw std::invalid_argument("A_n needs n >= 5");
  switch (c.n) {
    case 5: {
      const Natural q3 = Natural::pow(ctx.spec.params.q, 3);
      return check(ReasonCode::PrimePowerMismatch,
                   make(Relation::Equal, "5^k", Natural::pow(kA5OddPrimeDegree, k), "q^3", q3,
                        "the only prime-power degree of H is q^3"),
                   ctx.superset);
    }
    case 6:
      return check(ReasonCode::A6Exponent,
                   make(Relation::Equal, "2k", Natural(2 * k), "3f", ctx.three_f(), "9^k would have to equal q^3"),
                   ctx.superset);
    case 7:
      return check(ReasonCode::A7Bound,
                   make(Relation::GreaterEqual, "6^k", Natural::pow(kA7EvenDegree, k), "smallest even degree",
                        ctx.smallest_even),
                   ctx.superset);
    default: {
      const AltWitness w = alt_16_witness(c.n);
      return two_part_witness(ctx, ReasonCode::Divisibility16, w.degree, k,
                              "chi_{" + std::to_string(w.r) + "," + std::to_string(w.s) + "}(1) = " + w.degree.str());
    }
  }
}

Verdict eliminate_sporadic(const Context& ctx, std::string_view name, unsigned k) {
  const SporadicFact& fact = sporadic_fact(name);
  const Natural& first = fact.witness_even_degrees.front();
  if (!fact.exceptional) {
    return two_part_witness(ctx, ReasonCode::SporadicWitness, first, k, "degree " + first.str());
  }
  if (k == 1) {
    return check(ReasonCode::EvenDegreeTooSmall,
                 make(Relation::GreaterEqual, "even degree", first, "smallest even degree", ctx.smallest_even),
                 ctx.superset);
  }
  const Natural& second = fact.witness_even_degrees.at(1);
  const Natural product = first * second * Natural::pow(first, k - 2);
  return check(ReasonCode::Divisibility16,
               make(Relation::LessEqual, "2-part of product", part_p(product, 2), "max 2-part of cd_superset",
                    ctx.max_two,
                    first.str() + " * " + second.str() + (k == 3 ? " * " + first.str() : std::string())),
               ctx.superset);
}

EliminationOutcome eliminate_in(const Context& ctx, const SimpleCandidate& candidate, unsigned k) {
  if (k < 1 || k > 3) throw std::invalid_argument("k must be 1, 2 or 3");
  struct Visitor {
    const Context& ctx;
    unsigned k;
    Verdict operator()(const LieCandidate& c) const { return eliminate_lie(ctx, c, k); }
    Verdict operator()(const AlternatingCandidate& c) const { return eliminate_alternating(ctx, c, k); }
    Verdict operator()(const SporadicCandidate& c) const { return eliminate_sporadic(ctx, c.name, k); }
    Verdict operator()(const TitsCandidate&) const { return eliminate_sporadic(ctx, "Tits", k); }
  };
  return EliminationOutcome{candidate, k, std::visit(Visitor{ctx, k}, candidate)};
}

std::vector<LieFamily> families(unsigned m_max) {
  std::vector<LieFamily> out;
  for (unsigned m = 2; m <= m_max; ++m) out.push_back({LieFamilyTag::PSL, m, Sign::Plus});
  for (unsigned m = 3; m <= m_max; ++m) out.push_back({LieFamilyTag::PSU, m, Sign::Plus});
  for (unsigned m = 2; m <= m_max; ++m) out.push_back({LieFamilyTag::PSp, m, Sign::Plus});
  for (unsigned m = 3; m <= m_max; ++m) out.push_back({LieFamilyTag::OmegaOdd, m, Sign::Plus});
  for (unsigned m = 4; m <= m_max; ++m) {
    out.push_back({LieFamilyTag::OmegaPM, m, Sign::Plus});
    out.push_back({LieFamilyTag::OmegaPM, m, Sign::Minus});
  }
  for (LieFamilyTag t : {LieFamilyTag::B2Twisted, LieFamilyTag::D4Triality}) out.push_back({t, 0, Sign::Plus});
  out.push_back({LieFamilyTag::E6, 0, Sign::Plus});
  out.push_back({LieFamilyTag::E6, 0, Sign::Minus});
  for (LieFamilyTag t : {LieFamilyTag::E7, LieFamilyTag::E8, LieFamilyTag::F4, LieFamilyTag::F4Twisted,
                         LieFamilyTag::G2, LieFamilyTag::G2Twisted}) {
    out.push_back({t, 0, Sign::Plus});
  }
  return out;
}

bool is_unique_survivor(const EliminationOutcome& o) {
  const auto* lie = std::get_if<LieCandidate>(&o.candidate);
  return lie && lie->family.tag == LieFamilyTag::G2Twisted && o.k == 1;
}

}  // namespace

EliminationOutcome eliminate_candidate(const SimpleCandidate& candidate, const AlmostSimpleSpec& spec, unsigned k,
                                       EliminationOptions options) {
  if (k < 1 || k > 3) throw std::invalid_argument("k must be 1, 2 or 3");
  const Context ctx(spec, options);
  return eliminate_in(ctx, candidate, k);
}

std::vector<CandidateK> enumerate_candidates(const AlmostSimpleSpec& spec, EnumerationBounds bounds) {
  if (bounds.m_max < 20 || bounds.n_max < 8) {
    throw ParameterError("enumeration bounds too small: need m_max >= 20 and n_max >= 8");
  }
  const std::uint64_t three_f = 3ULL * static_cast<std::uint64_t>(spec.params.f);
  std::vector<CandidateK> out;
  for (const LieFamily& family : families(bounds.m_max)) {
    const std::uint64_t n = steinberg_exponent(family);
    std::vector<std::pair<unsigned, unsigned>> found;  // (e, k)
    for (unsigned k : {1U, 3U}) {
      if (three_f % (n * k) != 0) continue;
      const LieCandidate c{family, 3, static_cast<unsigned>(three_f / (n * k))};
      if (!admissible(c)) continue;
      found.emplace_back(c.e, k);
      found.emplace_back(c.e, 2);
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    for (auto [e, k] : found) out.push_back({LieCandidate{family, 3, e}, k});
  }
  for (unsigned n = 5; n <= bounds.n_max; ++n) {
    for (unsigned k = 1; k <= 3; ++k) out.push_back({AlternatingCandidate{n}, k});
  }
  for (const SporadicFact& fact : sporadic_table()) {
    if (fact.name == "Tits") continue;
    for (unsigned k = 1; k <= 3; ++k) out.push_back({SporadicCandidate{fact.name}, k});
  }
  for (unsigned k = 1; k <= 3; ++k) out.push_back({TitsCandidate{}, k});
  return out;
}

std::vector<EliminationOutcome> evaluate_candidates(const AlmostSimpleSpec& spec, EliminationOptions options,
                                                    EnumerationBounds bounds) {
  const std::vector<CandidateK> candidates = enumerate_candidates(spec, bounds);
  const Context ctx(spec, options);
  std::vector<EliminationOutcome> out;
  out.reserve(candidates.size());
  for (const CandidateK& c : candidates) out.push_back(eliminate_in(ctx, c.candidate, c.k));
  return out;
}

std::vector<EliminationOutcome> run_elimination(const AlmostSimpleSpec& spec, EliminationOptions options,
                                                EnumerationBounds bounds) {
  std::vector<EliminationOutcome> out = evaluate_candidates(spec, options, bounds);
  std::vector<std::string> survivors;
  bool expected = false;
  for (const EliminationOutcome& o : out) {
    if (!o.survives()) continue;
    survivors.push_back(candidate_name(o.candidate) + " k=" + std::to_string(o.k));
    expected = expected || is_unique_survivor(o);
  }
  if (survivors.size() != 1 || !expected) {
    std::string list;
    for (const std::string& s : survivors) list += (list.empty() ? "" : ", ") + s;
    throw TheoremViolation("f = " + std::to_string(spec.params.f) + ", d = " + std::to_string(spec.d) +
                           ": expected the single survivor 2G2(q) k=1, got [" + list + "]");
  }
  return out;
}

std::string_view check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}

namespace {

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

CheckReport report(std::string id, const AlmostSimpleSpec& spec, CheckStatus status, ordered_json witness,
                   std::string anchor) {
  return CheckReport{std::move(id), spec.params.f, spec.d, status, std::move(witness), std::move(anchor)};
}

}  // namespace

std::vector<CheckReport> solvable_quotient_checks(const AlmostSimpleSpec& spec) {
  const ReeParams& p = spec.params;
  std::vector<CheckReport> out;
  if (spec.d == 1) {
    ordered_json w;
    w["relation"] = "d >= 2";
    w["lhs"] = "1";
    w["rhs"] = "2";
    out.push_back(report("solvable_quotient", spec, CheckStatus::NotApplicable, std::move(w),
                         "H = H0 has no solvable quotient"));
    return out;
  }
  const DegreeSet superset = cd_superset(spec);
  const ReeDegreeTable table = ree_degree_table(p, spec.formulas);
  const Natural q3 = Natural::pow(p.q, 3);
  const Natural f2m1 = Natural(p.f * p.f - 1);

  {
    ordered_json products = ordered_json::array();
    std::size_t found = 0;
    for (std::uint64_t a : divisors(static_cast<std::uint64_t>(spec.d))) {
      const Natural v = q3 * table.line(11).value * Natural(a);
      const bool in = superset.contains(v);
      found += in ? 1 : 0;
      products.push_back({{"a", a}, {"value", v.str()}, {"in_superset", in}});
    }
    ordered_json w;
    w["relation"] = "#{a | d : q^3 * deg_11 * a in cd_superset} == 0";
    w["lhs"] = std::to_string(found);
    w["rhs"] = "0";
    w["products"] = std::move(products);
    out.push_back(report("solvable_quotient.gallagher", spec, pass_if(found == 0), std::move(w),
                         "q^3 * deg_11 * a, a | d"));
  }
  {
    const Natural lhs = Natural::pow(3, 3 * p.f);
    ordered_json w;
    w["relation"] = ">";
    w["lhs"] = lhs.str();
    w["rhs"] = f2m1.str();
    out.push_back(report("solvable_quotient.frobenius_index", spec, pass_if(lhs > f2m1), std::move(w),
                         "3^{3f} > f^2 - 1"));
  }
  {
    Natural least;
    for (const auto& [value, prov] : superset) {
      if (value > Natural(1)) {
        least = value;
        break;
      }
    }
    ordered_json w;
    w["relation"] = ">";
    w["lhs"] = least.str();
    w["rhs"] = f2m1.str();
    out.push_back(report("solvable_quotient.min_degree", spec, pass_if(least > f2m1), std::move(w),
                         "min{x in cd_superset : x > 1} > f^2 - 1"));
  }
  return out;
}

CheckReport eta_inertia_check(const ReeParams& params) {
  const Natural one = 1;
  const Natural modulus = exact_div(params.q - one, Natural(2), "(q-1)/2");
  const Natural upper = modulus - one;
  ordered_json offending = ordered_json::array();
  ordered_json residues = ordered_json::array();
  Natural r = 1;
  for (int i = 1; i < params.f; ++i) {
    r = (r * Natural(3)) % modulus;
    residues.push_back(r.str());
    if (r == one || r == upper) offending.push_back(i);
  }
  ordered_json w;
  w["relation"] = "#{1 <= i < f : 3^i mod (q-1)/2 in {1, (q-1)/2 - 1}} == 0";
  w["lhs"] = std::to_string(offending.size());
  w["rhs"] = "0";
  w["modulus"] = modulus.str();
  w["residues"] = std::move(residues);
  w["offending_i"] = offending;
  return CheckReport{"eta_inertia", params.f, std::nullopt, pass_if(offending.empty()), std::move(w),
                     "3^i mod (q-1)/2, 1 <= i < f"};
}

CheckReport step3_divisibility_check(const AlmostSimpleSpec& spec) {
  const ReeParams& p = spec.params;
  const Natural one = 1;
  const Natural value =
      exact_div((Natural::pow(p.q, 3) + one) * (p.q - one), Natural(2), "(q^3+1)(q-1)/2");
  const DegreeSet superset = cd_superset(spec);
  ordered_json hits = ordered_json::array();
  for (const auto& [member, prov] : superset) {
    if (divides(value, member)) hits.push_back(member.str());
  }
  ordered_json w;
  w["relation"] = "#{x in cd_superset : (q^3+1)(q-1)/2 | x} == 0";
  w["lhs"] = std::to_string(hits.size());
  w["rhs"] = "0";
  w["divisor"] = value.str();
  w["coprime_to_3"] = val_p(value, 3) == 0;
  w["members_scanned"] = superset.size();
  w["divisible_members"] = hits;
  return report("step3_divisibility", spec, pass_if(hits.empty()), std::move(w),
                "(q^3+1)(q-1)/2 divides no x in cd_superset");
}

CheckReport final_degree_check(const AlmostSimpleSpec& spec) {
  const ReeParams& p = spec.params;
  const Natural base = Natural::pow(p.q, 3) + Natural(1);
  const Natural target = base * Natural(spec.d);
  const DegreeSet certified = certified_degrees(spec);
  const DegreeSet superset = cd_superset(spec);
  const ReeDegreeTable table = ree_degree_table(p, spec.formulas);

  const bool certified_ok = certified.contains(target);
  const bool line10_ok = table.line(10).value == base;
  bool excluded_ok = true;
  ordered_json excluded = ordered_json::array();
  for (std::uint64_t s : divisors(static_cast<std::uint64_t>(p.f))) {
    if (s <= static_cast<std::uint64_t>(spec.d)) continue;
    const Natural v = base * Natural(s);
    const bool in = superset.contains(v);
    excluded_ok = excluded_ok && !in;
    excluded.push_back({{"s", s}, {"value", v.str()}, {"in_superset", in}});
  }
  ordered_json w;
  w["relation"] = "(q^3+1)d in certified, deg_10 == q^3+1, (q^3+1)s notin cd_superset for s | f, s > d";
  w["lhs"] = target.str();
  w["rhs"] = table.line(10).value.str();
  w["certified_contains"] = certified_ok;
  w["line10_matches"] = line10_ok;
  w["excluded"] = std::move(excluded);
  return report("final_degree", spec, pass_if(certified_ok && line10_ok && excluded_ok), std::move(w),
                "(q^3+1)d in cd(H), (q^3+1)s notin cd(H) for s > d");
}

CheckReport inequality_chain_check(int f) {
  if (f < 3 || f % 2 == 0) throw ParameterError("f must be odd and >= 3, got " + std::to_string(f));
  const Natural a = Natural::pow(3, 3 * f);
  const Natural b = Natural(f * f - 1);
  const Natural c = Natural::pow(3, 2 * f);
  const Natural d = Natural::pow(f, 3);
  ordered_json w;
  w["relation"] = "lhs[0] > rhs[0] and lhs[1] > rhs[1]";
  w["lhs"] = {a.str(), c.str()};
  w["rhs"] = {b.str(), d.str()};
  return CheckReport{"inequality_chain", f, std::nullopt, pass_if(a > b && c > d), std::move(w),
                     "3^{3f} > f^2 - 1, 3^{2f} > f^3"};
}

ordered_json witness_to_json(const Witness& w) {
  ordered_json j;
  j["relation"] = std::string(relation_symbol(w.required));
  j["lhs_label"] = w.lhs_label;
  j["lhs"] = w.lhs.str();
  j["rhs_label"] = w.rhs_label;
  j["rhs"] = w.rhs.str();
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

ordered_json outcome_to_json(const EliminationOutcome& outcome) {
  ordered_json j;
  j["candidate"] = candidate_name(outcome.candidate);
  j["k"] = outcome.k;
  if (outcome.survives()) {
    j["verdict"] = "survives";
  } else {
    j["verdict"] = "ruled_out";
    j["reason"] = std::string(reason_code_name(outcome.ruled_out().code));
    j["witness"] = witness_to_json(outcome.ruled_out().witness);
  }
  return j;
}

}  // namespace reecd
