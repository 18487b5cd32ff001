#pragma once

// Arithmetic of the chief-factor argument. A group G with cd(G) = cd(H) has a
// chief factor G'/M = S^k; every candidate (S, k) other than (2G2(q), 1) is
// ruled out by a numeric contradiction against the degree data of H.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "reecd/lie_data.hpp"
#include "reecd/natural.hpp"
#include "reecd/ree.hpp"

namespace reecd {

/// One code per elimination argument. The set is closed; reports and tests
/// key on the string names.
enum class ReasonCode {
  NotP3,
  ExponentEquation,
  Parity3f,
  K2Parity,
  Divisibility16,
  PrimePowerMismatch,
  EvenDegreeTooSmall,
  Unipotent3PartBound,
  PslPsuRankBound,
  PspRankBound,
  Psl2Divisibility,
  E7ThreePartOverflow,
  G2TwistedK3Bound,
  A6Exponent,
  A7Bound,
  SporadicWitness,
};

inline constexpr ReasonCode kAllReasonCodes[] = {
    ReasonCode::NotP3,           ReasonCode::ExponentEquation,    ReasonCode::Parity3f,
    ReasonCode::K2Parity,        ReasonCode::Divisibility16,      ReasonCode::PrimePowerMismatch,
    ReasonCode::EvenDegreeTooSmall, ReasonCode::Unipotent3PartBound, ReasonCode::PslPsuRankBound,
    ReasonCode::PspRankBound,    ReasonCode::Psl2Divisibility,    ReasonCode::E7ThreePartOverflow,
    ReasonCode::G2TwistedK3Bound, ReasonCode::A6Exponent,         ReasonCode::A7Bound,
    ReasonCode::SporadicWitness,
};

std::string_view reason_code_name(ReasonCode code);

/// The relation that would have to hold for the candidate to survive.
enum class Relation {
  Equal,              // lhs == rhs
  Less,               // lhs < rhs
  LessEqual,          // lhs <= rhs
  GreaterEqual,       // lhs >= rhs
  DividesSomeMember,  // lhs divides some member of cd_superset; rhs = members scanned
};

std::string_view relation_symbol(Relation r);

/// Both sides of the violated relation, fully evaluated.
struct Witness {
  Relation required = Relation::Equal;
  std::string lhs_label;
  Natural lhs;
  std::string rhs_label;
  Natural rhs;
  std::string note;

  /// Evaluates `lhs required rhs` for the order relations. DividesSomeMember
  /// needs the degree set; use holds_against().
  bool holds() const;
  bool holds_against(const DegreeSet& superset) const;
};

struct Survives {};

struct RuledOut {
  ReasonCode code = ReasonCode::NotP3;
  Witness witness;
};

struct EliminationOutcome {
  SimpleCandidate candidate;
  unsigned k = 1;
  std::variant<Survives, RuledOut> verdict;

  bool survives() const { return std::holds_alternative<Survives>(verdict); }
  const RuledOut& ruled_out() const { return std::get<RuledOut>(verdict); }
};

struct EliminationOptions {
  /// Also require e*k to equal the 3-adic valuation of some non-prime-power
  /// superset member in the unipotent 3-part test.
  bool strict = false;
};

struct EnumerationBounds {
  unsigned m_max = 100;
  unsigned n_max = 200;
};

struct CandidateK {
  SimpleCandidate candidate;
  unsigned k = 1;
};

/// p = 3 and e * N * k = 3f, where St(1) = q0^N.
bool steinberg_constraint(const LieCandidate& candidate, int f, unsigned k);

struct MixedThreeParts {
  unsigned max = 0;
  std::optional<unsigned> min_positive;
};

/// 3-adic valuations over members > 1 that are not prime powers.
MixedThreeParts max_v3_mixed(const DegreeSet& set);

/// Runs the tests for the candidate's kind in order; the first failing test
/// decides the verdict. Throws std::invalid_argument unless k is 1, 2 or 3.
EliminationOutcome eliminate_candidate(const SimpleCandidate& candidate, const AlmostSimpleSpec& spec,
                                       unsigned k, EliminationOptions options = {});

/// Every candidate that can satisfy the Steinberg constraint for k = 1, 3,
/// the same Lie candidates with k = 2, and all alternating (5..n_max),
/// sporadic and Tits candidates for k = 1, 2, 3. Candidates outside this list
/// fail unconditionally: A_n for n > n_max has a degree divisible by 16, and a
/// Lie candidate off the list violates the Steinberg constraint. Throws
/// ParameterError when m_max < 20 or n_max < 8.
std::vector<CandidateK> enumerate_candidates(const AlmostSimpleSpec& spec, EnumerationBounds bounds = {});

/// eliminate_candidate over enumerate_candidates, in enumeration order.
/// Throws TheoremViolation unless the only survivor is (2G2(q), k = 1).
std::vector<EliminationOutcome> run_elimination(const AlmostSimpleSpec& spec,
                                                EliminationOptions options = {},
                                                EnumerationBounds bounds = {});

/// Same as run_elimination but never throws on the survivor count.
std::vector<EliminationOutcome> evaluate_candidates(const AlmostSimpleSpec& spec,
                                                    EliminationOptions options = {},
                                                    EnumerationBounds bounds = {});

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string_view check_status_name(CheckStatus s);

/// One verified statement with enough numbers to recheck it by hand.
/// `witness` always carries "relation", "lhs" and "rhs"; large integers are
/// decimal strings.
struct CheckReport {
  std::string check_id;
  int f = 0;
  std::optional<int> d;
  CheckStatus status = CheckStatus::Pass;
  nlohmann::ordered_json witness;
  std::string anchor;
};

/// Contradictions for a solvable quotient (requires d >= 2; for d = 1 a
/// single not-applicable report is returned):
///  (a) q^3 * deg_11 * a is not in cd_superset for every a | d,
///  (b) 3^{3f} > f^2 - 1,
///  (c) the least nontrivial superset member exceeds f^2 - 1.
std::vector<CheckReport> solvable_quotient_checks(const AlmostSimpleSpec& spec);

/// No field automorphism of order dividing f - 1 fixes the q^3 + 1 character:
/// 3^i mod (q-1)/2 avoids {1, (q-1)/2 - 1} for 1 <= i < f.
CheckReport eta_inertia_check(const ReeParams& params);

/// (q^3 + 1)(q - 1)/2 divides no member of cd_superset.
CheckReport step3_divisibility_check(const AlmostSimpleSpec& spec);

/// (q^3+1) d is certified, q^3+1 is a table value, and (q^3+1) s is outside
/// cd_superset for every divisor s of f with s > d.
CheckReport final_degree_check(const AlmostSimpleSpec& spec);

/// 3^{3f} > f^2 - 1 and 3^{2f} > f^3 (so 3^{2f} < f^3 fails).
CheckReport inequality_chain_check(int f);

nlohmann::ordered_json witness_to_json(const Witness& w);
nlohmann::ordered_json outcome_to_json(const EliminationOutcome& outcome);

}  // namespace reecd
