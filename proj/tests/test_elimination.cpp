#include <gtest/gtest.h>

#include <set>

#include "reecd/errors.hpp"
#include "reecd/elimination.hpp"
#include "reverify.hpp"

using reecd::LieCandidate;
using reecd::LieFamilyTag;
using reecd::Natural;
using reecd::ReasonCode;

namespace {

reecd::EliminationOutcome eliminate(const reecd::SimpleCandidate& c, int f, int d, unsigned k, bool strict = false) {
  return reecd::eliminate_candidate(c, reecd::almost_simple_spec(f, d), k, reecd::EliminationOptions{strict});
}

ReasonCode code_of(const reecd::EliminationOutcome& o) { return o.ruled_out().code; }

bool is_2g2_k1(const reecd::EliminationOutcome& o, int f) {
  const auto* lie = std::get_if<LieCandidate>(&o.candidate);
  return lie && lie->family.tag == LieFamilyTag::G2Twisted && lie->e == static_cast<unsigned>(f) && o.k == 1;
}

}  // namespace

TEST(ReasonCodes, NamesAreDistinct) {
  std::set<std::string_view> names;
  for (ReasonCode c : reecd::kAllReasonCodes) names.insert(reecd::reason_code_name(c));
  EXPECT_EQ(names.size(), 16U);
  EXPECT_TRUE(names.count("2g2-k3-bound"));
}

TEST(SteinbergConstraint, Examples) {
  EXPECT_TRUE(reecd::steinberg_constraint(LieCandidate{{LieFamilyTag::G2Twisted}, 3, 3}, 3, 1));
  EXPECT_FALSE(reecd::steinberg_constraint(LieCandidate{{LieFamilyTag::G2Twisted}, 3, 3}, 3, 2));
  EXPECT_TRUE(reecd::steinberg_constraint(LieCandidate{{LieFamilyTag::PSL, 2}, 3, 9}, 3, 1));
  EXPECT_FALSE(reecd::steinberg_constraint(LieCandidate{{LieFamilyTag::PSL, 2}, 2, 9}, 3, 1));
}

TEST(MaxV3Mixed, Examples) {
  const auto a = reecd::max_v3_mixed(reecd::cd_superset(reecd::almost_simple_spec(3, 1)));
  EXPECT_EQ(a.max, 3U);
  EXPECT_EQ(a.min_positive, 1U);
  const auto b = reecd::max_v3_mixed(reecd::cd_superset(reecd::almost_simple_spec(3, 3)));
  EXPECT_EQ(b.max, 4U);
}

TEST(Eliminate, ChainExamples) {
  EXPECT_TRUE(eliminate(LieCandidate{{LieFamilyTag::G2Twisted}, 3, 3}, 3, 3, 1).survives());
  EXPECT_EQ(code_of(eliminate(LieCandidate{{LieFamilyTag::G2Twisted}, 3, 3}, 3, 3, 2)), ReasonCode::K2Parity);
  EXPECT_EQ(code_of(eliminate(LieCandidate{{LieFamilyTag::G2Twisted}, 3, 3}, 9, 1, 3)),
            ReasonCode::G2TwistedK3Bound);
  EXPECT_EQ(code_of(eliminate(LieCandidate{{LieFamilyTag::PSL, 2}, 5, 1}, 3, 1, 1)), ReasonCode::NotP3);
  EXPECT_EQ(code_of(eliminate(LieCandidate{{LieFamilyTag::G2}, 3, 1}, 3, 1, 1)), ReasonCode::Parity3f);
  EXPECT_EQ(code_of(eliminate(LieCandidate{{LieFamilyTag::PSL, 2}, 3, 2}, 3, 1, 1)), ReasonCode::ExponentEquation);
  EXPECT_EQ(code_of(eliminate(LieCandidate{{LieFamilyTag::PSL, 2}, 3, 9}, 3, 1, 1)), ReasonCode::Psl2Divisibility);
  EXPECT_EQ(code_of(eliminate(LieCandidate{{LieFamilyTag::PSL, 2}, 3, 3}, 3, 1, 3)), ReasonCode::Psl2Divisibility);
  EXPECT_EQ(code_of(eliminate(LieCandidate{{LieFamilyTag::PSU, 3}, 3, 3}, 3, 1, 1)), ReasonCode::Divisibility16);
  EXPECT_EQ(code_of(eliminate(reecd::AlternatingCandidate{5}, 3, 1, 1)), ReasonCode::PrimePowerMismatch);
  EXPECT_EQ(code_of(eliminate(reecd::AlternatingCandidate{6}, 3, 1, 3)), ReasonCode::A6Exponent);
  EXPECT_EQ(code_of(eliminate(reecd::AlternatingCandidate{7}, 3, 1, 3)), ReasonCode::A7Bound);
  EXPECT_EQ(code_of(eliminate(reecd::AlternatingCandidate{8}, 3, 1, 1)), ReasonCode::Divisibility16);
  EXPECT_EQ(code_of(eliminate(reecd::SporadicCandidate{"J1"}, 3, 1, 1)), ReasonCode::EvenDegreeTooSmall);
  EXPECT_EQ(code_of(eliminate(reecd::SporadicCandidate{"M22"}, 3, 1, 2)), ReasonCode::Divisibility16);
  EXPECT_EQ(code_of(eliminate(reecd::SporadicCandidate{"Co1"}, 3, 1, 1)), ReasonCode::SporadicWitness);
  EXPECT_EQ(code_of(eliminate(reecd::TitsCandidate{}, 3, 1, 3)), ReasonCode::SporadicWitness);
}

TEST(Eliminate, RankBounds) {
  // PSL_6 (N = 15), e = 1, f = 5: 2ek + 1 = 3 < 5.
  EXPECT_EQ(code_of(eliminate(LieCandidate{{LieFamilyTag::PSL, 6}, 3, 1}, 5, 1, 1)), ReasonCode::Unipotent3PartBound);
  // PSL_6, e = 3, f = 15: 7 < 15.
  EXPECT_EQ(code_of(eliminate(LieCandidate{{LieFamilyTag::PSL, 6}, 3, 3}, 15, 1, 1)), ReasonCode::Unipotent3PartBound);
  // PSL_3 (N = 3), e = 1, f = 3: 3 != 9.
  EXPECT_EQ(code_of(eliminate(LieCandidate{{LieFamilyTag::PSL, 3}, 3, 1}, 3, 1, 1)), ReasonCode::ExponentEquation);
  // PSL_4 has N = 6.
  EXPECT_EQ(code_of(eliminate(LieCandidate{{LieFamilyTag::PSL, 4}, 3, 3}, 9, 1, 1)), ReasonCode::Parity3f);
  // PSp_6 (N = 9), e = 1, f = 3: 3 >= 3 holds, then m^2 = 9 >= 7.
  EXPECT_EQ(code_of(eliminate(LieCandidate{{LieFamilyTag::PSp, 3}, 3, 1}, 3, 1, 1)), ReasonCode::PspRankBound);
  EXPECT_EQ(code_of(eliminate(LieCandidate{{LieFamilyTag::OmegaOdd, 3}, 3, 1}, 3, 1, 1)), ReasonCode::PspRankBound);
  // PSL_7 (N = 21), e = 1, f = 7: 3 < 7.
  EXPECT_EQ(code_of(eliminate(LieCandidate{{LieFamilyTag::PSL, 7}, 3, 1}, 7, 1, 1)), ReasonCode::Unipotent3PartBound);
}

TEST(Eliminate, E7AtF21) {
  const auto o = eliminate(LieCandidate{{LieFamilyTag::E7}, 3, 1}, 21, 1, 1);
  ASSERT_EQ(code_of(o), ReasonCode::E7ThreePartOverflow);
  EXPECT_EQ(o.ruled_out().witness.lhs, Natural(46));
  EXPECT_NE(o.ruled_out().witness.note.find("2f = 42"), std::string::npos);
}

TEST(Eliminate, StrictModeIsAtLeastAsStrong) {
  for (int f : {3, 5, 7, 9, 11, 13, 15}) {
    for (int d : oracle::divisors(f)) {
      const auto spec = reecd::almost_simple_spec(f, d);
      const auto normal = reecd::evaluate_candidates(spec);
      const auto strict = reecd::evaluate_candidates(spec, reecd::EliminationOptions{true});
      ASSERT_EQ(normal.size(), strict.size());
      for (std::size_t i = 0; i < normal.size(); ++i) {
        if (!normal[i].survives()) {
          EXPECT_FALSE(strict[i].survives());
        }
      }
    }
  }
}

TEST(Eliminate, BadArguments) {
  const auto spec = reecd::almost_simple_spec(3, 1);
  EXPECT_THROW(reecd::eliminate_candidate(reecd::AlternatingCandidate{9}, spec, 0), std::invalid_argument);
  EXPECT_THROW(reecd::eliminate_candidate(reecd::AlternatingCandidate{9}, spec, 4), std::invalid_argument);
  EXPECT_THROW(reecd::eliminate_candidate(reecd::AlternatingCandidate{4}, spec, 1), std::invalid_argument);
  EXPECT_THROW(reecd::eliminate_candidate(LieCandidate{{LieFamilyTag::PSL, 2}, 3, 1}, spec, 1), std::invalid_argument);
  EXPECT_THROW(reecd::enumerate_candidates(spec, {19, 200}), reecd::ParameterError);
  EXPECT_THROW(reecd::enumerate_candidates(spec, {100, 7}), reecd::ParameterError);
}

TEST(Enumeration, ShapeAndOrder) {
  const auto list = reecd::enumerate_candidates(reecd::almost_simple_spec(3, 1));
  std::size_t lie = 0;
  std::size_t k2 = 0;
  for (const auto& c : list) {
    if (const auto* l = std::get_if<LieCandidate>(&c.candidate)) {
      ++lie;
      EXPECT_EQ(reecd::steinberg_exponent(l->family) % 2, 1U) << reecd::candidate_name(c.candidate);
      if (c.k == 2) {
        ++k2;
        EXPECT_FALSE(reecd::steinberg_constraint(*l, 3, 2));
      } else {
        EXPECT_TRUE(reecd::steinberg_constraint(*l, 3, c.k));
      }
    }
  }
  EXPECT_GT(lie, 0U);
  EXPECT_GT(k2, 0U);
  EXPECT_EQ(list.size() - lie, 196U * 3 + 26 * 3 + 3);
  // Same input, same order.
  const auto again = reecd::enumerate_candidates(reecd::almost_simple_spec(3, 1));
  ASSERT_EQ(again.size(), list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    EXPECT_EQ(reecd::candidate_name(list[i].candidate), reecd::candidate_name(again[i].candidate));
    EXPECT_EQ(list[i].k, again[i].k);
  }
}

// Property: for every odd f in 3..15 and every d | f the only survivor is
// (2G2(q), 1), every witness recomputes from the oracle, and every Lie
// candidate with k = 2 fails by parity.
TEST(Property, UniqueSurvivorAndReverifiedWitnesses) {
  for (int f : {3, 5, 7, 9, 11, 13, 15}) {
    for (int d : oracle::divisors(f)) {
      const auto spec = reecd::almost_simple_spec(f, d);
      const auto outcomes = reecd::run_elimination(spec);
      const auto facts = reverify::facts(f, d);
      std::size_t survivors = 0;
      for (const auto& o : outcomes) {
        if (o.survives()) {
          ++survivors;
          EXPECT_TRUE(is_2g2_k1(o, f));
          continue;
        }
        EXPECT_EQ(reverify::check(o, f, facts), "") << reecd::candidate_name(o.candidate) << " k=" << o.k;
        if (o.k == 2 && std::holds_alternative<LieCandidate>(o.candidate)) {
          EXPECT_EQ(code_of(o), ReasonCode::K2Parity);
        }
      }
      EXPECT_EQ(survivors, 1U);
    }
  }
}

TEST(Property, ReverifiedAtLargerF) {
  for (int f : {17, 21, 25}) {
    const auto outcomes = reecd::run_elimination(reecd::almost_simple_spec(f, 1));
    const auto facts = reverify::facts(f, 1);
    for (const auto& o : outcomes) {
      if (!o.survives()) {
        EXPECT_EQ(reverify::check(o, f, facts), "") << reecd::candidate_name(o.candidate);
      }
    }
  }
}

TEST(RunElimination, ThrowsWhenTheSurvivorChanges) {
  // Doubling line 5 puts 4368 (2-part 16) into the superset, so the max
  // 2-part no longer rules out the PSL_3 / PSU_3 candidates.
  auto spec = reecd::almost_simple_spec(3, 1);
  spec.formulas[4].scalar = 2;
  EXPECT_THROW(reecd::run_elimination(spec), reecd::TheoremViolation);
  EXPECT_NO_THROW(reecd::evaluate_candidates(spec));
}

TEST(Checks, SolvableQuotient) {
  const auto na = reecd::solvable_quotient_checks(reecd::almost_simple_spec(3, 1));
  ASSERT_EQ(na.size(), 1U);
  EXPECT_EQ(na[0].status, reecd::CheckStatus::NotApplicable);
  for (int f : {3, 5, 7, 9, 15, 21, 25}) {
    for (int d : oracle::divisors(f)) {
      if (d == 1) continue;
      for (const auto& r : reecd::solvable_quotient_checks(reecd::almost_simple_spec(f, d))) {
        EXPECT_EQ(r.status, reecd::CheckStatus::Pass) << r.check_id << " f=" << f << " d=" << d;
        EXPECT_TRUE(r.witness.contains("relation") && r.witness.contains("lhs") && r.witness.contains("rhs"));
      }
    }
  }
}

TEST(Checks, EtaStep3FinalInequality) {
  for (int f = 3; f <= 25; f += 2) {
    EXPECT_EQ(reecd::eta_inertia_check(reecd::ree_params(f)).status, reecd::CheckStatus::Pass) << f;
    for (int d : oracle::divisors(f)) {
      const auto spec = reecd::almost_simple_spec(f, d);
      EXPECT_EQ(reecd::step3_divisibility_check(spec).status, reecd::CheckStatus::Pass) << f << "," << d;
      EXPECT_EQ(reecd::final_degree_check(spec).status, reecd::CheckStatus::Pass) << f << "," << d;
    }
  }
  for (int f = 3; f <= 99; f += 2) EXPECT_EQ(reecd::inequality_chain_check(f).status, reecd::CheckStatus::Pass);
  EXPECT_THROW(reecd::inequality_chain_check(4), reecd::ParameterError);
}

TEST(Checks, Step3Tags) {
  const auto r3 = reecd::step3_divisibility_check(reecd::almost_simple_spec(3, 1));
  EXPECT_EQ(r3.witness["divisor"], "255892");
  EXPECT_EQ(r3.witness["coprime_to_3"], true);
  const auto r9 = reecd::final_degree_check(reecd::almost_simple_spec(15, 3));
  EXPECT_EQ(r9.witness["excluded"].size(), 2U);  // s = 5, 15
}

TEST(Serialization, OutcomeJson) {
  const auto o = eliminate(reecd::AlternatingCandidate{5}, 3, 1, 1);
  const auto j = reecd::outcome_to_json(o);
  EXPECT_EQ(j["candidate"], "A5");
  EXPECT_EQ(j["reason"], "prime-power-mismatch");
  EXPECT_EQ(j["witness"]["lhs"], "5");
  EXPECT_EQ(j["witness"]["rhs"], "19683");
}
