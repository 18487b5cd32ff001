#pragma once

// Recomputes both sides of an elimination witness from the candidate alone
// (oracle arithmetic plus independently typed degree data) and confirms the
// relation fails. Returns an empty string on success, else a description.

#include <string>
#include <variant>

#include "oracle.hpp"
#include "reecd/elimination.hpp"

namespace reverify {

using oracle::Int;

inline unsigned steinberg_n(const reecd::LieFamily& fam) {
  using T = reecd::LieFamilyTag;
  const unsigned m = fam.rank;
  switch (fam.tag) {
    case T::PSL:
    case T::PSU: return m * (m - 1) / 2;
    case T::PSp:
    case T::OmegaOdd: return m * m;
    case T::OmegaPM: return m * (m - 1);
    case T::B2Twisted: return 2;
    case T::D4Triality: return 12;
    case T::E6: return 36;
    case T::E7: return 63;
    case T::E8: return 120;
    case T::F4: return 24;
    case T::F4Twisted: return 12;
    case T::G2: return 6;
    case T::G2Twisted: return 3;
  }
  return 0;
}

// First listed even degree of each sporadic group (and Tits), typed from the
// character tables; the exceptional pair also needs the second.
inline Int sporadic_first(const std::string& name) {
  static const std::map<std::string, std::string> degrees = {
      {"M11", "16"},        {"M12", "16"},       {"M22", "210"},        {"M23", "896"},
      {"M24", "3312"},      {"J1", "56"},        {"J2", "160"},         {"J3", "816"},
      {"J4", "259775040"},  {"HS", "896"},       {"McL", "896"},        {"Suz", "64064"},
      {"Co1", "1821600"},   {"Co2", "129536"},   {"Co3", "896"},        {"He", "1920"},
      {"Ly", "2480"},       {"Ru", "34944"},     {"ON", "10944"},       {"Fi22", "32032"},
      {"Fi23", "789360"},   {"Fi24'", "159402880"}, {"HN", "3344"},     {"Th", "1707264"},
      {"B", "13508418144"}, {"M", "2374124840062976"}, {"Tits", "624"},
  };
  return Int(degrees.at(name));
}

inline Int sporadic_second(const std::string& name) { return name == "J1" ? Int(120) : Int(280); }

struct SetFacts {
  std::set<Int> members;
  Int max_two = 1;
  Int smallest_even = 0;
  unsigned max_v3_mixed = 0;
};

inline SetFacts facts(int f, int d) {
  SetFacts s;
  s.members = oracle::superset(f, d);
  for (const Int& x : s.members) {
    s.max_two = std::max(s.max_two, oracle::part(x, 2));
    if (s.smallest_even == 0 && x % 2 == 0) s.smallest_even = x;
    const unsigned v = oracle::val(x, 3);
    // v > 0 and not a pure 3-power means two distinct primes divide x.
    if (v > 0 && oracle::pow(3, v) != x) s.max_v3_mixed = std::max(s.max_v3_mixed, v);
  }
  return s;
}

inline std::string expect(const reecd::Witness& w, const Int& lhs, const Int& rhs, bool violated) {
  if (w.lhs.str() != lhs.str()) return "lhs " + w.lhs.str() + " != oracle " + lhs.str();
  if (w.rhs.str() != rhs.str()) return "rhs " + w.rhs.str() + " != oracle " + rhs.str();
  if (!violated) return "oracle says the relation holds";
  return {};
}

inline std::string check(const reecd::EliminationOutcome& o, int f, const SetFacts& s) {
  using reecd::ReasonCode;
  if (o.survives()) return "survivor";
  const reecd::RuledOut& r = o.ruled_out();
  const reecd::Witness& w = r.witness;
  const unsigned k = o.k;
  const Int three_f = 3 * f;

  if (const auto* c = std::get_if<reecd::LieCandidate>(&o.candidate)) {
    const unsigned n = steinberg_n(c->family);
    const Int enk = Int(c->e) * n * k;
    const Int q0 = oracle::pow(Int(c->p), c->e);
    const unsigned m = c->family.rank;
    switch (r.code) {
      case ReasonCode::NotP3: return expect(w, Int(c->p), 3, c->p != 3);
      case ReasonCode::K2Parity: return k == 2 ? expect(w, enk, three_f, enk != three_f) : "k2-parity with k != 2";
      case ReasonCode::Parity3f:
        return n % 2 == 0 ? expect(w, enk, three_f, enk != three_f) : "parity-3f with odd N";
      case ReasonCode::ExponentEquation: return expect(w, enk, three_f, enk != three_f);
      case ReasonCode::Psl2Divisibility: {
        const Int div = k == 3 ? q0 * q0 * (q0 - 1) : q0 - 1;
        bool divides_some = false;
        for (const Int& x : s.members) divides_some = divides_some || x % div == 0;
        return expect(w, div, Int(s.members.size()), !divides_some);
      }
      case ReasonCode::Divisibility16: {
        const bool unitary = c->family.tag == reecd::LieFamilyTag::PSU;
        const Int deg = unitary ? (q0 - 1) * (q0 + 1) * (q0 + 1) : (q0 - 1) * (q0 - 1) * (q0 + 1);
        const Int two = oracle::part(deg, 2);
        return expect(w, two, s.max_two, two > s.max_two);
      }
      case ReasonCode::Unipotent3PartBound: {
        const Int lhs = 2 * Int(c->e) * k + 1;
        return expect(w, lhs, f, lhs < f);
      }
      case ReasonCode::PslPsuRankBound: return expect(w, m * (m - 1), 18, m * (m - 1) > 18);
      case ReasonCode::PspRankBound: return expect(w, m * m, 7, m * m >= 7);
      case ReasonCode::E7ThreePartOverflow: {
        const Int lhs = 46 * Int(c->e) * k;
        return expect(w, lhs, s.max_v3_mixed, lhs > s.max_v3_mixed);
      }
      case ReasonCode::G2TwistedK3Bound: {
        const Int lhs = oracle::pow(3, 2 * static_cast<unsigned>(f));
        const Int rhs = oracle::pow(f, 3);
        return expect(w, lhs, rhs, lhs >= rhs);
      }
      default: return "unexpected code for a Lie candidate";
    }
  }
  if (const auto* c = std::get_if<reecd::AlternatingCandidate>(&o.candidate)) {
    switch (r.code) {
      case ReasonCode::PrimePowerMismatch: {
        const Int q3 = oracle::pow(oracle::ree(f).q, 3);
        return expect(w, oracle::pow(5, k), q3, oracle::pow(5, k) != q3);
      }
      case ReasonCode::A6Exponent: return expect(w, 2 * k, three_f, Int(2 * k) != three_f);
      case ReasonCode::A7Bound: return expect(w, oracle::pow(6, k), s.smallest_even, oracle::pow(6, k) < s.smallest_even);
      case ReasonCode::Divisibility16: {
        const unsigned n = c->n;
        const unsigned rr = n % 4 == 1 ? 1 : (n % 4 == 3 ? 3 : 2);
        const unsigned ss = n % 2 == 1 ? 2 : 1;
        const Int two = oracle::part(oracle::pow(oracle::alt_degree(n, rr, ss), k), 2);
        return expect(w, two, s.max_two, two > s.max_two);
      }
      default: return "unexpected code for an alternating candidate";
    }
  }
  const std::string name = std::holds_alternative<reecd::TitsCandidate>(o.candidate)
                               ? std::string("Tits")
                               : std::get<reecd::SporadicCandidate>(o.candidate).name;
  const Int first = sporadic_first(name);
  switch (r.code) {
    case ReasonCode::SporadicWitness: {
      const Int two = oracle::part(oracle::pow(first, k), 2);
      return expect(w, two, s.max_two, two > s.max_two);
    }
    case ReasonCode::EvenDegreeTooSmall: return expect(w, first, s.smallest_even, first < s.smallest_even);
    case ReasonCode::Divisibility16: {
      const Int prod = first * sporadic_second(name) * oracle::pow(first, k - 2);
      const Int two = oracle::part(prod, 2);
      return expect(w, two, s.max_two, two > s.max_two);
    }
    default: return "unexpected code for a sporadic candidate";
  }
}

}  // namespace reverify
