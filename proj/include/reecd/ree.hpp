#pragma once

// Small Ree groups 2G2(q), q = 3^f with f odd >= 3, and their almost simple
// extensions H0 <= H <= Aut(H0) with |H : H0| = d, d | f.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reecd/natural.hpp"

namespace reecd {

/// (f, q = 3^f, theta = 3^{(f+1)/2}); theta^2 = 3q. Build with ree_params().
struct ReeParams {
  int f = 0;
  Natural q;
  Natural theta;
};

/// Throws ParameterError unless f is odd and f >= 3.
ReeParams ree_params(long f);

/// The polynomial factors appearing in the degree formulas of 2G2(q).
enum class TableFactor {
  Q,               // q
  Theta,           // sqrt(3q)
  QMinus1,         // q - 1
  QPlus1,          // q + 1
  QMinusThetaPlus1,  // q - sqrt(3q) + 1
  QPlusThetaPlus1,   // q + sqrt(3q) + 1
  QCubed,          // q^3
};

std::string_view table_factor_name(TableFactor f);
std::optional<TableFactor> parse_table_factor(std::string_view name);

/// One line of the degree table as data: scalar * prod(factors) / divisor.
struct LineFormula {
  int line = 0;
  std::uint64_t scalar = 1;
  std::uint64_t divisor = 1;
  std::vector<TableFactor> factors;
  bool extends_to_aut = false;
};

using DegreeFormulas = std::array<LineFormula, 11>;

/// The 11 degree formulas of 2G2(q). Lines 2, 3, 4, 5 and 9 carry the
/// extends-to-Aut flag.
const DegreeFormulas& canonical_degree_formulas();

struct DegreeEntry {
  int line = 0;
  Natural value;
  bool extends_to_aut = false;
};

class ReeDegreeTable {
 public:
  ReeDegreeTable(ReeParams params, std::array<DegreeEntry, 11> entries)
      : params_(std::move(params)), entries_(std::move(entries)) {}

  const ReeParams& params() const { return params_; }
  std::span<const DegreeEntry, 11> entries() const { return entries_; }
  /// 1-based line lookup.
  const DegreeEntry& line(int n) const;

 private:
  ReeParams params_;
  std::array<DegreeEntry, 11> entries_;
};

/// Evaluates every formula exactly; an inexact division throws FormulaError.
ReeDegreeTable ree_degree_table(const ReeParams& params,
                                const DegreeFormulas& formulas = canonical_degree_formulas());

/// |2G2(q)| = q^3 (q^3 + 1)(q - 1).
Natural group_order(const ReeParams& params);

/// Socle parameters plus the extension index d, d | f (Out(H0) is cyclic of
/// order f). The formula set is normally canonical; tests and the CLI fault
/// injection swap in corrupted copies.
struct AlmostSimpleSpec {
  ReeParams params;
  int d = 1;
  DegreeFormulas formulas = canonical_degree_formulas();
};

/// Throws ParameterError when f is invalid or d does not divide f.
AlmostSimpleSpec almost_simple_spec(long f, long d);

/// Where a degree comes from: table line times a divisor of d.
struct Provenance {
  int line = 0;
  std::uint64_t multiplier = 1;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Ordered set of degrees, each with every (line, multiplier) that yields it.
class DegreeSet {
 public:
  using Map = std::map<Natural, std::vector<Provenance>>;

  void insert(const Natural& value, Provenance from);
  void insert(const Natural& value) { insert(value, Provenance{}); }

  bool contains(const Natural& value) const { return members_.count(value) != 0; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Provenance>& provenance(const Natural& value) const;
  std::vector<Natural> values() const;
  bool is_subset_of(const DegreeSet& other) const;

  Map::const_iterator begin() const { return members_.begin(); }
  Map::const_iterator end() const { return members_.end(); }

 private:
  Map members_;
};

/// Superset of cd(H): every degree of H is a degree of H0 times a divisor of
/// d. The trivial character and the q^3 character extend to Aut(H0), and
/// H/H0 is cyclic, so the only degrees of H above them are 1 and q^3; those
/// two lines therefore contribute multiplier 1 only.
DegreeSet cd_superset(const AlmostSimpleSpec& spec);

/// Degrees known to lie in cd(H): 1, the lines whose characters extend, and
/// (q^3 + 1) d from the induced q^3 + 1 character.
DegreeSet certified_degrees(const AlmostSimpleSpec& spec);

/// Members > 1 that are prime powers.
DegreeSet prime_power_degrees(const DegreeSet& set);

/// Largest 2-part over the members. Throws DomainError on an empty set.
Natural max_two_part(const DegreeSet& set);

/// Throws NotFound when the set has no even member.
Natural smallest_even_degree(const DegreeSet& set);

/// x is isolated in set: no member strictly between 1 and x divides x, and
/// no member is a proper multiple of x. Throws DomainError if x is absent.
bool is_isolated(const Natural& x, const DegreeSet& set);

/// The pairwise gcd identities among q - 1, q + 1, q -+ theta + 1.
bool gcd_identities_check(const ReeParams& params);

enum class MaxSubgroupKind {
  Parabolic,              // [q^3]:C_{q-1}
  InvolutionCentralizer,  // 2 x PSL2(q)
  DihedralNormalizer,     // 2^2 x D_{(q+1)/2}:C3
  TorusPlus,              // C_{q+theta+1}:C6
  TorusMinus,             // C_{q-theta+1}:C6
  Subfield,               // 2G2(q0), q = q0^r, r prime
};

std::string_view max_subgroup_kind_name(MaxSubgroupKind kind);

struct MaxSubgroupRow {
  MaxSubgroupKind kind = MaxSubgroupKind::Parabolic;
  std::uint64_t subfield_prime = 0;  // r for Subfield rows, else 0
  Natural order;
  Natural index;

  std::string structure() const;
};

/// Maximal subgroups of 2G2(q) with order and index; one Subfield row per
/// prime r dividing f.
std::vector<MaxSubgroupRow> maximal_subgroups(const ReeParams& params);

struct MaxIndexResult {
  MaxSubgroupRow row;
  bool surviving = false;
  std::optional<Natural> witness;  // the member the index divides
  unsigned index_v3 = 0;
  unsigned max_member_v3 = 0;  // largest 3-valuation over non-3-power members
  bool index_is_3_power = false;
};

/// For each maximal subgroup: does its index divide some member of
/// cd_superset(spec)?
std::vector<MaxIndexResult> maximal_index_filter(const AlmostSimpleSpec& spec);

}  // namespace reecd
