#include "reecd/ree.hpp"

#include <algorithm>
#include <string>

#include "reecd/errors.hpp"
#include "reecd/exactmath.hpp"

namespace reecd {

namespace {

Natural factor_value(TableFactor factor, const ReeParams& p) {
  switch (factor) {
    case TableFactor::Q: return p.q;
    case TableFactor::Theta: return p.theta;
    case TableFactor::QMinus1: return p.q - Natural(1);
    case TableFactor::QPlus1: return p.q + Natural(1);
    case TableFactor::QMinusThetaPlus1: return p.q - p.theta + Natural(1);
    case TableFactor::QPlusThetaPlus1: return p.q + p.theta + Natural(1);
    case TableFactor::QCubed: return Natural::pow(p.q, 3);
  }
  throw DomainError("unknown table factor");
}

DegreeFormulas make_canonical() {
  using F = TableFactor;
  return {{
      {1, 1, 1, {}, false},
      {2, 1, 1, {F::QMinusThetaPlus1, F::QPlusThetaPlus1}, true},
      {3, 1, 6, {F::Theta, F::QMinus1, F::QMinusThetaPlus1}, true},
      {4, 1, 6, {F::Theta, F::QMinus1, F::QPlusThetaPlus1}, true},
      {5, 1, 3, {F::Theta, F::QMinus1, F::QPlus1}, true},
      {6, 1, 1, {F::QMinus1, F::QPlus1, F::QMinusThetaPlus1}, false},
      {7, 1, 1, {F::QMinus1, F::QMinusThetaPlus1, F::QPlusThetaPlus1}, false},
      {8, 1, 1, {F::Q, F::QMinusThetaPlus1, F::QPlusThetaPlus1}, false},
      {9, 1, 1, {F::QCubed}, true},
      {10, 1, 1, {F::QPlus1, F::QMinusThetaPlus1, F::QPlusThetaPlus1}, false},
      {11, 1, 1, {F::QMinus1, F::QPlus1, F::QPlusThetaPlus1}, false},
  }};
}

// Lines whose characters extend to Aut(H0) and sit over a cyclic quotient
// contribute their own degree only; see cd_superset().
bool multiplier_free_line(int line) { return line == 1 || line == 9; }

}  // namespace

ReeParams ree_params(long f) {
  if (f < 3 || f % 2 == 0) {
    throw ParameterError("f must be odd and >= 3, got " + std::to_string(f));
  }
  ReeParams p;
  p.f = static_cast<int>(f);
  p.q = Natural::pow(3, static_cast<std::uint64_t>(f));
  p.theta = Natural::pow(3, static_cast<std::uint64_t>((f + 1) / 2));
  return p;
}

std::string_view table_factor_name(TableFactor f) {
  switch (f) {
    case TableFactor::Q: return "q";
    case TableFactor::Theta: return "theta";
    case TableFactor::QMinus1: return "q-1";
    case TableFactor::QPlus1: return "q+1";
    case TableFactor::QMinusThetaPlus1: return "q-theta+1";
    case TableFactor::QPlusThetaPlus1: return "q+theta+1";
    case TableFactor::QCubed: return "q^3";
  }
  return "?";
}

std::optional<TableFactor> parse_table_factor(std::string_view name) {
  for (auto f : {TableFactor::Q, TableFactor::Theta, TableFactor::QMinus1, TableFactor::QPlus1,
                 TableFactor::QMinusThetaPlus1, TableFactor::QPlusThetaPlus1, TableFactor::QCubed}) {
    if (table_factor_name(f) == name) return f;
  }
  return std::nullopt;
}

const DegreeFormulas& canonical_degree_formulas() {
  static const DegreeFormulas formulas = make_canonical();
  return formulas;
}

const DegreeEntry& ReeDegreeTable::line(int n) const {
  if (n < 1 || n > 11) throw DomainError("degree table line out of range: " + std::to_string(n));
  return entries_[static_cast<std::size_t>(n - 1)];
}

ReeDegreeTable ree_degree_table(const ReeParams& params, const DegreeFormulas& formulas) {
  std::array<DegreeEntry, 11> entries;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    const LineFormula& lf = formulas[i];
    if (lf.divisor == 0) throw FormulaError("line " + std::to_string(lf.line) + ": zero divisor");
    Natural product = lf.scalar;
    for (TableFactor factor : lf.factors) product *= factor_value(factor, params);
    entries[i] = DegreeEntry{
        lf.line,
        exact_div(product, lf.divisor, "degree table line " + std::to_string(lf.line)),
        lf.extends_to_aut,
    };
  }
  return ReeDegreeTable(params, std::move(entries));
}

Natural group_order(const ReeParams& params) {
  const Natural q3 = Natural::pow(params.q, 3);
  return q3 * (q3 + Natural(1)) * (params.q - Natural(1));
}

AlmostSimpleSpec almost_simple_spec(long f, long d) {
  AlmostSimpleSpec spec;
  spec.params = ree_params(f);
  if (d < 1 || f % d != 0) {
    throw ParameterError("d must be a positive divisor of f = " + std::to_string(f) +
                         ", got " + std::to_string(d));
  }
  spec.d = static_cast<int>(d);
  return spec;
}

void DegreeSet::insert(const Natural& value, Provenance from) {
  auto& list = members_[value];
  if (std::find(list.begin(), list.end(), from) == list.end()) list.push_back(from);
}

const std::vector<Provenance>& DegreeSet::provenance(const Natural& value) const {
  auto it = members_.find(value);
  if (it == members_.end()) throw NotFound("not a member: " + value.str());
  return it->second;
}

std::vector<Natural> DegreeSet::values() const {
  std::vector<Natural> out;
  out.reserve(members_.size());
  for (const auto& [value, from] : members_) out.push_back(value);
  return out;
}

bool DegreeSet::is_subset_of(const DegreeSet& other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](const auto& kv) { return other.contains(kv.first); });
}

DegreeSet cd_superset(const AlmostSimpleSpec& spec) {
  const ReeDegreeTable table = ree_degree_table(spec.params, spec.formulas);
  const auto multipliers = divisors(static_cast<std::uint64_t>(spec.d));
  DegreeSet out;
  for (const DegreeEntry& entry : table.entries()) {
    for (std::uint64_t a : multipliers) {
      if (a > 1 && multiplier_free_line(entry.line)) continue;
      out.insert(entry.value * Natural(a), Provenance{entry.line, a});
    }
  }
  return out;
}

DegreeSet certified_degrees(const AlmostSimpleSpec& spec) {
  const ReeDegreeTable table = ree_degree_table(spec.params, spec.formulas);
  DegreeSet out;
  out.insert(table.line(1).value, Provenance{1, 1});
  for (const DegreeEntry& entry : table.entries()) {
    if (entry.extends_to_aut) out.insert(entry.value, Provenance{entry.line, 1});
  }
  const Natural q3_plus_1 = Natural::pow(spec.params.q, 3) + Natural(1);
  out.insert(q3_plus_1 * Natural(spec.d), Provenance{10, static_cast<std::uint64_t>(spec.d)});
  return out;
}

DegreeSet prime_power_degrees(const DegreeSet& set) {
  DegreeSet out;
  for (const auto& [value, from] : set) {
    if (value <= Natural(1) || !is_prime_power(value)) continue;
    for (const Provenance& p : from) out.insert(value, p);
  }
  return out;
}

Natural max_two_part(const DegreeSet& set) {
  if (set.empty()) throw DomainError("max_two_part of an empty set");
  Natural best = 1;
  for (const auto& [value, from] : set) best = std::max(best, part_p(value, 2));
  return best;
}

Natural smallest_even_degree(const DegreeSet& set) {
  for (const auto& [value, from] : set) {
    if (value.is_even()) return value;
  }
  throw NotFound("degree set has no even member");
}

bool is_isolated(const Natural& x, const DegreeSet& set) {
  if (!set.contains(x)) throw DomainError("is_isolated: " + x.str() + " is not a member");
  for (const auto& [y, from] : set) {
    if (y == x) continue;
    if (y > Natural(1) && y < x && divides(y, x)) return false;
    if (y > x && divides(x, y)) return false;
  }
  return true;
}

bool gcd_identities_check(const ReeParams& params) {
  const Natural one = 1;
  const Natural qm = params.q - one;
  const Natural qp = params.q + one;
  const Natural tm = params.q - params.theta + one;
  const Natural tp = params.q + params.theta + one;
  return gcd(qm, qp) == Natural(2) && gcd(qm, tm) == one && gcd(qm, tp) == one &&
         gcd(qp, tm) == one && gcd(qp, tp) == one && gcd(tm, tp) == one;
}

std::string_view max_subgroup_kind_name(MaxSubgroupKind kind) {
  switch (kind) {
    case MaxSubgroupKind::Parabolic: return "parabolic";
    case MaxSubgroupKind::InvolutionCentralizer: return "involution-centralizer";
    case MaxSubgroupKind::DihedralNormalizer: return "dihedral-normalizer";
    case MaxSubgroupKind::TorusPlus: return "torus-plus";
    case MaxSubgroupKind::TorusMinus: return "torus-minus";
    case MaxSubgroupKind::Subfield: return "subfield";
  }
  return "?";
}

std::string MaxSubgroupRow::structure() const {
  switch (kind) {
    case MaxSubgroupKind::Parabolic: return "[q^3]:C_{q-1}";
    case MaxSubgroupKind::InvolutionCentralizer: return "2 x PSL2(q)";
    case MaxSubgroupKind::DihedralNormalizer: return "2^2 x D_{(q+1)/2}:C3";
    case MaxSubgroupKind::TorusPlus: return "C_{q+sqrt(3q)+1}:C6";
    case MaxSubgroupKind::TorusMinus: return "C_{q-sqrt(3q)+1}:C6";
    case MaxSubgroupKind::Subfield: return "2G2(q^(1/" + std::to_string(subfield_prime) + "))";
  }
  return "?";
}

std::vector<MaxSubgroupRow> maximal_subgroups(const ReeParams& params) {
  const Natural one = 1;
  const Natural& q = params.q;
  const Natural order_g = group_order(params);

  auto row = [&](MaxSubgroupKind kind, Natural order, std::uint64_t r = 0) {
    Natural index = exact_div(order_g, order, "maximal subgroup index");
    return MaxSubgroupRow{kind, r, std::move(order), std::move(index)};
  };

  std::vector<MaxSubgroupRow> rows;
  rows.push_back(row(MaxSubgroupKind::Parabolic, Natural::pow(q, 3) * (q - one)));
  rows.push_back(row(MaxSubgroupKind::InvolutionCentralizer, q * (q * q - one)));
  rows.push_back(row(MaxSubgroupKind::DihedralNormalizer, Natural(6) * (q + one)));
  rows.push_back(row(MaxSubgroupKind::TorusPlus, Natural(6) * (q + params.theta + one)));
  rows.push_back(row(MaxSubgroupKind::TorusMinus, Natural(6) * (q - params.theta + one)));
  for (std::uint64_t r : prime_divisors(static_cast<std::uint64_t>(params.f))) {
    const Natural q0 = Natural::pow(3, static_cast<std::uint64_t>(params.f) / r);
    const Natural q03 = Natural::pow(q0, 3);
    rows.push_back(row(MaxSubgroupKind::Subfield, q03 * (q03 + one) * (q0 - one), r));
  }
  return rows;
}

std::vector<MaxIndexResult> maximal_index_filter(const AlmostSimpleSpec& spec) {
  const DegreeSet superset = cd_superset(spec);

  unsigned max_member_v3 = 0;
  for (const auto& [value, from] : superset) {
    if (value <= Natural(1)) continue;
    if (Natural::pow(3, val_p(value, 3)) == value) continue;
    max_member_v3 = std::max(max_member_v3, val_p(value, 3));
  }

  std::vector<MaxIndexResult> out;
  for (MaxSubgroupRow& row : maximal_subgroups(spec.params)) {
    MaxIndexResult result;
    result.index_v3 = val_p(row.index, 3);
    result.index_is_3_power = Natural::pow(3, result.index_v3) == row.index;
    result.max_member_v3 = max_member_v3;
    for (const auto& [value, from] : superset) {
      if (divides(row.index, value)) {
        result.surviving = true;
        result.witness = value;
        break;
      }
    }
    result.row = std::move(row);
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace reecd
