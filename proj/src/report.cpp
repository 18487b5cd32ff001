#include "reecd/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "reecd/errors.hpp"
#include "reecd/exactmath.hpp"

namespace reecd {

using nlohmann::ordered_json;

namespace {

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw ParameterError("bad " + std::string(what) + " value '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void check_f(int f) {
  if (f < 3 || f % 2 == 0) throw ParameterError("f must be odd and >= 3, got " + std::to_string(f));
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json natural_list(const DegreeSet& set) {
  ordered_json out = ordered_json::array();
  for (const auto& [value, prov] : set) out.push_back(value.str());
  return out;
}

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

CheckReport make(std::string id, int f, std::optional<int> d, bool ok, ordered_json witness, std::string anchor) {
  return CheckReport{std::move(id), f, d, pass_if(ok), std::move(witness), std::move(anchor)};
}

ordered_json relation(std::string rel, std::string lhs, std::string rhs) {
  ordered_json w;
  w["relation"] = std::move(rel);
  w["lhs"] = std::move(lhs);
  w["rhs"] = std::move(rhs);
  return w;
}

AlmostSimpleSpec spec_for(const RunConfig& config, int f, int d) {
  AlmostSimpleSpec spec = almost_simple_spec(f, d);
  spec.formulas = config.formulas;
  return spec;
}

// Per-f checks.

CheckReport degree_table_check(const RunConfig& config, int f) {
  const ReeParams p = ree_params(f);
  const ReeDegreeTable table = ree_degree_table(p, config.formulas);
  const Natural order = group_order(p);
  const Natural line10 = Natural::pow(p.q, 3) + Natural(1);

  std::set<Natural> distinct;
  bool all_divide = true;
  ordered_json lines = ordered_json::array();
  for (const DegreeEntry& e : table.entries()) {
    distinct.insert(e.value);
    const bool div = divides(e.value, order);
    all_divide = all_divide && div;
    lines.push_back({{"line", e.line}, {"value", e.value.str()}, {"extends", e.extends_to_aut}, {"divides_order", div}});
  }
  const bool line10_ok = table.line(10).value == line10;
  ordered_json w = relation("11 distinct values, deg_10 == q^3+1, every value divides |H0|",
                            std::to_string(distinct.size()), "11");
  w["group_order"] = order.str();
  w["line10_matches"] = line10_ok;
  w["lines"] = std::move(lines);
  return make("ree.degree_table", f, std::nullopt, distinct.size() == 11 && line10_ok && all_divide, std::move(w),
              "degrees of 2G2(q), q = 3^f");
}

CheckReport gcd_check(int f) {
  const ReeParams p = ree_params(f);
  const Natural one = 1;
  const Natural qm = p.q - one;
  const Natural qp = p.q + one;
  const Natural tm = p.q - p.theta + one;
  const Natural tp = p.q + p.theta + one;
  const bool ok = gcd_identities_check(p);
  ordered_json w = relation("gcd(q-1, q+1) == 2, other pairs coprime", gcd(qm, qp).str(), "2");
  w["gcd(q-1,q-t+1)"] = gcd(qm, tm).str();
  w["gcd(q-1,q+t+1)"] = gcd(qm, tp).str();
  w["gcd(q+1,q-t+1)"] = gcd(qp, tm).str();
  w["gcd(q+1,q+t+1)"] = gcd(qp, tp).str();
  w["gcd(q-t+1,q+t+1)"] = gcd(tm, tp).str();
  return make("gcd_identities", f, std::nullopt, ok, std::move(w), "q-1, q+1, q-t+1, q+t+1, t = sqrt(3q)");
}

// Per-(f, d) checks.

CheckReport degree_sets_check(const AlmostSimpleSpec& spec) {
  const DegreeSet superset = cd_superset(spec);
  const DegreeSet certified = certified_degrees(spec);
  ordered_json w = relation("certified subset of cd_superset", std::to_string(certified.size()),
                            std::to_string(superset.size()));
  w["certified"] = natural_list(certified);
  w["superset"] = natural_list(superset);
  return make("ree.degree_sets", spec.params.f, spec.d, certified.is_subset_of(superset), std::move(w),
              "certified <= cd(H) <= cd_superset");
}

std::vector<CheckReport> lemma_checks(const AlmostSimpleSpec& spec) {
  const ReeParams& p = spec.params;
  const int f = p.f;
  const int d = spec.d;
  const DegreeSet superset = cd_superset(spec);
  const Natural q3 = Natural::pow(p.q, 3);
  std::vector<CheckReport> out;

  {
    const DegreeSet pp = prime_power_degrees(superset);
    const bool ok = pp.size() == 1 && pp.contains(q3);
    ordered_json w = relation("prime-power members == {q^3}", natural_list(pp).dump(), "[\"" + q3.str() + "\"]");
    out.push_back(make("lemma_deg.prime_power", f, d, ok, std::move(w), "q^3 is the only prime-power degree"));
  }
  {
    const Natural two = max_two_part(superset);
    out.push_back(make("lemma_deg.two_part", f, d, two == Natural(8), relation("==", two.str(), "8"),
                       "max 2-part of cd(H) is 8"));
  }
  {
    const Natural expected =
        exact_div(p.theta * (p.q * p.q - Natural(1)), Natural(3), "theta(q^2-1)/3");
    ordered_json w;
    bool ok = false;
    try {
      const Natural got = smallest_even_degree(superset);
      ok = got == expected;
      w = relation("==", got.str(), expected.str());
    } catch (const NotFound&) {
      w = relation("==", "none", expected.str());
    }
    out.push_back(make("lemma_deg.smallest_even", f, d, ok, std::move(w), "smallest even degree theta(q^2-1)/3"));
  }
  {
    const bool present = superset.contains(q3);
    const bool ok = present && is_isolated(q3, superset);
    ordered_json w = relation("q^3 isolated in cd_superset", q3.str(), std::to_string(superset.size()));
    w["present"] = present;
    out.push_back(make("lemma_deg.isolated", f, d, ok, std::move(w), "q^3 is an isolated degree"));
  }
  return out;
}

CheckReport maximal_check(const AlmostSimpleSpec& spec) {
  const std::vector<MaxIndexResult> results = maximal_index_filter(spec);
  ordered_json rows = ordered_json::array();
  std::vector<std::string> surviving;
  bool ok = true;
  const Natural parabolic_index = Natural::pow(spec.params.q, 3) + Natural(1);
  for (const MaxIndexResult& r : results) {
    const bool parabolic = r.row.kind == MaxSubgroupKind::Parabolic;
    if (r.surviving) surviving.emplace_back(max_subgroup_kind_name(r.row.kind));
    ok = ok && r.surviving == parabolic;
    if (parabolic) ok = ok && r.row.index == parabolic_index;
    ordered_json row;
    row["kind"] = std::string(max_subgroup_kind_name(r.row.kind));
    row["structure"] = r.row.structure();
    row["index"] = r.row.index.str();
    row["surviving"] = r.surviving;
    row["divides"] = r.witness ? r.witness->str() : std::string("none");
    row["index_v3"] = r.index_v3;
    row["max_member_v3"] = r.max_member_v3;
    rows.push_back(std::move(row));
  }
  ordered_json survivors = surviving;
  ordered_json w = relation("surviving rows == [parabolic]", survivors.dump(), "[\"parabolic\"]");
  w["rows"] = std::move(rows);
  return make("ree.maximal_index_filter", spec.params.f, spec.d, ok, std::move(w),
              "index of a maximal subgroup divides some degree");
}

CheckReport elimination_check(const AlmostSimpleSpec& spec, bool strict) {
  const std::vector<EliminationOutcome> outcomes = evaluate_candidates(spec, EliminationOptions{strict});
  const DegreeSet superset = cd_superset(spec);
  std::vector<std::string> survivors;
  std::map<std::string, std::size_t> by_reason;
  bool reverified = true;
  bool k2_parity = true;
  bool expected_found = false;
  ordered_json list = ordered_json::array();
  for (const EliminationOutcome& o : outcomes) {
    if (o.survives()) {
      survivors.push_back(candidate_name(o.candidate) + " k=" + std::to_string(o.k));
      const auto* lie = std::get_if<LieCandidate>(&o.candidate);
      expected_found = expected_found || (lie && lie->family.tag == LieFamilyTag::G2Twisted &&
                                          lie->e == static_cast<unsigned>(spec.params.f) && o.k == 1);
    } else {
      const RuledOut& r = o.ruled_out();
      ++by_reason[std::string(reason_code_name(r.code))];
      reverified = reverified && !r.witness.holds_against(superset);
      if (o.k == 2 && std::holds_alternative<LieCandidate>(o.candidate)) {
        k2_parity = k2_parity && r.code == ReasonCode::K2Parity;
      }
    }
    list.push_back(outcome_to_json(o));
  }
  const bool ok = survivors.size() == 1 && expected_found && reverified && k2_parity;
  ordered_json w = relation("survivors == [2G2(3^f) k=1]", ordered_json(survivors).dump(),
                            "[\"2G2(3^" + std::to_string(spec.params.f) + ") k=1\"]");
  w["candidates"] = outcomes.size();
  w["witnesses_reverified"] = reverified;
  w["k2_all_parity"] = k2_parity;
  ordered_json reasons;
  for (const auto& [name, count] : by_reason) reasons[name] = count;
  w["by_reason"] = std::move(reasons);
  w["outcomes"] = std::move(list);
  return make("elimination.unique_survivor", spec.params.f, spec.d, ok, std::move(w),
              "G'/M = S^k forces S = 2G2(q), k = 1");
}

bool wants(Command selected, Command c) { return selected == Command::All || selected == c; }

// A check that throws still yields a failing report naming it.
void guarded(std::vector<CheckReport>& out, const std::string& id, int f, std::optional<int> d,
             const std::function<void(std::vector<CheckReport>&)>& body) {
  try {
    body(out);
  } catch (const std::exception& e) {
    ordered_json w = relation("check completes", std::string("error: ") + e.what(), "no error");
    out.push_back(CheckReport{id, f, d, CheckStatus::Fail, std::move(w), "evaluation raised an error"});
  }
}

void run_f(const RunConfig& config, int f, std::vector<CheckReport>& out) {
  const Command cmd = config.command;

  // Every later check needs the table, so a broken table stops this f.
  bool table_ok = true;
  try {
    ree_degree_table(ree_params(f), config.formulas);
  } catch (const FormulaError& e) {
    table_ok = false;
    ordered_json w = relation("every line divides exactly", std::string("error: ") + e.what(), "exact");
    out.push_back(CheckReport{"ree.degree_table", f, std::nullopt, CheckStatus::Fail, std::move(w),
                              "degrees of 2G2(q), q = 3^f"});
  }
  if (!table_ok) return;

  if (wants(cmd, Command::Degrees)) {
    guarded(out, "ree.degree_table", f, std::nullopt, [&](auto& o) { o.push_back(degree_table_check(config, f)); });
  }
  if (wants(cmd, Command::Lemmas)) {
    guarded(out, "gcd_identities", f, std::nullopt, [&](auto& o) { o.push_back(gcd_check(f)); });
    guarded(out, "inequality_chain", f, std::nullopt, [&](auto& o) { o.push_back(inequality_chain_check(f)); });
    guarded(out, "eta_inertia", f, std::nullopt, [&](auto& o) { o.push_back(eta_inertia_check(ree_params(f))); });
  }

  for (int d : d_values_for(config, f)) {
    const AlmostSimpleSpec spec = spec_for(config, f, d);
    if (wants(cmd, Command::Degrees)) {
      guarded(out, "ree.degree_sets", f, d, [&](auto& o) { o.push_back(degree_sets_check(spec)); });
    }
    if (wants(cmd, Command::Lemmas)) {
      guarded(out, "lemma_deg", f, d, [&](auto& o) {
        for (CheckReport& r : lemma_checks(spec)) o.push_back(std::move(r));
      });
      guarded(out, "solvable_quotient", f, d, [&](auto& o) {
        for (CheckReport& r : solvable_quotient_checks(spec)) o.push_back(std::move(r));
      });
      guarded(out, "step3_divisibility", f, d, [&](auto& o) { o.push_back(step3_divisibility_check(spec)); });
      guarded(out, "final_degree", f, d, [&](auto& o) { o.push_back(final_degree_check(spec)); });
    }
    if (wants(cmd, Command::Maximals)) {
      guarded(out, "ree.maximal_index_filter", f, d, [&](auto& o) { o.push_back(maximal_check(spec)); });
    }
    if (wants(cmd, Command::Eliminate)) {
      guarded(out, "elimination.unique_survivor", f, d,
              [&](auto& o) { o.push_back(elimination_check(spec, config.strict)); });
    }
  }
}

std::string scalar_text(const ordered_json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool all_scalars(const ordered_json& arr) {
  return std::all_of(arr.begin(), arr.end(), [](const ordered_json& x) { return x.is_primitive(); });
}

std::string inline_object(const ordered_json& obj) {
  std::string s;
  for (const auto& [key, value] : obj.items()) {
    if (!s.empty()) s += ", ";
    s += key + "=" + scalar_text(value);
  }
  return s;
}

void render_value(std::ostringstream& md, const std::string& key, const ordered_json& value, int depth) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  if (key == "lines" && value.is_array()) {
    md << indent << "- lines:\n";
    for (const ordered_json& line : value) {
      md << indent << "  - line " << line["line"].get<int>() << ": " << line["value"].get<std::string>()
         << (line["extends"].get<bool>() ? " (extends)" : "")
         << (line["divides_order"].get<bool>() ? "" : " (does not divide |H0|)") << "\n";
    }
    return;
  }
  if (value.is_object()) {
    md << indent << "- " << key << ":\n";
    for (const auto& [k, v] : value.items()) render_value(md, k, v, depth + 1);
    return;
  }
  if (value.is_array()) {
    if (all_scalars(value)) {
      std::string joined;
      for (const ordered_json& x : value) joined += (joined.empty() ? "" : ", ") + scalar_text(x);
      md << indent << "- " << key << ": " << (joined.empty() ? "(none)" : joined) << "\n";
      return;
    }
    md << indent << "- " << key << ":\n";
    for (const ordered_json& x : value) {
      if (x.is_object() && !x.contains("witness")) {
        md << indent << "  - " << inline_object(x) << "\n";
      } else if (x.is_object()) {
        ordered_json head = x;
        head.erase("witness");
        md << indent << "  - " << inline_object(head) << "\n";
        for (const auto& [k, v] : x["witness"].items()) render_value(md, k, v, depth + 2);
      } else {
        md << indent << "  - " << x.dump() << "\n";
      }
    }
    return;
  }
  md << indent << "- " << key << ": " << scalar_text(value) << "\n";
}

std::string where(const CheckReport& c) {
  std::string s = "f=" + std::to_string(c.f);
  s += " d=" + (c.d ? std::to_string(*c.d) : std::string("-"));
  return s;
}

}  // namespace

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Degrees: return "degrees";
    case Command::Maximals: return "maximals";
    case Command::Eliminate: return "eliminate";
    case Command::Lemmas: return "lemmas";
    case Command::All: return "all";
  }
  return "?";
}

std::vector<int> parse_f_list(std::string_view text) {
  std::set<int> values;
  for (std::string_view token : split(text, ',')) {
    if (token.empty()) continue;
    const std::size_t dash = token.find('-', 1);
    if (dash == std::string_view::npos) {
      const int f = parse_int(token, "f");
      check_f(f);
      values.insert(f);
      continue;
    }
    const int lo = parse_int(token.substr(0, dash), "f");
    const int hi = parse_int(token.substr(dash + 1), "f");
    if (lo > hi) throw ParameterError("empty f range '" + std::string(token) + "'");
    if (lo < 3) check_f(lo);
    for (int f = lo; f <= hi; ++f) {
      if (f % 2 == 1) values.insert(f);
    }
  }
  if (values.empty()) throw ParameterError("no f values given");
  return {values.begin(), values.end()};
}

std::optional<std::vector<int>> parse_d_policy(std::string_view text) {
  if (text == "all") return std::nullopt;
  std::set<int> values;
  for (std::string_view token : split(text, ',')) {
    if (token.empty()) continue;
    const int d = parse_int(token, "d");
    if (d < 1) throw ParameterError("d must be positive, got " + std::to_string(d));
    values.insert(d);
  }
  if (values.empty()) throw ParameterError("no d values given");
  return std::vector<int>(values.begin(), values.end());
}

void validate(const RunConfig& config) {
  if (config.f_values.empty()) throw ParameterError("no f values given");
  for (int f : config.f_values) {
    check_f(f);
    if (!config.d_values) continue;
    for (int d : *config.d_values) {
      if (d < 1 || f % d != 0) {
        throw ParameterError("d = " + std::to_string(d) + " does not divide f = " + std::to_string(f));
      }
    }
  }
}

std::vector<int> d_values_for(const RunConfig& config, int f) {
  if (config.d_values) return *config.d_values;
  std::vector<int> out;
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(f))) out.push_back(static_cast<int>(d));
  return out;
}

DegreeFormulas load_table_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read table fixture " + path);
  DegreeFormulas formulas = canonical_degree_formulas();
  try {
    const ordered_json j = ordered_json::parse(in);
    for (const ordered_json& o : j.at("overrides")) {
      const int line = o.at("line").get<int>();
      if (line < 1 || line > 11) throw ParameterError("fixture line out of range: " + std::to_string(line));
      LineFormula& lf = formulas[static_cast<std::size_t>(line - 1)];
      if (o.contains("scalar")) lf.scalar = o["scalar"].get<std::uint64_t>();
      if (o.contains("divisor")) lf.divisor = o["divisor"].get<std::uint64_t>();
      if (lf.divisor == 0) throw ParameterError("fixture divisor must be nonzero");
      if (o.contains("extends")) lf.extends_to_aut = o["extends"].get<bool>();
      if (o.contains("factors")) {
        lf.factors.clear();
        for (const ordered_json& name : o["factors"]) {
          const auto factor = parse_table_factor(name.get<std::string>());
          if (!factor) throw ParameterError("unknown table factor '" + name.get<std::string>() + "'");
          lf.factors.push_back(*factor);
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError("malformed table fixture " + path + ": " + e.what());
  }
  return formulas;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckReport& c) { return c.status == CheckStatus::Fail; }));
}

Report run(const RunConfig& config) {
  validate(config);
  Report report;
  if (config.header) report.timestamp = utc_timestamp();

  ordered_json cfg;
  cfg["command"] = std::string(command_name(config.command));
  cfg["f"] = config.f_values;
  if (config.d_values) {
    cfg["d"] = *config.d_values;
  } else {
    cfg["d"] = "all";
  }
  cfg["strict"] = config.strict;
  cfg["enumeration"] = {{"m_max", EnumerationBounds{}.m_max}, {"n_max", EnumerationBounds{}.n_max}};
  if (config.fixture) cfg["table_fixture"] = *config.fixture;
  report.config = std::move(cfg);

  for (int f : config.f_values) run_f(config, f, report.checks);
  return report;
}

ordered_json report_to_json(const Report& report) {
  ordered_json j;
  if (report.timestamp) j["header"] = {{"generator", "reecd"}, {"timestamp", *report.timestamp}};
  j["config"] = report.config;
  ordered_json checks = ordered_json::array();
  std::size_t pass = 0;
  std::size_t na = 0;
  ordered_json failed = ordered_json::array();
  for (const CheckReport& c : report.checks) {
    ordered_json o;
    o["check_id"] = c.check_id;
    o["f"] = c.f;
    o["d"] = c.d ? ordered_json(*c.d) : ordered_json(nullptr);
    o["status"] = std::string(check_status_name(c.status));
    o["witness"] = c.witness;
    o["anchor"] = c.anchor;
    checks.push_back(std::move(o));
    if (c.status == CheckStatus::Pass) ++pass;
    if (c.status == CheckStatus::NotApplicable) ++na;
    if (c.status == CheckStatus::Fail) failed.push_back(c.check_id + " " + where(c));
  }
  j["checks"] = std::move(checks);
  ordered_json summary;
  summary["total"] = report.checks.size();
  summary["pass"] = pass;
  summary["fail"] = failed.size();
  summary["not_applicable"] = na;
  summary["failed"] = std::move(failed);
  summary["closure"] =
      "A_n with n > n_max has a degree divisible by 16; Lie candidates outside the enumeration violate "
      "e*N*k = 3f.";
  j["summary"] = std::move(summary);
  return j;
}

std::string render_json(const Report& report) { return report_to_json(report).dump(2) + "\n"; }

std::string render_markdown(const Report& report) {
  const ordered_json j = report_to_json(report);
  std::ostringstream md;
  md << "# reecd report\n\n";
  if (j.contains("header")) {
    md << "## header\n\n";
    for (const auto& [k, v] : j["header"].items()) render_value(md, k, v, 0);
    md << "\n";
  }
  md << "## config\n\n";
  for (const auto& [k, v] : j["config"].items()) render_value(md, k, v, 0);
  md << "\n## checks\n";
  for (const ordered_json& c : j["checks"]) {
    md << "\n### " << c["check_id"].get<std::string>() << " f=" << c["f"].get<int>()
       << " d=" << (c["d"].is_null() ? std::string("-") : c["d"].dump()) << ": "
       << c["status"].get<std::string>() << "\n\n";
    md << "anchor: " << c["anchor"].get<std::string>() << "\n\n";
    for (const auto& [k, v] : c["witness"].items()) render_value(md, k, v, 0);
  }
  md << "\n## summary\n\n";
  for (const auto& [k, v] : j["summary"].items()) render_value(md, k, v, 0);
  return md.str();
}

std::vector<std::string> failure_lines(const Report& report) {
  std::vector<std::string> out;
  for (const CheckReport& c : report.checks) {
    if (c.status != CheckStatus::Fail) continue;
    out.push_back("FAIL " + c.check_id + " " + where(c) + ": lhs=" + scalar_text(c.witness.value("lhs", ordered_json())) +
                  " rhs=" + scalar_text(c.witness.value("rhs", ordered_json())) + " (" +
                  scalar_text(c.witness.value("relation", ordered_json())) + ")");
  }
  return out;
}

}  // namespace reecd
