// reecd: degree tables, lemma checks and the chief-factor elimination for
// almost simple groups with socle 2G2(3^f).

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "reecd/errors.hpp"
#include "reecd/report.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character degree checks for almost simple groups with socle 2G2(q)"};
  app.require_subcommand(1);

  std::string f_text;
  std::string d_text = "all";
  std::string format = "json";
  std::string out_path;
  std::string fixture;
  bool strict = false;
  bool no_header = false;

  app.add_option("--f", f_text, "odd f >= 3: list or range, e.g. 3,5,7 or 3-15")->required();
  app.add_option("--d", d_text, "'all' or a list of divisors of f")->capture_default_str();
  app.add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
  app.add_flag("--strict", strict, "strict unipotent 3-part test");
  app.add_flag("--no-header", no_header, "omit the timestamp header");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--table-fixture", fixture, "JSON overrides for the degree formulas")->group("");

  const std::pair<const char*, reecd::Command> commands[] = {
      {"degrees", reecd::Command::Degrees},   {"maximals", reecd::Command::Maximals},
      {"eliminate", reecd::Command::Eliminate}, {"lemmas", reecd::Command::Lemmas},
      {"all", reecd::Command::All},
  };
  const char* help[] = {"degree table and degree sets", "maximal subgroup index filter",
                        "chief-factor elimination", "arithmetic lemmas", "every check"};
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) subs.push_back(app.add_subcommand(commands[i].first, help[i])->fallthrough());

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  reecd::RunConfig config;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) config.command = commands[i].second;
  }
  config.format = format == "md" ? reecd::OutputFormat::Markdown : reecd::OutputFormat::Json;
  config.strict = strict;
  config.header = !no_header;

  try {
    config.f_values = reecd::parse_f_list(f_text);
    config.d_values = reecd::parse_d_policy(d_text);
    if (!fixture.empty()) {
      config.formulas = reecd::load_table_fixture(fixture);
      config.fixture = fixture;
    }
    reecd::validate(config);
  } catch (const reecd::ParameterError& e) {
    std::cerr << "reecd: " << e.what() << "\n";
    return kExitUsage;
  }

  const reecd::Report report = reecd::run(config);
  const std::string text = config.format == reecd::OutputFormat::Json ? reecd::render_json(report)
                                                                       : reecd::render_markdown(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "reecd: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    out << text;
  }

  for (const std::string& line : reecd::failure_lines(report)) std::cerr << line << "\n";
  return report.failures() == 0 ? 0 : kExitFail;
}
