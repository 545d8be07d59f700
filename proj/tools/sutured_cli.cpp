// sutured: sutured torsion and polytope comparisons from the command line.
//
//   sutured torsion <file>
//   sutured compare <file1> <file2>
//   sutured family --n <int> --surface <S|Sprime>
//   sutured sfh-torus <p> <q> <n>
//
// Reports are JSON on stdout; --json also writes them to a file and
// --plot-data writes support points and hull vertices.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sutured/report.hpp"

namespace {

bool write_json(const std::string& path, const sutured::cli::Json& value) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return false;
  }
  out << value.dump(2) << "\n";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sutured torsion, Newton polygons and equivalence checks"};
  app.require_subcommand(1);

  std::string json_path;
  std::string plot_path;
  app.add_option("--json", json_path, "Also write the report to this file");
  app.add_option("--plot-data", plot_path, "Write support points and hull vertices to this file");

  std::string file1, file2;
  auto* torsion = app.add_subcommand("torsion", "Sutured torsion of a presentation file");
  torsion->add_option("file", file1, "Torsion input file")->required();

  auto* compare = app.add_subcommand("compare", "Compare the torsion of two input files");
  compare->add_option("file1", file1)->required();
  compare->add_option("file2", file2)->required();

  std::int64_t family_n = 0;
  std::string surface;
  auto* family = app.add_subcommand("family", "Torsion of Lyon's knot K_n for one of its surfaces");
  family->add_option("--n", family_n, "Twist parameter, n >= -1")->required();
  family->add_option("--surface", surface, "S or Sprime")->required();

  std::int64_t p = 0, q = 0, sutures = 0;
  auto* torus = app.add_subcommand("sfh-torus", "Graded SFH ranks of the solid torus T(p,q;n)");
  torus->add_option("p", p)->required();
  torus->add_option("q", q)->required();
  torus->add_option("n", sutures)->required();

  // Options are accepted after the subcommand too.
  for (auto* sub : {torsion, compare, family, torus}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  sutured::cli::Report report;
  if (*torsion) {
    report = sutured::cli::cmd_torsion(file1);
  } else if (*compare) {
    report = sutured::cli::cmd_compare(file1, file2);
  } else if (*family) {
    report = sutured::cli::cmd_family(family_n, surface);
  } else {
    report = sutured::cli::cmd_sfh_torus(p, q, sutures);
  }

  std::cout << report.body.dump(2) << "\n";
  bool ok = true;
  if (!json_path.empty()) ok &= write_json(json_path, report.body);
  if (!plot_path.empty()) {
    ok &= write_json(plot_path, report.plot.is_null() ? sutured::cli::Json::object() : report.plot);
  }
  return ok ? report.exit_code() : 1;
}
