#pragma once

// Input files and JSON reports for the command-line front end.
//
// A torsion file is sectioned text; sections appear in this order and
// `[basis]` may be omitted. `#` starts a comment.
//
//   [generators]
//   a b x
//   [relators]
//   x^3 b^-2 a^-2
//   [inclusion]
//   a b
//   b a b a^-1
//   [basis]
//   names = a u
//   a = 1 0
//   b = -1 3
//   x = 0 2
//
// Each relator and inclusion word takes one line.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "sutured/equivalence.hpp"
#include "sutured/error.hpp"
#include "sutured/lyon.hpp"
#include "sutured/polytope.hpp"
#include "sutured/sfh.hpp"
#include "sutured/torsion.hpp"

namespace sutured::cli {

using Json = nlohmann::ordered_json;

struct SourceLine {
  std::string text;
  std::size_t line = 0;
};

struct BasisSpec {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, Exponent>> images;
  std::size_t line = 0;
};

struct TorsionFile {
  std::vector<std::string> generators;
  std::vector<SourceLine> relators;
  std::vector<SourceLine> inclusion_words;
  std::optional<BasisSpec> basis;
};

TorsionFile parse_torsion_file(std::string_view text);
TorsionFile read_torsion_file(const std::filesystem::path& path);

// Word errors are re-raised with the offending line number in the message.
TorsionInput to_torsion_input(const TorsionFile& file);

Json to_json(const BigInt& value);
Json to_json(const TorsionClass& t, const std::vector<std::string>& names);
Json to_json(const SupportSet& s);
Json to_json(const LatticePolygon& p);
Json to_json(const EquivalenceVerdict& v);
Json to_json(const AffineMap2& m);
Json to_json(const GradedRanks& g);
Json to_json(const Error& e);

struct Report {
  Json body;
  Json plot;  // support points and hulls for external plotting
  int exit_code() const { return body.contains("error") ? 1 : 0; }
};

Report cmd_torsion(const std::string& path);
Report cmd_compare(const std::string& path1, const std::string& path2);
Report cmd_family(std::int64_t n, const std::string& surface);
Report cmd_sfh_torus(std::int64_t p, std::int64_t q, std::int64_t n);

}  // namespace sutured::cli
