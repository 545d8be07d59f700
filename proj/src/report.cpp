#include "sutured/report.hpp"

#include <fstream>
#include <sstream>

#include "sutured/words.hpp"

namespace sutured::cli {

namespace {

enum class Section { None, Generators, Relators, Inclusion, Basis };

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] void format_error(std::size_t line, const std::string& message) {
  throw Error(ErrorKind::FileFormat, "line " + std::to_string(line) + ": " + message, line);
}

std::int64_t parse_int(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    format_error(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) format_error(line, "expected an integer, got '" + tok + "'");
  return value;
}

void parse_basis_line(BasisSpec& basis, const std::string& content, std::size_t line) {
  const auto eq = content.find('=');
  if (eq == std::string::npos) format_error(line, "expected 'key = values' in [basis]");
  const std::string key = trim(std::string_view(content).substr(0, eq));
  const auto values = split_ws(content.substr(eq + 1));
  if (key == "names") {
    if (!basis.names.empty()) format_error(line, "duplicate 'names' in [basis]");
    basis.names = values;
    return;
  }
  Exponent e;
  for (const auto& tok : values) e.push_back(parse_int(tok, line));
  basis.images.emplace_back(key, std::move(e));
}

Word parse_line_word(const SourceLine& src, const std::vector<std::string>& generators) {
  try {
    return parse_word(src.text, generators);
  } catch (const Error& e) {
    throw Error(e.kind(), "line " + std::to_string(src.line) + ": " + e.what(), e.position());
  }
}

Json point_json(const Point2& p) { return Json::array({p[0], p[1]}); }

Json exponent_json(const Exponent& e) {
  Json out = Json::array();
  for (auto x : e) out.push_back(x);
  return out;
}

Json error_report(Json command, const Error& e) {
  Json body;
  body["command"] = std::move(command);
  body["error"] = to_json(e);
  return body;
}

struct Pipeline {
  TorsionInput input;
  TorsionClass torsion;
};

Pipeline run_pipeline(const std::string& path) {
  Pipeline p;
  p.input = to_torsion_input(read_torsion_file(path));
  p.torsion = sutured_torsion(p.input);
  return p;
}

// Support and polygon entries of a report; rank > 2 and zero classes get a
// diagnostic instead of a polygon.
void add_geometry(Json& out, Json& plot_entry, const TorsionClass& t, Json& diagnostics) {
  if (t.is_zero()) {
    out["support"] = Json::array();
    out["polygon"] = nullptr;
    diagnostics.push_back("zero torsion has empty support");
    return;
  }
  const SupportSet s = support(t);
  out["support"] = to_json(s);
  plot_entry["points"] = to_json(s);
  if (s.rank > 2) {
    out["polygon"] = nullptr;
    out["hull_dimension"] = affine_dimension(s);
    diagnostics.push_back("polygon omitted: rank " + std::to_string(s.rank) + " > 2");
    return;
  }
  const LatticePolygon poly = newton_polytope(s);
  out["polygon"] = to_json(poly);
  out["sfh_polytope"] = to_json(scaled(poly, 2));
  Json hull = Json::array();
  for (const auto& v : poly.vertices) hull.push_back(point_json(v));
  plot_entry["hull"] = std::move(hull);
}

Json input_json(const TorsionInput& input) {
  Json out;
  out["generators"] = input.presentation.generators;
  Json relators = Json::array();
  for (const Word& r : input.presentation.relators) relators.push_back(render(r));
  out["relators"] = std::move(relators);
  Json words = Json::array();
  for (const Word& w : input.inclusion_words) words.push_back(render(w));
  out["inclusion_words"] = std::move(words);
  Json basis;
  basis["names"] = input.abelianization.basis_names;
  Json images;
  for (const Generator& g : input.presentation.generators) {
    images[g] = exponent_json(input.abelianization.images.at(g));
  }
  basis["images"] = std::move(images);
  out["basis"] = std::move(basis);
  return out;
}

}  // namespace

TorsionFile parse_torsion_file(std::string_view text) {
  TorsionFile file;
  Section section = Section::None;
  bool seen_generators = false, seen_relators = false, seen_inclusion = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (content.empty()) continue;

    if (content.front() == '[') {
      if (content.back() != ']') format_error(line_no, "malformed section header");
      const std::string name = trim(std::string_view(content).substr(1, content.size() - 2));
      Section next = Section::None;
      if (name == "generators") next = Section::Generators;
      else if (name == "relators") next = Section::Relators;
      else if (name == "inclusion") next = Section::Inclusion;
      else if (name == "basis") next = Section::Basis;
      else format_error(line_no, "unknown section [" + name + "]");
      if (static_cast<int>(next) != static_cast<int>(section) + 1) {
        format_error(line_no, "section [" + name +
                                  "] out of order; expected generators, relators, inclusion, basis");
      }
      section = next;
      seen_generators |= next == Section::Generators;
      seen_relators |= next == Section::Relators;
      seen_inclusion |= next == Section::Inclusion;
      if (next == Section::Basis) file.basis = BasisSpec{{}, {}, line_no};
      continue;
    }

    switch (section) {
      case Section::None:
        format_error(line_no, "content before the first section");
      case Section::Generators:
        for (auto& g : split_ws(content)) file.generators.push_back(std::move(g));
        break;
      case Section::Relators:
        file.relators.push_back({content, line_no});
        break;
      case Section::Inclusion:
        file.inclusion_words.push_back({content, line_no});
        break;
      case Section::Basis:
        parse_basis_line(*file.basis, content, line_no);
        break;
    }
  }
  if (!seen_generators || !seen_relators || !seen_inclusion) {
    format_error(line_no, "missing section; [generators], [relators] and [inclusion] are required");
  }
  if (file.basis && file.basis->names.empty()) {
    format_error(file.basis->line, "[basis] needs a 'names = ...' line");
  }
  return file;
}

TorsionFile read_torsion_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_torsion_file(buffer.str());
}

TorsionInput to_torsion_input(const TorsionFile& file) {
  std::vector<Word> relators;
  // Validate names before parsing words so bad names are reported as such.
  Presentation::make(file.generators, {});
  for (const auto& src : file.relators) relators.push_back(parse_line_word(src, file.generators));
  TorsionInput input;
  input.presentation = Presentation::make(file.generators, std::move(relators));
  for (const auto& src : file.inclusion_words) {
    input.inclusion_words.push_back(parse_line_word(src, file.generators));
  }
  std::optional<AbelianizationMap> user_basis;
  if (file.basis) {
    AbelianizationMap basis;
    basis.basis_names = file.basis->names;
    for (const auto& [g, e] : file.basis->images) {
      if (!basis.images.emplace(g, e).second) {
        throw Error(ErrorKind::InvalidBasis, "generator '" + g + "' appears twice in [basis]");
      }
    }
    user_basis = std::move(basis);
  }
  input.abelianization = abelianize_presentation(input.presentation, user_basis);
  return input;
}

Json to_json(const BigInt& value) {
  if (fits_int64(value)) return static_cast<std::int64_t>(value);
  return value.str();
}

Json to_json(const TorsionClass& t, const std::vector<std::string>& names) {
  Json out;
  out["rank"] = t.rank();
  out["variables"] = names;
  out["text"] = render(t.representative(), names);
  Json terms = Json::array();
  for (const auto& [e, c] : t.representative().terms()) {
    Json term;
    term["exponent"] = exponent_json(e);
    term["coefficient"] = to_json(c);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  out["coefficient_sum"] = to_json(t.representative().coefficient_sum());
  return out;
}

Json to_json(const SupportSet& s) {
  Json out = Json::array();
  for (const auto& p : s.points) out.push_back(exponent_json(p));
  return out;
}

Json to_json(const LatticePolygon& p) {
  Json out;
  out["dimension"] = p.dimension;
  Json vertices = Json::array();
  for (const auto& v : p.vertices) vertices.push_back(point_json(v));
  out["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : p.edges) {
    Json edge;
    edge["direction"] = point_json(e.direction);
    edge["length"] = e.length;
    edges.push_back(std::move(edge));
  }
  out["edges"] = std::move(edges);
  out["edge_lengths"] = p.edge_length_multiset();
  out["normalized_area"] = p.normalized_area();
  out["lattice_points"] = p.lattice_points();
  return out;
}

Json to_json(const AffineMap2& m) {
  Json out;
  out["matrix"] = Json::array({Json::array({m.matrix[0][0], m.matrix[0][1]}),
                               Json::array({m.matrix[1][0], m.matrix[1][1]})});
  out["translation"] = point_json(m.translation);
  return out;
}

Json to_json(const EquivalenceVerdict& v) {
  Json out;
  out["kind"] = std::string(to_string(v.kind));
  out["reason"] = v.reason.empty() ? Json(nullptr) : Json(v.reason);
  if (v.witness) {
    Json w;
    w["matrix"] = v.witness->matrix;
    w["translation"] = exponent_json(v.witness->translation);
    w["sign"] = v.witness->sign;
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const GradedRanks& g) {
  Json out = Json::object();
  for (const auto& [i, r] : g.table()) out[std::to_string(i)] = to_json(r);
  return out;
}

Json to_json(const Error& e) {
  Json out;
  out["kind"] = std::string(to_string(e.kind()));
  out["message"] = e.what();
  if (e.position()) out["position"] = *e.position();
  return out;
}

Report cmd_torsion(const std::string& path) {
  Json command;
  command["name"] = "torsion";
  command["file"] = path;
  Report report;
  try {
    const Pipeline p = run_pipeline(path);
    Json& body = report.body;
    body["command"] = command;
    body["input"] = input_json(p.input);
    body["torsion"] = to_json(p.torsion, p.input.abelianization.basis_names);
    Json diagnostics = Json::array();
    Json plot_entry;
    plot_entry["label"] = path;
    add_geometry(body, plot_entry, p.torsion, diagnostics);
    body["centrally_symmetric"] = is_centrally_symmetric(p.torsion);
    body["diagnostics"] = std::move(diagnostics);
    report.plot["supports"] = Json::array({std::move(plot_entry)});
  } catch (const Error& e) {
    report.body = error_report(std::move(command), e);
  }
  return report;
}

Report cmd_compare(const std::string& path1, const std::string& path2) {
  Json command;
  command["name"] = "compare";
  command["files"] = Json::array({path1, path2});
  Report report;
  try {
    const Pipeline p1 = run_pipeline(path1);
    const Pipeline p2 = run_pipeline(path2);
    Json& body = report.body;
    body["command"] = command;
    body["torsion"] = Json::array({to_json(p1.torsion, p1.input.abelianization.basis_names),
                                   to_json(p2.torsion, p2.input.abelianization.basis_names)});
    body["verdict"] = to_json(compare_torsion(p1.torsion, p2.torsion));

    Json diagnostics = Json::array();
    Json polygons;
    Json plot_entries = Json::array();
    const Pipeline* pipelines[] = {&p1, &p2};
    std::vector<LatticePolygon> hulls;
    for (const Pipeline* p : pipelines) {
      Json geometry;
      Json plot_entry;
      plot_entry["label"] = p == &p1 ? path1 : path2;
      add_geometry(geometry, plot_entry, p->torsion, diagnostics);
      if (!geometry["polygon"].is_null()) hulls.push_back(newton_polytope(support(p->torsion)));
      plot_entries.push_back(std::move(plot_entry));
    }
    if (hulls.size() == 2) {
      const auto witness = polygon_affine_equivalent(hulls[0], hulls[1]);
      polygons["equivalent"] = witness.has_value();
      polygons["witness"] = witness ? to_json(*witness) : Json(nullptr);
      polygons["hulls"] = Json::array({to_json(hulls[0]), to_json(hulls[1])});
    } else {
      polygons["equivalent"] = nullptr;
      polygons["witness"] = nullptr;
      diagnostics.push_back("polygon comparison needs two nonzero classes of rank <= 2");
    }
    body["polygons"] = std::move(polygons);
    body["diagnostics"] = std::move(diagnostics);
    report.plot["supports"] = std::move(plot_entries);
  } catch (const Error& e) {
    report.body = error_report(std::move(command), e);
  }
  return report;
}

Report cmd_family(std::int64_t n, const std::string& surface) {
  Json command;
  command["name"] = "family";
  command["n"] = n;
  command["surface"] = surface;
  Report report;
  try {
    const lyon::LyonCase c{n, lyon::parse_surface(surface)};
    const lyon::FamilyResult r = lyon::run_family(c);
    const auto& names = r.input.abelianization.basis_names;
    Json& body = report.body;
    body["command"] = command;
    body["input"] = input_json(r.input);
    body["torsion"] = to_json(r.torsion, names);
    body["expected"] = to_json(r.expected, names);
    body["oracle_match"] = r.oracle_match;
    body["centrally_symmetric"] = r.centrally_symmetric;
    const auto [top, middle] = lyon::alexander_data(n);
    body["alexander"] = {{"top", top}, {"middle", middle}};
    Json diagnostics = Json::array();
    if (c.surface == lyon::Surface::SPrime) {
      diagnostics.push_back(r.centrally_symmetric
                                ? "computed from R+ words; central symmetry confirmed"
                                : "computed from R+ words; central symmetry NOT confirmed");
    }
    Json plot_entry;
    plot_entry["label"] = "n=" + std::to_string(n) + " " + surface;
    add_geometry(body, plot_entry, r.torsion, diagnostics);
    body["diagnostics"] = std::move(diagnostics);
    report.plot["supports"] = Json::array({std::move(plot_entry)});
  } catch (const Error& e) {
    report.body = error_report(std::move(command), e);
  }
  return report;
}

Report cmd_sfh_torus(std::int64_t p, std::int64_t q, std::int64_t n) {
  Json command;
  command["name"] = "sfh-torus";
  command["p"] = p;
  command["q"] = q;
  command["n"] = n;
  Report report;
  try {
    const GradedRanks ranks = torus_sfh(p, q, n);
    report.body["command"] = command;
    report.body["ranks"] = to_json(ranks);
    report.body["total"] = to_json(ranks.total());
  } catch (const Error& e) {
    report.body = error_report(std::move(command), e);
  }
  return report;
}

}  // namespace sutured::cli
