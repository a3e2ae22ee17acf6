#include "hibi/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace hibi {

namespace {

[[noreturn]] void schema_error(const std::string& what, const std::string& pointer) {
  throw ParseError(what + " at " + (pointer.empty() ? "/" : pointer), std::nullopt, pointer);
}

int coordinate(const nlohmann::json& v, const std::string& pointer) {
  if (!v.is_number_integer()) schema_error("coordinate must be an integer", pointer);
  const auto x = v.get<long long>();
  if (x < 0 || x > 1'000'000) schema_error("coordinate out of range", pointer);
  return static_cast<int>(x);
}

std::string element_label(const nlohmann::json& v, const std::string& pointer) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  schema_error("poset element must be a string or an integer", pointer);
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

PlanarLattice parse_lattice(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte), e.byte, "");
  }
  if (!doc.is_object()) schema_error("expected an object", "");
  const bool has_points = doc.contains("points");
  const bool has_poset = doc.contains("poset");
  if (has_points == has_poset) schema_error("expected exactly one of \"points\" or \"poset\"", "");

  if (has_points) {
    const auto& pts = doc["points"];
    if (!pts.is_array()) schema_error("expected an array", "/points");
    std::vector<Point> points;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const std::string ptr = "/points/" + std::to_string(k);
      if (!pts[k].is_array() || pts[k].size() != 2) schema_error("expected [i, j]", ptr);
      points.push_back({coordinate(pts[k][0], ptr + "/0"), coordinate(pts[k][1], ptr + "/1")});
    }
    return validate_planar_lattice(std::move(points));
  }

  const auto& poset = doc["poset"];
  if (!poset.is_object()) schema_error("expected an object", "/poset");
  if (!poset.contains("elements") || !poset["elements"].is_array())
    schema_error("expected an array", "/poset/elements");
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < poset["elements"].size(); ++k)
    labels.push_back(element_label(poset["elements"][k], "/poset/elements/" + std::to_string(k)));
  std::vector<std::pair<std::string, std::string>> relations;
  if (poset.contains("relations")) {
    const auto& rel = poset["relations"];
    if (!rel.is_array()) schema_error("expected an array", "/poset/relations");
    for (std::size_t k = 0; k < rel.size(); ++k) {
      const std::string ptr = "/poset/relations/" + std::to_string(k);
      if (!rel[k].is_array() || rel[k].size() != 2) schema_error("expected [a, b]", ptr);
      relations.emplace_back(element_label(rel[k][0], ptr + "/0"),
                             element_label(rel[k][1], ptr + "/1"));
    }
  }
  return poset_ideals_to_planar(Poset(std::move(labels), relations));
}

PlanarLattice parse_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_lattice(text);
}

Json error_json(const std::exception& e) {
  Json err;
  if (const auto* he = dynamic_cast<const Error*>(&e)) {
    err["code"] = std::string(error_code_name(he->code()));
  } else {
    err["code"] = "InternalError";
  }
  err["message"] = e.what();
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    if (pe->offset()) err["offset"] = *pe->offset();
    if (!pe->pointer().empty()) err["pointer"] = pe->pointer();
  }
  if (const auto* le = dynamic_cast<const LatticeError*>(&e))
    err["witness"] = Json::array({to_json(le->witness().first), to_json(le->witness().second)});
  return Json{{"error", err}};
}

Json to_json(Point p) { return Json::array({p.i, p.j}); }

Json to_json(RankWindow w) { return Json::array({w.p, w.q}); }

Json to_json(const PlanarLattice& lattice) {
  Json pts = Json::array();
  for (Point p : lattice.points()) pts.push_back(to_json(p));
  return Json{{"points", pts}};
}

Json lattice_summary(const PlanarLattice& lattice) {
  Json s;
  s["size"] = lattice.size();
  s["m"] = lattice.m();
  s["n"] = lattice.n();
  s["rank"] = lattice.rank();
  const auto simple = is_simple(lattice);
  s["simple"] = simple.simple;
  s["violating_ranks"] = simple.violating_ranks;
  Json ji = Json::array();
  for (Point p : join_irreducible_points(lattice)) ji.push_back(to_json(p));
  s["join_irreducibles"] = ji;
  const Point off = lattice.reanchored_by();
  if (off.i != 0 || off.j != 0) s["reanchored_by"] = to_json(off);
  s["points"] = to_json(lattice)["points"];
  return s;
}

Json to_json(const Monomial& m, std::span<const Point> variables) {
  Json vars = Json::array();
  for (std::size_t v = 0; v < m.nvars(); ++v)
    if (m[v]) vars.push_back(Json::array({to_json(variables[v]), m[v]}));
  return Json{{"vars", vars}};
}

Json to_json(const Binomial& b, std::span<const Point> variables) {
  return Json{{"lead", to_json(b.lead, variables)},
              {"trail", to_json(b.trail, variables)},
              {"text", to_string(b, variables)}};
}

Json to_json(const GroebnerReport& gb, std::span<const Point> variables, bool with_basis) {
  Json j;
  j["order"] = std::string(order_name(gb.order));
  Json rejected = Json::array();
  for (OrderKind k : gb.rejected_orders) rejected.push_back(std::string(order_name(k)));
  j["rejected_orders"] = rejected;
  j["size"] = gb.basis.size();
  j["quadratic"] = gb.quadratic;
  j["squarefree"] = gb.squarefree;
  j["complete"] = gb.complete;
  j["spairs_processed"] = gb.spairs_processed;
  if (with_basis) {
    Json basis = Json::array();
    for (const auto& b : gb.basis) basis.push_back(to_json(b, variables));
    j["basis"] = basis;
  }
  return j;
}

Json to_json(const BettiTable& table) {
  Json j;
  j["convention"] = "ideal";
  j["prime"] = table.prime;
  j["nvars"] = table.nvars;
  j["i_max"] = table.i_max;
  j["j_max"] = table.j_max;
  j["strand_max"] = table.strand_max;
  j["bound_source"] = table.bound_source;
  Json entries = Json::array();
  for (const auto& [key, value] : table.entries)
    entries.push_back(Json{{"i", key.first}, {"j", key.second}, {"beta", value}});
  j["entries"] = entries;
  j["macaulay"] = format_macaulay(table);
  return j;
}

Json to_json(const FiberCertificate& cert) {
  Json levels = Json::array();
  for (const auto& l : cert.levels)
    levels.push_back(Json{{"degree", l.degree},
                          {"monomials", l.monomials},
                          {"fibers", l.fibers},
                          {"span_rank", l.span_rank},
                          {"generation", l.generation},
                          {"groebner", l.groebner}});
  return Json{{"membership", cert.membership},
              {"generation", cert.generation},
              {"groebner", cert.groebner},
              {"levels", levels}};
}

Json to_json(const ShapeProfile& sp) {
  return Json{{"origin", to_json(sp.origin)},
              {"m", sp.m},
              {"n", sp.n},
              {"corners", Json{{"(0,0)", sp.corners[0]},
                               {"(m,0)", sp.corners[1]},
                               {"(0,n)", sp.corners[2]},
                               {"(m,n)", sp.corners[3]}}},
              {"i", Json::array({sp.i1, sp.i2, sp.i3, sp.i4})},
              {"j", Json::array({sp.j1, sp.j2, sp.j3, sp.j4})},
              {"inner_rectangle", sp.inner_rectangle}};
}

Json to_json(const ChordalCertificate& cert) {
  Json j;
  j["chordal"] = cert.chordal;
  Json path = Json::array();
  for (Point e : cert.chordal ? cert.elimination : cert.chordless_cycle) path.push_back(to_json(e));
  j[cert.chordal ? "elimination" : "chordless_cycle"] = path;
  return j;
}

Json to_json(const WindowVerdict& v) {
  Json j;
  j["window"] = to_json(v.window);
  j["variables"] = v.variables;
  j["generators"] = v.generators;
  j["linear_resolution"] = optional_bool(v.linear_resolution);
  j["linear_resolution_basis"] = v.linear_resolution_basis;
  j["linearly_related"] = optional_bool(v.linearly_related);
  j["linearly_related_basis"] = v.linearly_related_basis;
  if (v.oracle_linear_resolution || v.oracle_linearly_related) {
    j["oracle"] = Json{{"linear_resolution", optional_bool(v.oracle_linear_resolution)},
                       {"linearly_related", optional_bool(v.oracle_linearly_related)}};
  }
  if (v.notch_clause) j["notch_clause"] = true;
  j["disagreement"] = v.disagreement;
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

}  // namespace hibi
