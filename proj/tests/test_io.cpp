#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hibi/corpus.hpp"
#include "hibi/render.hpp"
#include "hibi/suite.hpp"

using namespace hibi;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string golden_path(const std::string& name) { return std::string(HIBI_GOLDEN_DIR) + "/" + name; }

// HIBI_UPDATE_GOLDEN=1 rewrites the file instead of comparing.
void check_golden(const std::string& name, const std::string& actual) {
  if (std::getenv("HIBI_UPDATE_GOLDEN")) {
    std::ofstream(golden_path(name)) << actual;
    return;
  }
  std::ifstream in(golden_path(name));
  REQUIRE_MESSAGE(in, "missing golden file " << name);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == actual);
}

}  // namespace

TEST_CASE("parse points") {
  auto L = parse_lattice(R"({"points": [[0,0],[1,0],[0,1],[1,1]]})");
  CHECK(L == full_grid(1, 1));
}

TEST_CASE("parse posets") {
  auto L = parse_lattice(
      R"({"poset": {"elements": ["a","b","c","x"], "relations": [["a","b"],["b","c"]]}})");
  CHECK(isomorphic(L, full_grid(3, 1)));
  auto M = parse_lattice(R"({"poset": {"elements": [1, 2], "relations": []}})");
  CHECK(isomorphic(M, full_grid(1, 1)));
}

TEST_CASE("parse errors") {
  try {
    parse_lattice(R"({"points": [[0,0],[1,0]],,})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.offset().has_value());
    CHECK(*e.offset() > 0);
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  try {
    parse_lattice(R"({"points": [[0,0],[1,"x"]]})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.pointer() == "/points/1/1");
  }
  try {
    parse_lattice(R"({"lattice": []})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::kParseError);
  }
  // validation errors pass through unchanged
  try {
    parse_lattice(R"({"points": [[0,0],[1,0],[0,1]]})");
    FAIL("expected NotJoinClosed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotJoinClosed);
    auto j = error_json(e);
    CHECK(j["error"]["code"] == "NotJoinClosed");
    CHECK(j["error"].contains("witness"));
  }
}

TEST_CASE("serialization round trip of points") {
  auto L = staircase_example();
  auto back = parse_lattice(to_json(L).dump());
  CHECK(back == L);
}

TEST_CASE("corpus") {
  CorpusSpec one;
  one.count = 1;
  one.families = {Family::kFullGrid};
  one.min_m = one.max_m = 2;
  one.min_n = one.max_n = 2;
  auto c = generate_corpus(one);
  REQUIRE(c.size() == 1);
  CHECK(c[0].lattice == full_grid(2, 2));

  CorpusSpec seven;
  seven.seed = 7;
  seven.families = {Family::kFullGrid, Family::kStaircase, Family::kRandomPoset};
  auto s = generate_corpus(seven);
  CHECK(s.size() == 10);
  for (const auto& e : s) CHECK_NOTHROW(validate_planar_lattice(e.lattice.points()));

  CorpusSpec all;
  all.seed = 7;
  auto a = generate_corpus(all);
  auto b = generate_corpus(all);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].name == b[k].name);
    CHECK(a[k].lattice == b[k].lattice);
  }
  bool has_figure = false, has_n = false, has_chain = false;
  for (const auto& e : a) {
    has_figure |= e.lattice == staircase_example();
    has_n |= e.name == "n-poset";
    has_chain |= e.family == Family::kLinearFamilies && e.name.rfind("chain-plus-point", 0) == 0;
  }
  CHECK(has_figure);
  CHECK(has_n);
  CHECK(has_chain);
  for (auto f : {Family::kNamed, Family::kLinearFamilies, Family::kFullGrid, Family::kStaircase,
                 Family::kRandomPoset})
    CHECK(parse_family(family_name(f)) == f);
}

TEST_CASE("render") {
  auto svg = render_figure(staircase_example(), RankWindow{3, 7}, FigureFormat::kSvg);
  CHECK(count_of(svg, "class=\"generator\"") == 14);
  CHECK(count_of(svg, "class=\"rank-3\"") == 1);
  CHECK(count_of(svg, "class=\"rank-7\"") == 1);
  CHECK(count_of(svg, "<line class=\"rank-") == 2);
  CHECK(count_of(svg, "stroke-dasharray") == 1);
  CHECK(count_of(svg, "<rect x=") == 5);
  CHECK(svg == render_figure(staircase_example(), RankWindow{3, 7}, FigureFormat::kSvg));

  auto empty = render_figure(full_grid(2, 2), RankWindow{0, 1}, FigureFormat::kSvg);
  CHECK(count_of(empty, "<rect x=") == 0);

  auto row = render_figure(full_grid(3, 1), RankWindow{0, 4}, FigureFormat::kAscii);
  CHECK(count_of(row, "###") == 3);
  check_golden("staircase_3_7.txt",
               render_figure(staircase_example(), RankWindow{3, 7}, FigureFormat::kAscii));
}

TEST_CASE("suite report on the staircase example") {
  SuiteFlags flags;
  flags.window = RankWindow{3, 7};
  flags.classify = true;
  auto rep = run_suite(staircase_example(), flags);
  CHECK(rep.ok());
  const auto& w = rep.stable["windows"][0];
  CHECK(w["generators"] == 14);
  CHECK(w["dimension"] == 9);
  CHECK(w["krull_dimension"] == 9);
  CHECK(w["groebner"]["quadratic"] == true);
  CHECK(w["classification"]["linear_resolution"] == false);
  check_golden("suite_staircase_3_7.json", rep.stable.dump(2) + "\n");

  // deterministic across runs and policies
  auto again = run_suite(staircase_example(), flags);
  CHECK(again.stable.dump() == rep.stable.dump());
  flags.policy = ExecPolicy::kSerial;
  CHECK(run_suite(staircase_example(), flags).stable.dump() == rep.stable.dump());
}

TEST_CASE("suite over all windows of the 3x3 grid") {
  SuiteFlags flags;
  flags.all_windows = true;
  flags.classify = true;
  flags.verify = true;
  flags.betti = true;
  auto rep = run_suite(full_grid(2, 2), flags);
  CHECK(rep.ok());
  CHECK(rep.stable["windows"].size() == 10);
  const auto& list = rep.stable["summary"]["linearly_related_windows"];
  std::set<std::pair<int, int>> got;
  for (const auto& w : list) got.insert({w[0].get<int>(), w[1].get<int>()});
  CHECK(got == std::set<std::pair<int, int>>{{0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}});
  check_golden("suite_grid_2x2.json", rep.stable.dump(2) + "\n");

  flags.classify_options.corrupt_classifier = true;
  auto bad = run_suite(full_grid(2, 2), flags);
  CHECK_FALSE(bad.ok());
}
