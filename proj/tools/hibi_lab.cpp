// hibi_lab: command-line front end for the rank-window toolkit.
//
// JSON on stdout, diagnostics on stderr. Exit codes: 0 success, 1 a check
// or expectation failed, 2 invalid input, 3 a compute cap was hit.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "hibi/corpus.hpp"
#include "hibi/render.hpp"
#include "hibi/suite.hpp"

using namespace hibi;

namespace {

struct Common {
  std::string input;
  std::string grid;
  std::string window;
  bool all_windows = false;
  bool proper_only = false;
  std::string order = "auto";
  std::uint32_t field = 32003;
  std::size_t cap_vars = 12;
  int jmax = -1;
  std::string out;
  bool text = false;
};

std::pair<int, int> parse_pair(const std::string& s, const char* what) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    const int a = std::stoi(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(s);
    const std::string rest = s.substr(comma + 1);
    const int b = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidInput, std::string(what) + " must look like a,b: " + s);
  }
}

PlanarLattice load(const Common& c) {
  if (!c.grid.empty()) {
    auto [m, n] = parse_pair(c.grid, "--grid");
    if (m < 0 || n < 0) throw Error(ErrorCode::kInvalidInput, "--grid sizes must be >= 0");
    return full_grid(m, n);
  }
  if (c.input.empty()) throw Error(ErrorCode::kInvalidInput, "no input (file, - or --grid)");
  return parse_input(c.input);
}

std::vector<RankWindow> windows_of(const PlanarLattice& L, const Common& c) {
  if (c.all_windows) return all_windows(L, c.proper_only);
  if (!c.window.empty()) {
    auto [p, q] = parse_pair(c.window, "--window");
    RankWindow w{p, q};
    check_window(L, w);
    return {w};
  }
  if (L.rank() == 0) return {};
  return {{0, L.rank()}};
}

std::optional<OrderKind> order_of(const Common& c) {
  if (c.order == "auto") return std::nullopt;
  auto k = parse_order(c.order);
  if (!k) throw Error(ErrorCode::kInvalidInput, "unknown order " + c.order);
  return k;
}

BettiOptions betti_options(const Common& c) {
  BettiOptions o;
  o.prime = c.field;
  o.cap_vars = c.cap_vars;
  o.j_max = c.jmax;
  o.order = order_of(c);
  return o;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// One JSON document for one window, an array for several.
void emit_windows(const Json& items, bool several) { emit(several ? items : items.at(0)); }

void write_out(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kInvalidInput, "cannot write " + path);
  f << body;
}

void add_input(CLI::App* cmd, Common& c) {
  cmd->add_option("input", c.input, "lattice JSON file, or - for stdin");
  cmd->add_option("--grid", c.grid, "use the full grid [0,m]x[0,n]: m,n");
}

void add_windows(CLI::App* cmd, Common& c) {
  cmd->add_option("--window", c.window, "rank window p,q");
  cmd->add_flag("--all-windows", c.all_windows, "every valid window");
  cmd->add_flag("--proper-only", c.proper_only, "exclude (0, rank L)");
}

int exit_code_for(const std::exception& e) {
  if (const auto* he = dynamic_cast<const Error*>(&e)) {
    switch (he->code()) {
      case ErrorCode::kCapExceeded:
      case ErrorCode::kBudgetExceeded:
      case ErrorCode::kDegreeInfeasible:
        return 3;
      case ErrorCode::kOracleInconsistency:
      case ErrorCode::kDisagreement:
        return 1;
      default:
        return 2;
    }
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-bounded Hibi subrings of planar distributive lattices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("hibi_lab ") + kToolVersion);
  Common c;
  int rc = 0;

  auto* validate = app.add_subcommand("validate", "validate a lattice and summarize it");
  add_input(validate, c);

  auto* gens = app.add_subcommand("generators", "generator points of a window");
  add_input(gens, c);
  add_windows(gens, c);

  auto* graph = app.add_subcommand("graph", "bipartite graph and chordality certificate");
  add_input(graph, c);
  add_windows(graph, c);

  auto* poly = app.add_subcommand("polyomino", "cells of a window and their shape");
  add_input(poly, c);
  add_windows(poly, c);

  auto* dim = app.add_subcommand("dim", "dimension from cells and from the initial ideal");
  add_input(dim, c);
  add_windows(dim, c);

  auto* gb = app.add_subcommand("gb", "Groebner basis of the defining ideal");
  add_input(gb, c);
  add_windows(gb, c);
  gb->add_option("--order", c.order, "rank-lex|rank-revlex|lex|revlex|auto");
  gb->add_flag("--text", c.text, "print the basis as text");

  auto* betti = app.add_subcommand("betti", "graded Betti numbers mod p");
  add_input(betti, c);
  add_windows(betti, c);
  betti->add_option("--order", c.order, "order for the Groebner basis");
  betti->add_option("--field", c.field, "prime characteristic");
  betti->add_option("--cap-vars", c.cap_vars, "largest variable count");
  betti->add_option("--jmax", c.jmax, "largest internal degree");
  betti->add_flag("--text", c.text, "print Macaulay-style tables");

  bool expect_theorem = false, verify = false, oracle_only = false, corrupt = false;
  auto* classify = app.add_subcommand("classify", "linear resolution and linear relations");
  add_input(classify, c);
  add_windows(classify, c);
  classify->add_option("--field", c.field, "prime characteristic");
  classify->add_option("--cap-vars", c.cap_vars, "variable cap for the resolution oracle");
  classify->add_flag("--verify", verify, "also run the oracle and compare");
  classify->add_flag("--oracle-only", oracle_only, "skip the combinatorial criteria");
  classify->add_flag("--expect-theorem", expect_theorem,
                     "exit nonzero when classifier and oracle disagree");
  classify->add_flag("--corrupt-classifier", corrupt)->group("");

  auto* enumerate = app.add_subcommand("enumerate-windows",
                                       "windows with a linearly related ideal, from the corners");
  add_input(enumerate, c);

  std::string format = "svg";
  auto* render = app.add_subcommand("render", "draw the lattice, window band and cells");
  add_input(render, c);
  render->add_option("--window", c.window, "rank window p,q");
  render->add_option("--format", format, "svg|ascii")->check(CLI::IsMember({"svg", "ascii"}));
  render->add_option("--out", c.out, "output file (default stdout)");

  CorpusSpec spec;
  std::vector<std::string> families;
  std::string msize, nsize;
  auto* corpus = app.add_subcommand("corpus", "generate a deterministic lattice corpus");
  corpus->add_option("--seed", spec.seed, "random seed");
  corpus->add_option("--count", spec.count, "number of random lattices");
  corpus->add_option("--family", families,
                     "named|linear-families|full-grid|staircase|random-poset");
  corpus->add_option("--m", msize, "range lo,hi for m");
  corpus->add_option("--n", nsize, "range lo,hi for n");
  corpus->add_option("--out", c.out, "output file (default stdout)");

  SuiteFlags flags;
  bool no_gb = false;
  auto* suite = app.add_subcommand("suite", "all modules with cross-checks");
  add_input(suite, c);
  add_windows(suite, c);
  suite->add_option("--order", c.order, "order for the Groebner basis");
  suite->add_option("--field", c.field, "prime characteristic");
  suite->add_option("--cap-vars", c.cap_vars, "variable cap for the resolution oracle");
  suite->add_option("--jmax", c.jmax, "largest internal degree");
  suite->add_flag("--no-gb", no_gb, "skip Groebner bases");
  suite->add_flag("--basis", flags.with_basis, "include bases in the report");
  suite->add_flag("--betti", flags.betti, "Betti tables");
  suite->add_flag("--classify", flags.classify, "classification");
  suite->add_flag("--verify", flags.verify, "oracle cross-check of every verdict");
  suite->add_option("--out", c.out, "output file (default stdout)");
  suite->add_flag("--corrupt-classifier", corrupt)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*corpus) {
      if (!families.empty()) {
        spec.families.clear();
        for (const auto& f : families) {
          auto fam = parse_family(f);
          if (!fam) throw Error(ErrorCode::kInvalidInput, "unknown family " + f);
          spec.families.push_back(*fam);
        }
      }
      if (!msize.empty()) std::tie(spec.min_m, spec.max_m) = parse_pair(msize, "--m");
      if (!nsize.empty()) std::tie(spec.min_n, spec.max_n) = parse_pair(nsize, "--n");
      Json list = Json::array();
      for (const auto& e : generate_corpus(spec)) {
        Json item{{"name", e.name}, {"family", std::string(family_name(e.family))}};
        item["points"] = to_json(e.lattice)["points"];
        list.push_back(item);
      }
      write_out(c.out, Json{{"schema", 1}, {"seed", spec.seed}, {"lattices", list}}.dump(2) + "\n");
      return 0;
    }

    const PlanarLattice L = load(c);

    if (*validate) {
      emit(Json{{"schema", 1}, {"valid", true}, {"lattice", lattice_summary(L)}});
    } else if (*gens) {
      const auto ws = windows_of(L, c);
      Json items = Json::array();
      for (RankWindow w : ws) {
        Json pts = Json::array();
        for (Point p : generators(L, w)) pts.push_back(to_json(p));
        items.push_back(Json{{"window", to_json(w)}, {"count", pts.size()}, {"points", pts}});
      }
      emit_windows(items, ws.size() != 1);
    } else if (*graph) {
      const auto ws = windows_of(L, c);
      Json items = Json::array();
      for (RankWindow w : ws) {
        const auto g = bipartite_graph(L, w);
        Json edges = Json::array();
        for (Point e : g.edges) edges.push_back(to_json(e));
        items.push_back(Json{{"window", to_json(w)},
                             {"left", g.left},
                             {"right", g.right},
                             {"edges", edges},
                             {"certificate", to_json(is_chordal_bipartite(g))}});
      }
      emit_windows(items, ws.size() != 1);
    } else if (*poly) {
      const auto ws = windows_of(L, c);
      Json items = Json::array();
      for (RankWindow w : ws) {
        const auto P = polyomino(L, w);
        Json cells = Json::array();
        for (Point a : P.cells()) cells.push_back(to_json(a));
        Json item{{"window", to_json(w)},
                  {"cells", cells},
                  {"connected", P.connected()},
                  {"convex", check_convexity(P)}};
        if (!P.empty()) item["shape"] = to_json(shape_profile(P));
        auto lin = has_linear_resolution_shape(P);
        item["linear_resolution_shape"] = lin ? Json(*lin) : Json("undecided");
        items.push_back(item);
      }
      emit_windows(items, ws.size() != 1);
    } else if (*dim) {
      const auto ws = windows_of(L, c);
      Json items = Json::array();
      for (RankWindow w : ws) {
        MonomialMap map(L, w);
        const auto g = defining_ideal_generators(
            L, w, MonomialOrder(OrderKind::kRankLex, map.variables()));
        const auto basis = buchberger_auto(g, map.variables());
        const int d = dimension(L, w);
        Json item{{"window", to_json(w)}, {"dimension", d}};
        if (basis.squarefree) {
          const int k = krull_dimension_via_initial(basis, map.nvars());
          item["krull_dimension"] = k;
          item["agree"] = k == d;
          if (k != d) rc = 1;
        }
        items.push_back(item);
      }
      emit_windows(items, ws.size() != 1);
    } else if (*gb) {
      const auto ws = windows_of(L, c);
      Json items = Json::array();
      for (RankWindow w : ws) {
        MonomialMap map(L, w);
        const auto g = defining_ideal_generators(
            L, w, MonomialOrder(OrderKind::kRankLex, map.variables()));
        const auto order = order_of(c);
        const auto basis = order ? buchberger(g, MonomialOrder(*order, map.variables()))
                                 : buchberger_auto(g, map.variables());
        if (c.text) {
          std::cerr << "window " << to_string(w) << ", order " << order_name(basis.order) << '\n';
          for (const auto& b : basis.basis) std::cerr << "  " << to_string(b, map.variables()) << '\n';
        }
        Json item{{"window", to_json(w)}};
        item["groebner"] = to_json(basis, map.variables(), true);
        items.push_back(item);
      }
      emit_windows(items, ws.size() != 1);
    } else if (*betti) {
      const auto ws = windows_of(L, c);
      Json items = Json::array();
      for (RankWindow w : ws) {
        MonomialMap map(L, w);
        const auto g = defining_ideal_generators(
            L, w, MonomialOrder(OrderKind::kRankLex, map.variables()));
        const auto table = betti_numbers(g, map, betti_options(c));
        if (c.text) std::cerr << "window " << to_string(w) << '\n' << format_macaulay(table);
        items.push_back(Json{{"window", to_json(w)}, {"betti", to_json(table)}});
      }
      emit_windows(items, ws.size() != 1);
    } else if (*classify) {
      ClassifyOptions co;
      co.mode = oracle_only ? ClassifyMode::kOracleOnly : ClassifyMode::kShapeFirst;
      co.verify = verify || expect_theorem;
      co.betti = betti_options(c);
      co.corrupt_classifier = corrupt;
      const auto ws = windows_of(L, c);
      Json items = Json::array();
      std::size_t disagreements = 0;
      std::cerr << "window      vars  lin.res  basis              lin.rel  basis\n";
      for (RankWindow w : ws) {
        const auto v = classify_window(L, w, co);
        if (v.disagreement) ++disagreements;
        auto yn = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "?"; };
        std::string label = to_string(w);
        label.resize(12, ' ');
        std::string lb = v.linear_resolution_basis;
        lb.resize(19, ' ');
        std::fprintf(stderr, "%s%4zu  %-7s  %s%-7s  %s%s\n", label.c_str(), v.variables,
                     yn(v.linear_resolution), lb.c_str(), yn(v.linearly_related),
                     v.linearly_related_basis.c_str(), v.disagreement ? "  DISAGREE" : "");
        items.push_back(to_json(v));
      }
      emit(Json{{"schema", 1},
                {"verdicts", items},
                {"summary", Json{{"windows", ws.size()}, {"disagreements", disagreements}}}});
      if (expect_theorem && disagreements > 0) {
        std::cerr << "classifier and oracle disagree on " << disagreements << " window(s)\n";
        rc = 1;
      }
    } else if (*enumerate) {
      Json list = Json::array();
      for (RankWindow w : enumerate_linrel_windows(L)) list.push_back(to_json(w));
      emit(Json{{"schema", 1}, {"windows", list}});
    } else if (*render) {
      std::optional<RankWindow> w;
      if (!c.window.empty()) {
        auto [p, q] = parse_pair(c.window, "--window");
        w = RankWindow{p, q};
      }
      write_out(c.out, render_figure(L, w, format == "svg" ? FigureFormat::kSvg
                                                           : FigureFormat::kAscii));
    } else if (*suite) {
      if (!c.window.empty()) {
        auto [p, q] = parse_pair(c.window, "--window");
        flags.window = RankWindow{p, q};
        check_window(L, *flags.window);
      }
      flags.all_windows = c.all_windows;
      flags.proper_only = c.proper_only;
      flags.gb = !no_gb;
      flags.order = order_of(c);
      flags.classify_options.betti = betti_options(c);
      flags.classify_options.corrupt_classifier = corrupt;
      const auto rep = run_suite(L, flags);
      write_out(c.out, rep.to_json().dump(2) + "\n");
      for (const auto& f : rep.failures) std::cerr << f << '\n';
      if (!rep.ok()) rc = 1;
    }
  } catch (const std::exception& e) {
    std::cerr << error_json(e).dump() << '\n';
    return exit_code_for(e);
  }
  return rc;
}
