#include "hibi/suite.hpp"

#include <chrono>

namespace hibi {

namespace {

bool is_skip(ErrorCode c) {
  return c == ErrorCode::kCapExceeded || c == ErrorCode::kDegreeInfeasible ||
         c == ErrorCode::kBudgetExceeded;
}

struct WindowResult {
  Json json;
  std::vector<std::string> failures;
  double seconds = 0;
};

WindowResult run_window(const PlanarLattice& L, RankWindow w, const SuiteFlags& flags) {
  WindowResult res;
  Json& j = res.json;
  const std::string tag = "window " + to_string(w) + ": ";
  auto fail = [&](const std::string& what) { res.failures.push_back(tag + what); };
  const auto t0 = std::chrono::steady_clock::now();
  try {
    j["window"] = to_json(w);
    const auto gens_pts = generators(L, w);
    j["generators"] = gens_pts.size();
    const auto graph = bipartite_graph(L, w);
    const auto chordal = is_chordal_bipartite(graph);
    j["graph"] = Json{{"edges", graph.edges.size()}, {"chordal", chordal.chordal}};
    if (!chordal.chordal) fail("bipartite graph is not chordal bipartite");

    const auto poly = polyomino(L, w);
    const bool convex = check_convexity(poly);
    j["polyomino"] = Json{{"cells", poly.cells().size()},
                          {"connected", poly.connected()},
                          {"convex", convex}};
    if (!convex) fail("polyomino is not convex");
    const int dim = dimension(L, w);
    j["dimension"] = dim;

    MonomialMap map(L, w);
    if (flags.gb || flags.betti) {
      const auto gens =
          defining_ideal_generators(L, w, MonomialOrder(OrderKind::kRankLex, map.variables()));
      j["ideal_generators"] = gens.size();
      const GroebnerReport gb = flags.order
                                     ? buchberger(gens, MonomialOrder(*flags.order, map.variables()))
                                     : buchberger_auto(gens, map.variables());
      j["groebner"] = to_json(gb, map.variables(), flags.with_basis);
      if (!flags.order && !(gb.quadratic && gb.squarefree))
        fail("no candidate order gives a quadratic squarefree basis");
      if (gb.squarefree) {
        const int krull = krull_dimension_via_initial(gb, map.nvars());
        j["krull_dimension"] = krull;
        if (krull != dim) fail("dimension formula differs from the Krull dimension");
      }
      if (map.nvars() <= flags.fiber_cap_vars) {
        try {
          const auto cert =
              toric_fiber_oracle(map, gens, flags.fiber_degree, &gb, default_budget());
          j["fiber"] = Json{{"degree", flags.fiber_degree},
                            {"membership", cert.membership},
                            {"generation", cert.generation},
                            {"groebner", cert.groebner}};
          if (!cert.membership || !cert.generation || !cert.groebner)
            fail("fiber oracle rejects the generators or the basis");
        } catch (const Error& e) {
          if (!is_skip(e.code())) throw;
          j["fiber"] = Json{{"skipped", e.what()}};
        }
      } else {
        j["fiber"] = Json{{"skipped", "variable cap"}};
      }
      if (flags.betti) {
        BettiOptions bo = flags.classify_options.betti;
        bo.order = flags.order;
        bo.policy = flags.policy;
        try {
          j["betti"] = to_json(betti_numbers(gens, map, bo));
        } catch (const Error& e) {
          if (!is_skip(e.code())) throw;
          j["betti"] = Json{{"skipped", e.what()}};
        }
      }
    }
    if (flags.classify) {
      ClassifyOptions co = flags.classify_options;
      co.verify = co.verify || flags.verify;
      co.betti.policy = flags.policy;
      const auto v = classify_window(L, w, co);
      j["classification"] = to_json(v);
      if (v.disagreement) fail("classifier and oracle disagree");
    }
  } catch (const std::exception& e) {
    j["error"] = error_json(e)["error"];
    fail(std::string("error: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace

Json config_json(const SuiteFlags& flags) {
  Json c;
  c["windows"] = flags.all_windows ? Json("all") : flags.window ? to_json(*flags.window) : Json("full");
  c["proper_only"] = flags.proper_only;
  c["gb"] = flags.gb;
  c["betti"] = flags.betti;
  c["classify"] = flags.classify;
  c["verify"] = flags.verify;
  c["order"] = flags.order ? std::string(order_name(*flags.order)) : "auto";
  c["fiber_degree"] = flags.fiber_degree;
  c["field"] = flags.classify_options.betti.prime;
  c["cap_vars"] = flags.classify_options.betti.cap_vars;
  c["linrel_cap_vars"] = flags.classify_options.betti.linrel_cap_vars;
  c["degree_bound"] = "j <= number of variables";
  c["budget"] = default_budget();
  return c;
}

Json RunReport::to_json() const {
  Json j = stable;
  j["ok"] = ok();
  j["failures"] = failures;
  j["timings"] = timings;
  return j;
}

RunReport run_suite(const PlanarLattice& L, const SuiteFlags& flags) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.stable["schema"] = 1;
  rep.stable["tool"] = Json{{"name", "hibi_lab"}, {"version", kToolVersion}};
  rep.stable["config"] = config_json(flags);
  rep.stable["lattice"] = lattice_summary(L);

  if (L.rank() > 0) {
    const int full_dim = dimension(L, {0, L.rank()});
    rep.stable["full_dimension"] = full_dim;
    if (full_dim != L.rank() + 1)
      rep.failures.push_back("dimension of the full window is not rank + 1");
  }

  std::vector<RankWindow> windows;
  if (flags.all_windows)
    windows = all_windows(L, flags.proper_only);
  else if (flags.window)
    windows = {*flags.window};
  else if (L.rank() > 0)
    windows = {{0, L.rank()}};

  std::vector<WindowResult> results(windows.size());
  const auto count = static_cast<std::ptrdiff_t>(windows.size());
  if (flags.policy == ExecPolicy::kParallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < count; ++k)
      results[static_cast<std::size_t>(k)] = run_window(L, windows[static_cast<std::size_t>(k)], flags);
  } else {
    for (std::ptrdiff_t k = 0; k < count; ++k)
      results[static_cast<std::size_t>(k)] = run_window(L, windows[static_cast<std::size_t>(k)], flags);
  }

  Json per_window = Json::array();
  Json window_times = Json::array();
  std::size_t linear = 0, linrel = 0, disagreements = 0;
  for (auto& r : results) {
    if (r.json.contains("classification")) {
      const auto& c = r.json["classification"];
      if (c["linear_resolution"] == true) ++linear;
      if (c["linearly_related"] == true) ++linrel;
      if (c["disagreement"] == true) ++disagreements;
    }
    window_times.push_back(Json{{"window", r.json["window"]}, {"seconds", r.seconds}});
    per_window.push_back(std::move(r.json));
    for (auto& f : r.failures) rep.failures.push_back(std::move(f));
  }
  rep.stable["windows"] = per_window;

  if (flags.classify) {
    Json summary{{"windows", windows.size()},
                 {"linear_resolution", linear},
                 {"linearly_related", linrel},
                 {"disagreements", disagreements}};
    if (L.m() >= 2 && L.n() >= 2) {
      const bool lr = is_linearly_related_lattice(L);
      summary["lattice_linearly_related"] = lr;
      if (lr) {
        Json list = Json::array();
        for (RankWindow w : enumerate_linrel_windows(L)) list.push_back(to_json(w));
        summary["linearly_related_windows"] = list;
      }
    }
    rep.stable["summary"] = summary;
  }
  rep.timings["windows"] = window_times;
  rep.timings["total_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace hibi
