#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hibi/corpus.hpp"
#include "oracles.hpp"

using namespace hibi;

namespace {

BipartiteGraph graph_of(int left, int right, std::vector<Point> edges) {
  BipartiteGraph g;
  g.left = left;
  g.right = right;
  g.edges = std::move(edges);
  return g;
}

}  // namespace

TEST_CASE("generators") {
  auto L = staircase_example();
  std::vector<Point> expect = {{3, 0}, {2, 1}, {1, 2}, {3, 1}, {2, 2}, {1, 3}, {4, 2},
                               {3, 2}, {2, 3}, {5, 2}, {4, 3}, {3, 3}, {2, 4}, {3, 4}};
  auto got = generators(L, {3, 7});
  CHECK(got.size() == 14);
  CHECK(std::set<Point>(got.begin(), got.end()) == std::set<Point>(expect.begin(), expect.end()));
  CHECK(std::is_sorted(got.begin(), got.end(), [](Point a, Point b) {
    return std::pair(a.rank(), a.i) < std::pair(b.rank(), b.i);
  }));

  CHECK(generators(full_grid(1, 1), {0, 2}).size() == 4);
  CHECK(generators(full_grid(2, 2), {2, 4}).size() == 6);
}

TEST_CASE("invalid windows") {
  auto L = full_grid(2, 2);
  for (RankWindow w : {RankWindow{2, 2}, RankWindow{3, 1}, RankWindow{0, 5}, RankWindow{-1, 2}}) {
    CAPTURE(to_string(w));
    try {
      generators(L, w);
      FAIL("expected InvalidWindow");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidWindow);
    }
  }
  CHECK(all_windows(L, false).size() == 10);
  CHECK(all_windows(L, true).size() == 9);
  CHECK_FALSE(is_proper(L, {0, 4}));
  CHECK(is_proper(L, {0, 3}));
}

TEST_CASE("bipartite graphs") {
  auto g = bipartite_graph(full_grid(1, 1), {0, 2});
  CHECK(g.edges.size() == 4);
  CHECK(g.has_edge(0, 0));
  CHECK(g.has_edge(1, 1));
  CHECK(bipartite_graph(staircase_example(), {3, 7}).edges.size() == 14);
  auto g13 = bipartite_graph(full_grid(2, 2), {1, 3});
  CHECK(g13.edges.size() == 7);
  CHECK(g13.left == 3);
  CHECK(g13.right == 3);
}

TEST_CASE("chordal bipartite recognition") {
  auto square = graph_of(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  auto c4 = is_chordal_bipartite(square);
  CHECK(c4.chordal);
  CHECK(c4.elimination.size() == 4);

  auto hexagon = graph_of(3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}});
  auto c6 = is_chordal_bipartite(hexagon);
  CHECK_FALSE(c6.chordal);
  CHECK(c6.chordless_cycle.size() == 6);
  CHECK(oracle::has_chordless_long_cycle(hexagon));

  // hexagon plus a chord s_0 t_1
  auto chorded = hexagon;
  chorded.edges.push_back({0, 1});
  CHECK(is_chordal_bipartite(chorded).chordal);
  CHECK_FALSE(oracle::has_chordless_long_cycle(chorded));

  // an 8-cycle
  auto octagon = graph_of(4, 4, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {0, 3}});
  auto c8 = is_chordal_bipartite(octagon);
  CHECK_FALSE(c8.chordal);
  CHECK(c8.chordless_cycle.size() == 8);
}

TEST_CASE("recognition agrees with induced-cycle search on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int L = 1 + static_cast<int>(rng() % 5), R = 1 + static_cast<int>(rng() % 5);
    BipartiteGraph g = graph_of(L, R, {});
    for (int s = 0; s < L; ++s)
      for (int t = 0; t < R; ++t)
        if (rng() % 5 < 2) g.edges.push_back({s, t});
    const auto cert = is_chordal_bipartite(g);
    CAPTURE(trial);
    CHECK(cert.chordal == !oracle::has_chordless_long_cycle(g));
    if (!cert.chordal) {
      // the witness is a cycle of graph edges with no chord
      const auto& cyc = cert.chordless_cycle;
      CHECK(cyc.size() >= 6);
      std::set<int> ls, rs;
      for (Point e : cyc) {
        CHECK(g.has_edge(e.i, e.j));
        ls.insert(e.i);
        rs.insert(e.j);
      }
      CHECK(ls.size() * 2 == cyc.size());
      CHECK(rs.size() * 2 == cyc.size());
      std::size_t induced = 0;
      for (int s : ls)
        for (int t : rs) induced += g.has_edge(s, t);
      CHECK(induced == cyc.size());
    }
  }
}

TEST_CASE("polyominoes") {
  auto c = polyomino(staircase({0, 0, 1}, {2, 2, 2}), {1, 3});
  CHECK(c.cells() == std::vector<Point>{{0, 1}});

  auto d = polyomino(full_grid(2, 2), {1, 3});
  CHECK(d.cells() == std::vector<Point>{{0, 1}, {1, 0}});
  CHECK_FALSE(d.connected());

  // (1,3) and (3,1) are not cells: (1,4) and (4,1) lie outside L
  auto f = polyomino(staircase_example(), {3, 7});
  std::vector<Point> expect = {{1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}};
  std::sort(expect.begin(), expect.end());
  CHECK(f.cells() == expect);
  CHECK(f.cells() == oracle::cells(staircase_example(), {3, 7}));
  CHECK(f.connected());
  CHECK(check_convexity(f));
}

TEST_CASE("convexity") {
  CHECK_FALSE(check_convexity(Polyomino({{0, 0}, {2, 0}})));
  CHECK(check_convexity(Polyomino(std::vector<Point>{})));
  CHECK(check_convexity(Polyomino({{0, 0}, {1, 0}, {1, 1}})));
  // an L-tromino is convex, a U is not
  CHECK_FALSE(check_convexity(Polyomino({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}})));
  // a ring: rows 0 and 2 full, row 1 has a hole
  CHECK_FALSE(check_convexity(
      Polyomino({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}})));
}

TEST_CASE("dimension") {
  CHECK(dimension(full_grid(5, 4), {0, 9}) == 10);
  CHECK(dimension(staircase_example(), {3, 7}) == 9);
  CHECK(dimension(full_grid(1, 1), {0, 2}) == 3);
}

TEST_CASE("window invariants over a corpus") {
  CorpusSpec spec;
  spec.seed = 3;
  spec.count = 40;
  for (const auto& e : generate_corpus(spec)) {
    const auto& L = e.lattice;
    CAPTURE(e.name);
    if (L.rank() > 0) CHECK(dimension(L, {0, L.rank()}) == L.rank() + 1);
    for (RankWindow w : all_windows(L, false)) {
      CAPTURE(to_string(w));
      auto gens = generators(L, w);
      auto g = bipartite_graph(L, w);
      CHECK(g.edges.size() == gens.size());
      CHECK(is_chordal_bipartite(g).chordal);
      if (g.left + g.right <= 14) CHECK_FALSE(oracle::has_chordless_long_cycle(g));
      auto P = polyomino(L, w);
      CHECK(P.cells() == oracle::cells(L, w));
      CHECK(check_convexity(P));
      std::set<Point> gs(gens.begin(), gens.end());
      for (Point v : P.vertices()) CHECK(gs.count(v));
    }
  }
}
