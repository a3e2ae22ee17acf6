#include "hibi/window.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace hibi {

std::string to_string(RankWindow w) {
  return "(" + std::to_string(w.p) + "," + std::to_string(w.q) + ")";
}

void check_window(const PlanarLattice& lattice, RankWindow w) {
  if (w.p < 0 || w.p >= w.q || w.q > lattice.rank())
    throw Error(ErrorCode::kInvalidWindow,
                "window " + to_string(w) + " violates 0 <= p < q <= " +
                    std::to_string(lattice.rank()));
}

bool is_proper(const PlanarLattice& lattice, RankWindow w) {
  return !(w.p == 0 && w.q == lattice.rank());
}

std::vector<RankWindow> all_windows(const PlanarLattice& lattice, bool proper_only) {
  std::vector<RankWindow> out;
  for (int p = 0; p <= lattice.rank(); ++p)
    for (int q = p + 1; q <= lattice.rank(); ++q) {
      RankWindow w{p, q};
      if (!proper_only || is_proper(lattice, w)) out.push_back(w);
    }
  return out;
}

std::vector<Point> generators(const PlanarLattice& lattice, RankWindow w) {
  check_window(lattice, w);
  std::vector<Point> out;
  for (Point a : lattice.points())
    if (w.p <= a.rank() && a.rank() <= w.q) out.push_back(a);
  std::sort(out.begin(), out.end(), [](Point a, Point b) {
    return std::pair(a.rank(), a.i) < std::pair(b.rank(), b.i);
  });
  return out;
}

// ---------------------------------------------------------------- graph

bool BipartiteGraph::has_edge(int s, int t) const {
  return std::find(edges.begin(), edges.end(), Point{s, t}) != edges.end();
}

BipartiteGraph bipartite_graph(const PlanarLattice& lattice, RankWindow w) {
  BipartiteGraph g;
  g.left = lattice.m() + 1;
  g.right = lattice.n() + 1;
  g.edges = generators(lattice, w);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

using Adjacency = std::vector<std::vector<bool>>;

Adjacency adjacency(const BipartiteGraph& g) {
  Adjacency adj(static_cast<std::size_t>(g.left),
                std::vector<bool>(static_cast<std::size_t>(g.right), false));
  for (Point e : g.edges) adj[e.i][e.j] = true;
  return adj;
}

bool bisimplicial(const Adjacency& adj, int s, int t) {
  const int left = static_cast<int>(adj.size());
  const int right = left == 0 ? 0 : static_cast<int>(adj[0].size());
  for (int x = 0; x < left; ++x) {
    if (!adj[x][t]) continue;
    for (int y = 0; y < right; ++y)
      if (adj[s][y] && !adj[x][y]) return false;
  }
  return true;
}

// Induced cycle of length >= 6 through vertices numbered left 0..L-1 and
// right L..L+R-1; the smallest vertex of the cycle is the DFS root.
std::vector<Point> find_chordless_cycle(const BipartiteGraph& g) {
  const int left = g.left;
  const int total = g.left + g.right;
  auto adj = adjacency(g);
  auto adjacent = [&](int a, int b) {
    if ((a < left) == (b < left)) return false;
    if (a >= left) std::swap(a, b);
    return static_cast<bool>(adj[a][b - left]);
  };
  std::vector<int> path;
  std::vector<bool> on(static_cast<std::size_t>(total), false);
  std::function<bool()> dfs = [&]() {
    const int last = path.back();
    const int root = path.front();
    for (int w = root + 1; w < total; ++w) {
      if (on[w] || !adjacent(last, w)) continue;
      bool chord = false;
      for (std::size_t k = 1; k + 1 < path.size() && !chord; ++k)
        chord = adjacent(path[k], w);
      if (chord) continue;
      if (path.size() >= 2 && adjacent(root, w)) {
        if (path.size() + 1 >= 6) {
          path.push_back(w);
          return true;
        }
        continue;
      }
      path.push_back(w);
      on[w] = true;
      if (dfs()) return true;
      on[w] = false;
      path.pop_back();
    }
    return false;
  };
  for (int root = 0; root < total; ++root) {
    path = {root};
    std::fill(on.begin(), on.end(), false);
    on[root] = true;
    if (dfs()) {
      std::vector<Point> cycle;
      for (std::size_t k = 0; k < path.size(); ++k) {
        int a = path[k], b = path[(k + 1) % path.size()];
        if (a >= left) std::swap(a, b);
        cycle.push_back({a, b - left});
      }
      return cycle;
    }
  }
  return {};
}

}  // namespace

ChordalCertificate is_chordal_bipartite(const BipartiteGraph& graph) {
  ChordalCertificate cert;
  auto adj = adjacency(graph);
  auto remaining = graph.edges;
  std::sort(remaining.begin(), remaining.end());
  while (!remaining.empty()) {
    auto it = std::find_if(remaining.begin(), remaining.end(), [&](Point e) {
      return bisimplicial(adj, e.i, e.j);
    });
    if (it == remaining.end()) {
      cert.chordal = false;
      cert.elimination.clear();
      cert.chordless_cycle = find_chordless_cycle(graph);
      return cert;
    }
    cert.elimination.push_back(*it);
    adj[it->i][it->j] = false;
    remaining.erase(it);
  }
  return cert;
}

// ---------------------------------------------------------------- polyomino

Polyomino::Polyomino(std::vector<Point> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  for (Point a : cells_)
    for (Point d : {Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}})
      vertices_.push_back({a.i + d.i, a.j + d.j});
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

  if (!cells_.empty()) {
    std::vector<bool> seen(cells_.size(), false);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
      Point a = cells_[todo.front()];
      todo.pop();
      for (Point d : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}) {
        auto it = std::lower_bound(cells_.begin(), cells_.end(), Point{a.i + d.i, a.j + d.j});
        if (it == cells_.end() || *it != Point{a.i + d.i, a.j + d.j}) continue;
        auto k = static_cast<std::size_t>(it - cells_.begin());
        if (!seen[k]) {
          seen[k] = true;
          ++reached;
          todo.push(k);
        }
      }
    }
    connected_ = reached == cells_.size();
  }
}

bool Polyomino::has_cell(Point a) const {
  return std::binary_search(cells_.begin(), cells_.end(), a);
}

bool Polyomino::has_vertex(Point v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

namespace {

std::vector<Polyomino::Run> runs(const std::vector<Point>& cells, bool by_row) {
  std::map<int, Polyomino::Run> acc;
  for (Point a : cells) {
    int line = by_row ? a.j : a.i;
    int pos = by_row ? a.i : a.j;
    auto [it, fresh] = acc.try_emplace(line, Polyomino::Run{line, pos, pos, 0});
    it->second.lo = std::min(it->second.lo, pos);
    it->second.hi = std::max(it->second.hi, pos);
    ++it->second.count;
  }
  std::vector<Polyomino::Run> out;
  for (const auto& [line, run] : acc) out.push_back(run);
  return out;
}

}  // namespace

std::vector<Polyomino::Run> Polyomino::row_runs() const { return runs(cells_, true); }
std::vector<Polyomino::Run> Polyomino::column_runs() const { return runs(cells_, false); }

Polyomino polyomino(const PlanarLattice& lattice, RankWindow w) {
  check_window(lattice, w);
  std::vector<Point> cells;
  for (Point a : lattice.points()) {
    if (a.rank() < w.p || a.rank() + 2 > w.q) continue;
    if (lattice.contains({a.i + 1, a.j}) && lattice.contains({a.i, a.j + 1}) &&
        lattice.contains({a.i + 1, a.j + 1}))
      cells.push_back(a);
  }
  return Polyomino(std::move(cells));
}

bool check_convexity(const Polyomino& poly) {
  for (const auto& runs : {poly.row_runs(), poly.column_runs()})
    for (const auto& r : runs)
      if (r.hi - r.lo + 1 != r.count) return false;
  return true;
}

int dimension(const PlanarLattice& lattice, RankWindow w) {
  return static_cast<int>(generators(lattice, w).size()) -
         static_cast<int>(polyomino(lattice, w).cells().size());
}

}  // namespace hibi
