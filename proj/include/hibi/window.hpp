#pragma once

// Objects attached to a lattice L and a rank window (p, q): the generator
// points, the bipartite graph whose edge ring is the subring, and the
// polyomino of unit cells lying inside the window.

#include <vector>

#include "hibi/lattice.hpp"

namespace hibi {

struct RankWindow {
  int p = 0;
  int q = 0;

  friend auto operator<=>(const RankWindow&, const RankWindow&) = default;
};

std::string to_string(RankWindow w);

/// Throws kInvalidWindow unless 0 <= p < q <= rank L.
void check_window(const PlanarLattice& lattice, RankWindow w);
bool is_proper(const PlanarLattice& lattice, RankWindow w);
/// Every valid window in (p, q) lexicographic order.
std::vector<RankWindow> all_windows(const PlanarLattice& lattice, bool proper_only);

/// Lattice points with p <= i + j <= q, sorted by (rank, i).
std::vector<Point> generators(const PlanarLattice& lattice, RankWindow w);

/// Bipartite graph on s_0..s_m and t_0..t_n with one edge {s_i, t_j}
/// per generator point (i, j).
struct BipartiteGraph {
  int left = 0;   // number of s vertices, m + 1
  int right = 0;  // number of t vertices, n + 1
  std::vector<Point> edges;  // (i, j) = {s_i, t_j}

  bool has_edge(int s, int t) const;
};

BipartiteGraph bipartite_graph(const PlanarLattice& lattice, RankWindow w);

struct ChordalCertificate {
  bool chordal = true;
  /// Bisimplicial edges in elimination order (when chordal).
  std::vector<Point> elimination;
  /// Edges of a chordless cycle of length >= 6 in cycle order (when not).
  std::vector<Point> chordless_cycle;
};

/// Chordal bipartite recognition by repeated removal of bisimplicial edges.
ChordalCertificate is_chordal_bipartite(const BipartiteGraph& graph);

class Polyomino {
 public:
  Polyomino() = default;
  /// Arbitrary cell set, given by lower-left corners.
  explicit Polyomino(std::vector<Point> cells);

  const std::vector<Point>& cells() const { return cells_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  bool has_cell(Point a) const;
  bool has_vertex(Point v) const;
  bool empty() const { return cells_.empty(); }
  /// Edge-adjacency connectivity; the empty polyomino counts as connected.
  bool connected() const { return connected_; }

  struct Run {
    int line;  // row index j, or column index i
    int lo;
    int hi;
    int count;
  };
  /// Per row j: extent [lo, hi] of the first coordinates of cells.
  std::vector<Run> row_runs() const;
  /// Per column i: extent [lo, hi] of the second coordinates of cells.
  std::vector<Run> column_runs() const;

 private:
  std::vector<Point> cells_;     // sorted
  std::vector<Point> vertices_;  // sorted
  bool connected_ = true;
};

/// Cells [a, a + (1,1)] with all four corners in L and p <= rank a,
/// rank a + 2 <= q.
Polyomino polyomino(const PlanarLattice& lattice, RankWindow w);

bool check_convexity(const Polyomino& poly);

/// |generators| - |cells|.
int dimension(const PlanarLattice& lattice, RankWindow w);

}  // namespace hibi
