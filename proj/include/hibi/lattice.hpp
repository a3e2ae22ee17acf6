#pragma once

// Finite posets and planar distributive lattices (finite sublattices of N^2
// containing the origin whose comparabilities are realized by unit steps).

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hibi/error.hpp"

namespace hibi {

struct Point {
  int i = 0;
  int j = 0;

  int rank() const { return i + j; }
  friend auto operator<=>(const Point&, const Point&) = default;
};

inline bool leq(Point a, Point b) { return a.i <= b.i && a.j <= b.j; }
inline Point meet(Point a, Point b) { return {std::min(a.i, b.i), std::min(a.j, b.j)}; }
inline Point join(Point a, Point b) { return {std::max(a.i, b.i), std::max(a.j, b.j)}; }

std::string to_string(Point p);

/// A validation failure that carries the offending pair of points.
class LatticeError : public Error {
 public:
  LatticeError(ErrorCode code, const std::string& what, Point a, Point b)
      : Error(code, what), witness_(a, b) {}
  std::pair<Point, Point> witness() const { return witness_; }

 private:
  std::pair<Point, Point> witness_;
};

/// Finite poset on labelled elements; the order is stored as the full
/// reflexive-transitive relation.
class Poset {
 public:
  /// `relations` lists pairs (a, b) meaning a <= b; covers suffice.
  /// Throws kInvalidPoset on duplicate labels, unknown labels or cycles.
  Poset(std::vector<std::string> labels,
        const std::vector<std::pair<std::string, std::string>>& relations);
  Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }
  bool comparable(std::size_t a, std::size_t b) const {
    return leq_[a][b] || leq_[b][a];
  }
  /// Cover relations (a, b): a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Size of a largest antichain, computed by chain-cover matching.
  std::size_t width() const;
  /// A partition into width() chains, each listed bottom to top.
  std::vector<std::vector<std::size_t>> chain_partition() const;

 private:
  void close_and_check();

  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

bool isomorphic(const Poset& a, const Poset& b);

struct SimplicityReport {
  bool simple = true;
  std::vector<int> violating_ranks;
};

class PlanarLattice {
 public:
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  int m() const { return m_; }
  int n() const { return n_; }
  int rank() const { return m_ + n_; }
  bool contains(Point p) const {
    return p.i >= 0 && p.j >= 0 && p.i <= m_ && p.j <= n_ &&
           grid_[static_cast<std::size_t>(p.i) * (n_ + 1) + p.j];
  }
  /// Translation applied to the input to anchor it at the origin.
  Point reanchored_by() const { return offset_; }

  /// Swaps the two coordinates.
  PlanarLattice transposed() const;

  friend bool operator==(const PlanarLattice& a, const PlanarLattice& b) {
    return a.points_ == b.points_;
  }

 private:
  friend PlanarLattice validate_planar_lattice(std::vector<Point> points);

  std::vector<Point> points_;  // sorted lexicographically
  std::vector<bool> grid_;
  int m_ = 0;
  int n_ = 0;
  Point offset_;
};

/// Validates the lattice axioms and returns the normalized lattice. Inputs
/// whose bounding box does not start at the origin are translated.
PlanarLattice validate_planar_lattice(std::vector<Point> points);

/// Full grid [0,m] x [0,n].
PlanarLattice full_grid(int m, int n);

SimplicityReport is_simple(const PlanarLattice& lattice);

/// Induced subposet of points with exactly one lower cover. Labels are
/// the coordinates "(i,j)".
Poset join_irreducibles(const PlanarLattice& lattice);
/// Points of `join_irreducibles` in label order.
std::vector<Point> join_irreducible_points(const PlanarLattice& lattice);

/// Birkhoff image of a width <= 2 poset: the ideal a maps to
/// (|a meet C1|, |a meet C2|) for a fixed chain partition C1, C2, with the
/// longer chain (ties: smaller minimal label) as C1.
PlanarLattice poset_ideals_to_planar(const Poset& poset);

/// Isomorphism of lattices as posets (rank-preserving backtracking).
bool isomorphic(const PlanarLattice& a, const PlanarLattice& b);

}  // namespace hibi
