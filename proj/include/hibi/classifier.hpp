#pragma once

// Combinatorial decision procedures for linear resolutions and linearly
// related ideals of rank windows, with the Betti oracle as fallback and
// cross-check.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hibi/betti.hpp"
#include "hibi/window.hpp"

namespace hibi {

/// Empty: true. Connected: true iff the cells are one row or one column.
/// Disconnected or non-convex: nullopt.
std::optional<bool> has_linear_resolution_shape(const Polyomino& poly);

/// Shape data of a polyomino read in its tight bounding box
/// [(0,0),(m,n)] of the vertex set. Bottom row cells span [i1, i2),
/// top row [i3, i4), left column [j1, j2), right column [j3, j4).
struct ShapeProfile {
  Point origin;  // lower-left corner of the box in lattice coordinates
  int m = 0;
  int n = 0;
  /// (0,0), (m,0), (0,n), (m,n)
  std::array<bool, 4> corners{};
  int i1 = 0, i2 = 0, i3 = 0, i4 = 0;
  int j1 = 0, j2 = 0, j3 = 0, j4 = 0;
  bool connected = true;
  bool convex = true;
  /// Every cell with 1 <= x <= m-2, 1 <= y <= n-2 is present and the
  /// points (1,1), (m-1,1), (1,n-1), (m-1,n-1) are vertices.
  bool inner_rectangle = false;

  int missing_corners() const;
  /// x -> m - x
  ShapeProfile mirrored_x() const;
  /// y -> n - y
  ShapeProfile mirrored_y() const;
};

/// Requires a nonempty polyomino.
ShapeProfile shape_profile(const Polyomino& poly);

/// Throws kNotConvex or kDisconnected.
bool is_linearly_related_polyomino(const ShapeProfile& profile);

/// Throws kRankTooSmall when m < 2 or n < 2.
bool is_linearly_related_lattice(const PlanarLattice& lattice);

/// Corner data of a lattice whose corner (0,n) is missing:
/// j1 = max{j : (0,j) in L}, i1 = min{i : (i,n) in L}.
struct CornerNotch {
  int i1 = 0;
  int j1 = 0;
};
CornerNotch corner_notch(const PlanarLattice& lattice);

/// Windows with a linearly related ideal, read off the lattice corners.
/// Throws kPreconditionFailed unless the lattice ideal is linearly related.
std::vector<RankWindow> enumerate_linrel_windows(const PlanarLattice& lattice);

struct ProperWindowsReport {
  bool by_family = false;
  /// "chain+point", "N", or empty.
  std::string family;
  /// nullopt when some window could not be decided within the caps.
  std::optional<bool> extensional;
  std::optional<RankWindow> witness;
  std::size_t windows_checked = 0;
  std::size_t oracle_calls = 0;
  bool simple = false;
  bool agree() const { return extensional && *extensional == by_family; }
};

/// Families of join-irreducible posets whose proper windows all have linear
/// resolutions, checked by isomorphism, plus the extensional sweep over all
/// proper windows (shape test first, oracle for undecided shapes).
ProperWindowsReport all_proper_windows_linear(const PlanarLattice& lattice,
                                              const BettiOptions& options = {});

enum class ClassifyMode { kShapeFirst, kOracleOnly };

struct ClassifyOptions {
  ClassifyMode mode = ClassifyMode::kShapeFirst;
  /// Also run the oracle and compare.
  bool verify = false;
  BettiOptions betti;
  /// Test fixture: flips every combinatorial verdict.
  bool corrupt_classifier = false;
};

struct WindowVerdict {
  RankWindow window;
  std::size_t variables = 0;
  std::size_t generators = 0;
  std::optional<bool> linear_resolution;
  std::optional<bool> linearly_related;
  /// "trivial", "polyomino-shape", "polyomino-corners", "lattice-corners",
  /// "oracle" or "undecided".
  std::string linear_resolution_basis;
  std::string linearly_related_basis;
  /// Oracle verdicts when verification ran.
  std::optional<bool> oracle_linear_resolution;
  std::optional<bool> oracle_linearly_related;
  /// The gated notch clauses of the missing-corner window list fired.
  bool notch_clause = false;
  /// Disagreement that persisted after the rerun at the second prime.
  bool disagreement = false;
  std::vector<std::string> notes;
};

inline constexpr std::uint32_t kSecondPrime = 65537;

WindowVerdict classify_window(const PlanarLattice& lattice, RankWindow w,
                              const ClassifyOptions& options = {});

}  // namespace hibi
