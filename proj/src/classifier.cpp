#include "hibi/classifier.hpp"

#include <algorithm>
#include <set>

namespace hibi {

std::optional<bool> has_linear_resolution_shape(const Polyomino& poly) {
  if (poly.empty()) return true;
  if (!poly.connected() || !check_convexity(poly)) return std::nullopt;
  const auto& cells = poly.cells();
  const bool one_row = std::all_of(cells.begin(), cells.end(),
                                   [&](Point c) { return c.j == cells.front().j; });
  const bool one_column = std::all_of(cells.begin(), cells.end(),
                                      [&](Point c) { return c.i == cells.front().i; });
  return one_row || one_column;
}

int ShapeProfile::missing_corners() const {
  return static_cast<int>(std::count(corners.begin(), corners.end(), false));
}

ShapeProfile ShapeProfile::mirrored_x() const {
  ShapeProfile r = *this;
  r.corners = {corners[1], corners[0], corners[3], corners[2]};
  r.i1 = m - i2;
  r.i2 = m - i1;
  r.i3 = m - i4;
  r.i4 = m - i3;
  r.j1 = j3;
  r.j2 = j4;
  r.j3 = j1;
  r.j4 = j2;
  return r;
}

ShapeProfile ShapeProfile::mirrored_y() const {
  ShapeProfile r = *this;
  r.corners = {corners[2], corners[3], corners[0], corners[1]};
  r.i1 = i3;
  r.i2 = i4;
  r.i3 = i1;
  r.i4 = i2;
  r.j1 = n - j2;
  r.j2 = n - j1;
  r.j3 = n - j4;
  r.j4 = n - j3;
  return r;
}

ShapeProfile shape_profile(const Polyomino& poly) {
  if (poly.empty()) throw Error(ErrorCode::kInvalidInput, "shape profile of an empty polyomino");
  const auto& verts = poly.vertices();
  int x0 = verts.front().i, x1 = x0, y0 = verts.front().j, y1 = y0;
  for (Point v : verts) {
    x0 = std::min(x0, v.i);
    x1 = std::max(x1, v.i);
    y0 = std::min(y0, v.j);
    y1 = std::max(y1, v.j);
  }
  ShapeProfile sp;
  sp.origin = {x0, y0};
  sp.m = x1 - x0;
  sp.n = y1 - y0;
  sp.connected = poly.connected();
  sp.convex = check_convexity(poly);
  auto cell = [&](int x, int y) { return poly.has_cell({x0 + x, y0 + y}); };
  auto vertex = [&](int x, int y) { return poly.has_vertex({x0 + x, y0 + y}); };
  const int m = sp.m, n = sp.n;
  sp.corners = {cell(0, 0), cell(m - 1, 0), cell(0, n - 1), cell(m - 1, n - 1)};

  auto row_extent = [&](int y, int& lo, int& hi) {
    lo = m;
    hi = 0;
    for (int x = 0; x < m; ++x)
      if (cell(x, y)) {
        lo = std::min(lo, x);
        hi = std::max(hi, x + 1);
      }
  };
  auto column_extent = [&](int x, int& lo, int& hi) {
    lo = n;
    hi = 0;
    for (int y = 0; y < n; ++y)
      if (cell(x, y)) {
        lo = std::min(lo, y);
        hi = std::max(hi, y + 1);
      }
  };
  row_extent(0, sp.i1, sp.i2);
  row_extent(n - 1, sp.i3, sp.i4);
  column_extent(0, sp.j1, sp.j2);
  column_extent(m - 1, sp.j3, sp.j4);

  bool inner = vertex(1, 1) && vertex(m - 1, 1) && vertex(1, n - 1) && vertex(m - 1, n - 1);
  for (int x = 1; inner && x <= m - 2; ++x)
    for (int y = 1; y <= n - 2; ++y)
      if (!cell(x, y)) {
        inner = false;
        break;
      }
  sp.inner_rectangle = inner;
  return sp;
}

bool is_linearly_related_polyomino(const ShapeProfile& sp) {
  if (!sp.connected) throw Error(ErrorCode::kDisconnected, "polyomino is not connected");
  if (!sp.convex) throw Error(ErrorCode::kNotConvex, "polyomino is not convex");
  if (sp.m <= 1 || sp.n <= 1) return true;
  if (!sp.inner_rectangle) return false;
  const auto& c = sp.corners;
  switch (sp.missing_corners()) {
    case 0:
    case 1:
      return true;
    case 2:
      return !((!c[0] && !c[3]) || (!c[1] && !c[2]));
    case 3: {
      ShapeProfile r = sp;
      if (c[1]) r = sp.mirrored_x();
      if (c[2]) r = sp.mirrored_y();
      if (c[3]) r = sp.mirrored_x().mirrored_y();
      return (r.i2 == r.m - 1 && r.j4 <= r.j2) || (r.j2 == r.n - 1 && r.i4 <= r.i2);
    }
    default:
      return false;
  }
}

bool is_linearly_related_lattice(const PlanarLattice& lattice) {
  const int m = lattice.m(), n = lattice.n();
  if (m < 2 || n < 2)
    throw Error(ErrorCode::kRankTooSmall,
                "corner criterion needs m, n >= 2 (got " + std::to_string(m) + ", " +
                    std::to_string(n) + ")");
  const int missing = !lattice.contains({m, 0}) + !lattice.contains({0, n});
  return missing <= 1 && lattice.contains({1, n - 1}) && lattice.contains({m - 1, 1});
}

CornerNotch corner_notch(const PlanarLattice& lattice) {
  CornerNotch c{lattice.m(), 0};
  for (Point p : lattice.points()) {
    if (p.i == 0) c.j1 = std::max(c.j1, p.j);
    if (p.j == lattice.n()) c.i1 = std::min(c.i1, p.i);
  }
  return c;
}

std::vector<RankWindow> enumerate_linrel_windows(const PlanarLattice& lattice) {
  if (!is_linearly_related_lattice(lattice))
    throw Error(ErrorCode::kPreconditionFailed, "lattice ideal is not linearly related");
  const int m = lattice.m(), n = lattice.n(), r = m + n;
  const bool has_top_left = lattice.contains({0, n});
  const bool has_bottom_right = lattice.contains({m, 0});
  std::set<RankWindow> out;
  if (has_top_left && has_bottom_right) {
    out = {{0, r - 2}, {0, r - 1}, {0, r}, {1, r}, {2, r}};
  } else if (!has_top_left) {
    out = {{0, r}, {1, r}, {2, r}, {0, r - 1}, {0, r - 2}, {1, r - 1}};
    const CornerNotch c = corner_notch(lattice);
    if (c.j1 < n - 1) out.insert({1, r - 2});
    if (c.i1 > 1) out.insert({2, r - 1});
  } else {
    return enumerate_linrel_windows(lattice.transposed());
  }
  return {out.begin(), out.end()};
}

namespace {

bool chain_plus_point(const Poset& poset) {
  const std::size_t k = poset.size();
  for (std::size_t x = 0; x < k; ++x) {
    bool isolated = true;
    for (std::size_t y = 0; y < k && isolated; ++y)
      if (y != x && poset.comparable(x, y)) isolated = false;
    if (!isolated) continue;
    bool chain = true;
    for (std::size_t a = 0; a < k && chain; ++a)
      for (std::size_t b = 0; b < k; ++b)
        if (a != x && b != x && !poset.comparable(a, b)) {
          chain = false;
          break;
        }
    if (chain) return true;
  }
  return false;
}

bool n_poset(const Poset& poset) {
  if (poset.size() != 4) return false;
  using Relations = std::vector<std::pair<std::string, std::string>>;
  static const Poset kN({"p1", "p2", "q1", "q2"},
                        Relations{{"p1", "p2"}, {"q1", "q2"}, {"q1", "p2"}});
  return isomorphic(poset, kN);
}

struct Generated {
  MonomialMap map;
  std::vector<Binomial> gens;
};

Generated window_ideal(const PlanarLattice& lattice, RankWindow w) {
  MonomialMap map(lattice, w);
  auto gens = defining_ideal_generators(lattice, w, MonomialOrder(OrderKind::kRankLex, map.variables()));
  return {std::move(map), std::move(gens)};
}

}  // namespace

ProperWindowsReport all_proper_windows_linear(const PlanarLattice& lattice,
                                              const BettiOptions& options) {
  if (lattice.rank() < 2)
    throw Error(ErrorCode::kRankTooSmall, "proper windows need rank >= 2");
  ProperWindowsReport rep;
  const Poset poset = join_irreducibles(lattice);
  rep.simple = is_simple(lattice).simple;
  if (chain_plus_point(poset)) {
    rep.by_family = true;
    rep.family = "chain+point";
  } else if (n_poset(poset)) {
    rep.by_family = true;
    rep.family = "N";
  }
  bool all = true, undecided = false;
  for (RankWindow w : all_windows(lattice, true)) {
    ++rep.windows_checked;
    std::optional<bool> linear = has_linear_resolution_shape(polyomino(lattice, w));
    if (!linear) {
      auto ideal = window_ideal(lattice, w);
      if (ideal.gens.size() <= 1) {
        linear = true;
      } else if (ideal.map.nvars() <= options.cap_vars) {
        ++rep.oracle_calls;
        linear = has_linear_resolution_oracle(ideal.gens, ideal.map, options);
      }
    }
    if (!linear) {
      undecided = true;
      continue;
    }
    if (!*linear) {
      all = false;
      rep.witness = w;
      break;
    }
  }
  if (!all)
    rep.extensional = false;
  else if (!undecided)
    rep.extensional = true;
  return rep;
}

WindowVerdict classify_window(const PlanarLattice& lattice, RankWindow w,
                              const ClassifyOptions& options) {
  check_window(lattice, w);
  WindowVerdict v;
  v.window = w;
  auto ideal = window_ideal(lattice, w);
  v.variables = ideal.map.nvars();
  v.generators = ideal.gens.size();
  const BettiOptions& bo = options.betti;

  auto oracle_linear = [&](std::uint32_t prime) -> std::optional<bool> {
    if (ideal.map.nvars() > bo.cap_vars) return std::nullopt;
    BettiOptions o = bo;
    o.prime = prime;
    return has_linear_resolution_oracle(ideal.gens, ideal.map, o);
  };
  auto oracle_linrel = [&](std::uint32_t prime) -> std::optional<bool> {
    if (ideal.map.nvars() > bo.linrel_cap_vars) return std::nullopt;
    BettiOptions o = bo;
    o.prime = prime;
    return is_linearly_related_oracle(ideal.gens, ideal.map, o);
  };

  if (ideal.gens.size() <= 1) {
    v.linear_resolution = v.linearly_related = true;
    v.linear_resolution_basis = v.linearly_related_basis = "trivial";
  } else if (options.mode == ClassifyMode::kShapeFirst) {
    const Polyomino poly = polyomino(lattice, w);
    if (auto shape = has_linear_resolution_shape(poly)) {
      v.linear_resolution = *shape != options.corrupt_classifier;
      v.linear_resolution_basis = "polyomino-shape";
    }

    // The corner list of the lattice misses windows such as (0,3) on the
    // 4x4 grid, whose ideal is linearly related; the polyomino test has no
    // known exceptions, so it goes first and the list only covers the rest.
    const int m = lattice.m(), n = lattice.n();
    // the lattice-level criteria need a simple lattice
    std::optional<bool> listed;
    if (m >= 2 && n >= 2 && is_simple(lattice).simple && is_linearly_related_lattice(lattice)) {
      const auto list = enumerate_linrel_windows(lattice);
      listed = std::find(list.begin(), list.end(), w) != list.end();
      const int r = lattice.rank();
      const bool one_corner = lattice.contains({0, n}) != lattice.contains({m, 0});
      v.notch_clause = one_corner && *listed &&
                       (w == RankWindow{1, r - 1} || w == RankWindow{1, r - 2} ||
                        w == RankWindow{2, r - 1});
      if (v.notch_clause) v.notes.push_back("gated notch clause of the missing-corner list fired");
    }
    if (poly.connected() && check_convexity(poly) && !poly.empty()) {
      const bool related = is_linearly_related_polyomino(shape_profile(poly));
      v.linearly_related = related != options.corrupt_classifier;
      v.linearly_related_basis = "polyomino-corners";
      if (listed && *listed != related)
        v.notes.push_back(std::string("lattice corner list says ") +
                          (*listed ? "linearly related" : "not linearly related") +
                          ", polyomino corners say otherwise");
    } else if (listed) {
      v.linearly_related = *listed != options.corrupt_classifier;
      v.linearly_related_basis = "lattice-corners";
    }
  }

  if (!v.linear_resolution) {
    v.linear_resolution = oracle_linear(bo.prime);
    v.linear_resolution_basis = v.linear_resolution ? "oracle" : "undecided";
    v.oracle_linear_resolution = v.linear_resolution;
  }
  if (!v.linearly_related) {
    v.linearly_related = oracle_linrel(bo.prime);
    v.linearly_related_basis = v.linearly_related ? "oracle" : "undecided";
    v.oracle_linearly_related = v.linearly_related;
  }

  if (options.verify && v.generators > 1) {
    if (!v.oracle_linear_resolution) v.oracle_linear_resolution = oracle_linear(bo.prime);
    if (!v.oracle_linearly_related) v.oracle_linearly_related = oracle_linrel(bo.prime);
    auto differs = [](const std::optional<bool>& a, const std::optional<bool>& b) {
      return a && b && *a != *b;
    };
    if (differs(v.linear_resolution, v.oracle_linear_resolution)) {
      v.notes.push_back("linear resolution: classifier and oracle differ at p = " +
                        std::to_string(bo.prime) + ", rerun at p = 65537");
      v.oracle_linear_resolution = oracle_linear(kSecondPrime);
      if (differs(v.linear_resolution, v.oracle_linear_resolution)) v.disagreement = true;
    }
    if (differs(v.linearly_related, v.oracle_linearly_related)) {
      v.notes.push_back("linearly related: classifier and oracle differ at p = " +
                        std::to_string(bo.prime) + ", rerun at p = 65537");
      v.oracle_linearly_related = oracle_linrel(kSecondPrime);
      if (differs(v.linearly_related, v.oracle_linearly_related)) v.disagreement = true;
    }
  }
  return v;
}

}  // namespace hibi
