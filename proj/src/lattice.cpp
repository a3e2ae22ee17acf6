#include "hibi/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace hibi {

std::string to_string(Point p) {
  std::ostringstream os;
  os << '(' << p.i << ',' << p.j << ')';
  return os.str();
}

// ---------------------------------------------------------------- Poset

Poset::Poset(std::vector<std::string> labels,
             const std::vector<std::pair<std::string, std::string>>& relations)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  leq_.assign(n, std::vector<bool>(n, false));
  {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::kInvalidPoset, "duplicate poset label");
  }
  for (const auto& [a, b] : relations) {
    auto ia = index_of(a);
    auto ib = index_of(b);
    if (!ia || !ib)
      throw Error(ErrorCode::kInvalidPoset, "relation names unknown element '" +
                                                (ia ? b : a) + "'");
    leq_[*ia][*ib] = true;
  }
  close_and_check();
}

Poset::Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  if (leq_.size() != labels_.size())
    throw Error(ErrorCode::kInvalidPoset, "relation matrix size mismatch");
  close_and_check();
}

void Poset::close_and_check() {
  const std::size_t n = labels_.size();
  for (std::size_t a = 0; a < n; ++a) leq_[a][a] = true;
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (leq_[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (leq_[k][b]) leq_[a][b] = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (leq_[a][b] && leq_[b][a])
        throw Error(ErrorCode::kInvalidPoset, "relation has a cycle through '" +
                                                  labels_[a] + "' and '" +
                                                  labels_[b] + "'");
}

std::optional<std::size_t> Poset::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool between = false;
      for (std::size_t c = 0; c < n && !between; ++c)
        between = less(a, c) && less(c, b);
      if (!between) out.emplace_back(a, b);
    }
  return out;
}

std::vector<std::vector<std::size_t>> Poset::chain_partition() const {
  // Dilworth via maximum matching: matching a -> b (a < b) links b after a.
  const std::size_t n = size();
  std::vector<std::ptrdiff_t> match_of_right(n, -1);
  std::vector<std::ptrdiff_t> match_of_left(n, -1);
  std::vector<bool> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b) || seen[b]) continue;
      seen[b] = true;
      if (match_of_right[b] < 0 ||
          augment(static_cast<std::size_t>(match_of_right[b]))) {
        match_of_right[b] = static_cast<std::ptrdiff_t>(a);
        match_of_left[a] = static_cast<std::ptrdiff_t>(b);
        return true;
      }
    }
    return false;
  };
  for (std::size_t a = 0; a < n; ++a) {
    seen.assign(n, false);
    augment(a);
  }
  std::vector<std::vector<std::size_t>> chains;
  for (std::size_t start = 0; start < n; ++start) {
    if (match_of_right[start] >= 0) continue;
    std::vector<std::size_t> chain;
    for (std::ptrdiff_t c = static_cast<std::ptrdiff_t>(start); c >= 0;
         c = match_of_left[static_cast<std::size_t>(c)])
      chain.push_back(static_cast<std::size_t>(c));
    chains.push_back(std::move(chain));
  }
  return chains;
}

std::size_t Poset::width() const { return chain_partition().size(); }

bool isomorphic(const Poset& a, const Poset& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  auto signature = [](const Poset& p, std::size_t x) {
    std::size_t below = 0, above = 0;
    for (std::size_t y = 0; y < p.size(); ++y) {
      below += p.less(y, x);
      above += p.less(x, y);
    }
    return std::pair(below, above);
  };
  std::vector<std::pair<std::size_t, std::size_t>> sa(n), sb(n);
  for (std::size_t x = 0; x < n; ++x) {
    sa[x] = signature(a, x);
    sb[x] = signature(b, x);
  }
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
  }
  std::vector<std::ptrdiff_t> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t x) {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || sa[x] != sb[y]) continue;
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z) {
        auto w = static_cast<std::size_t>(image[z]);
        ok = a.leq(x, z) == b.leq(y, w) && a.leq(z, x) == b.leq(w, y);
      }
      if (!ok) continue;
      used[y] = true;
      image[x] = static_cast<std::ptrdiff_t>(y);
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return extend(0);
}

// ---------------------------------------------------------------- lattice

PlanarLattice validate_planar_lattice(std::vector<Point> points) {
  if (points.empty())
    throw Error(ErrorCode::kInvalidInput, "lattice has no points");
  for (Point p : points)
    if (p.i < 0 || p.j < 0)
      throw Error(ErrorCode::kInvalidInput,
                  "negative coordinate in point " + to_string(p));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Point lo{points.front().i, points.front().j};
  for (Point p : points) lo.j = std::min(lo.j, p.j);
  for (Point& p : points) {
    p.i -= lo.i;
    p.j -= lo.j;
  }

  PlanarLattice lattice;
  lattice.offset_ = lo;
  for (Point p : points) {
    lattice.m_ = std::max(lattice.m_, p.i);
    lattice.n_ = std::max(lattice.n_, p.j);
  }
  const int m = lattice.m_, n = lattice.n_;
  lattice.grid_.assign(static_cast<std::size_t>(m + 1) * (n + 1), false);
  for (Point p : points)
    lattice.grid_[static_cast<std::size_t>(p.i) * (n + 1) + p.j] = true;
  lattice.points_ = std::move(points);
  const auto& pts = lattice.points_;

  if (!lattice.contains({0, 0})) {
    Point witness = pts.front();
    throw LatticeError(ErrorCode::kMissingOrigin,
                       "lattice does not contain the origin", witness, witness);
  }
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      if (!lattice.contains(meet(pts[a], pts[b])))
        throw LatticeError(ErrorCode::kNotMeetClosed,
                           "meet of " + to_string(pts[a]) + " and " +
                               to_string(pts[b]) + " is missing",
                           pts[a], pts[b]);
      if (!lattice.contains(join(pts[a], pts[b])))
        throw LatticeError(ErrorCode::kNotJoinClosed,
                           "join of " + to_string(pts[a]) + " and " +
                               to_string(pts[b]) + " is missing",
                           pts[a], pts[b]);
    }

  // Chain condition: b must be reachable from a by unit steps inside L.
  std::vector<bool> reach(lattice.grid_.size());
  auto at = [&](Point p) { return static_cast<std::size_t>(p.i) * (n + 1) + p.j; };
  for (Point a : pts) {
    std::fill(reach.begin(), reach.end(), false);
    for (Point p : pts) {  // lexicographic order is a topological order
      if (!leq(a, p)) continue;
      bool r = p == a;
      if (!r && p.i > a.i && lattice.contains({p.i - 1, p.j}))
        r = reach[at({p.i - 1, p.j})];
      if (!r && p.j > a.j && lattice.contains({p.i, p.j - 1}))
        r = reach[at({p.i, p.j - 1})];
      if (!r)
        throw LatticeError(ErrorCode::kChainConditionFails,
                           "no saturated chain from " + to_string(a) + " to " +
                               to_string(p),
                           a, p);
      reach[at(p)] = true;
    }
  }
  return lattice;
}

PlanarLattice full_grid(int m, int n) {
  std::vector<Point> pts;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) pts.push_back({i, j});
  return validate_planar_lattice(std::move(pts));
}

PlanarLattice PlanarLattice::transposed() const {
  std::vector<Point> pts;
  pts.reserve(points_.size());
  for (Point p : points_) pts.push_back({p.j, p.i});
  return validate_planar_lattice(std::move(pts));
}

SimplicityReport is_simple(const PlanarLattice& lattice) {
  std::vector<int> count(static_cast<std::size_t>(lattice.rank()) + 1, 0);
  for (Point p : lattice.points()) ++count[static_cast<std::size_t>(p.rank())];
  SimplicityReport report;
  for (int r = 1; r < lattice.rank(); ++r)
    if (count[static_cast<std::size_t>(r)] < 2) report.violating_ranks.push_back(r);
  report.simple = report.violating_ranks.empty();
  return report;
}

std::vector<Point> join_irreducible_points(const PlanarLattice& lattice) {
  std::vector<Point> out;
  for (Point p : lattice.points()) {
    int lower = lattice.contains({p.i - 1, p.j}) + lattice.contains({p.i, p.j - 1});
    if (lower == 1) out.push_back(p);
  }
  return out;
}

Poset join_irreducibles(const PlanarLattice& lattice) {
  auto pts = join_irreducible_points(lattice);
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> rel(pts.size(), std::vector<bool>(pts.size()));
  for (std::size_t a = 0; a < pts.size(); ++a) {
    labels.push_back(to_string(pts[a]));
    for (std::size_t b = 0; b < pts.size(); ++b) rel[a][b] = leq(pts[a], pts[b]);
  }
  return Poset(std::move(labels), std::move(rel));
}

PlanarLattice poset_ideals_to_planar(const Poset& poset) {
  auto chains = poset.chain_partition();
  if (chains.size() > 2)
    throw Error(ErrorCode::kWidthExceedsTwo,
                "poset has width " + std::to_string(chains.size()) +
                    "; its ideal lattice is not planar");
  if (chains.empty()) return validate_planar_lattice({{0, 0}});
  if (chains.size() == 2) {
    const auto& a = chains[0];
    const auto& b = chains[1];
    bool swap = b.size() > a.size() ||
                (b.size() == a.size() && poset.label(b.front()) < poset.label(a.front()));
    if (swap) std::swap(chains[0], chains[1]);
  } else {
    chains.emplace_back();
  }
  const auto& c1 = chains[0];
  const auto& c2 = chains[1];
  // needs_other[k] = length of the other chain's prefix required below c[k].
  auto requirement = [&](const std::vector<std::size_t>& self,
                         const std::vector<std::size_t>& other) {
    std::vector<std::size_t> need(self.size(), 0);
    for (std::size_t k = 0; k < self.size(); ++k)
      for (std::size_t l = 0; l < other.size(); ++l)
        if (poset.less(other[l], self[k])) need[k] = std::max(need[k], l + 1);
    return need;
  };
  auto need1 = requirement(c1, c2);
  auto need2 = requirement(c2, c1);
  std::vector<Point> pts;
  for (std::size_t a = 0; a <= c1.size(); ++a)
    for (std::size_t b = 0; b <= c2.size(); ++b) {
      bool ok = (a == 0 || need1[a - 1] <= b) && (b == 0 || need2[b - 1] <= a);
      if (ok) pts.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
  return validate_planar_lattice(std::move(pts));
}

bool isomorphic(const PlanarLattice& a, const PlanarLattice& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  auto by_rank = [](const PlanarLattice& l) {
    std::vector<std::vector<Point>> levels(static_cast<std::size_t>(l.rank()) + 1);
    for (Point p : l.points()) levels[static_cast<std::size_t>(p.rank())].push_back(p);
    return levels;
  };
  auto la = by_rank(a);
  auto lb = by_rank(b);
  for (std::size_t r = 0; r < la.size(); ++r)
    if (la[r].size() != lb[r].size()) return false;

  // Flatten in rank order; covers only join consecutive ranks, and a graded
  // order is the transitive closure of its covers.
  std::vector<Point> order;
  for (const auto& level : la) order.insert(order.end(), level.begin(), level.end());
  std::map<Point, Point> image;
  std::map<Point, bool> used;
  auto covers = [](Point x, Point y) { return leq(x, y) && y.rank() == x.rank() + 1; };
  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == order.size()) return true;
    Point x = order[k];
    for (Point y : lb[static_cast<std::size_t>(x.rank())]) {
      if (used[y]) continue;
      bool ok = true;
      if (x.rank() > 0)
        for (Point z : la[static_cast<std::size_t>(x.rank() - 1)])
          if (covers(z, x) != covers(image.at(z), y)) {
            ok = false;
            break;
          }
      if (!ok) continue;
      used[y] = true;
      image[x] = y;
      if (extend(k + 1)) return true;
      used[y] = false;
      image.erase(x);
    }
    return false;
  };
  return extend(0);
}

}  // namespace hibi
