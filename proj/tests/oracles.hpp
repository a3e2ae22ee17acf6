#pragma once

// Brute-force reference implementations used only by the tests. Each one
// recomputes a library result from the definitions, by a different route.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "hibi/betti.hpp"
#include "hibi/lattice.hpp"
#include "hibi/window.hpp"

namespace oracle {

using hibi::Point;

/// Cells straight from the definition: all four corners in L, within the band.
inline std::vector<Point> cells(const hibi::PlanarLattice& L, hibi::RankWindow w) {
  std::vector<Point> out;
  for (int i = 0; i < L.m(); ++i)
    for (int j = 0; j < L.n(); ++j) {
      const bool corners = L.contains({i, j}) && L.contains({i + 1, j}) &&
                           L.contains({i, j + 1}) && L.contains({i + 1, j + 1});
      if (corners && i + j >= w.p && i + j + 2 <= w.q) out.push_back({i, j});
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Closure and chain condition by exhaustive search.
inline bool is_planar_lattice(const std::vector<Point>& pts) {
  std::set<Point> s(pts.begin(), pts.end());
  if (!s.count({0, 0})) return false;
  for (Point a : s)
    for (Point b : s) {
      if (!s.count(hibi::meet(a, b)) || !s.count(hibi::join(a, b))) return false;
      if (!hibi::leq(a, b)) continue;
      // breadth-first search over unit steps
      std::set<Point> seen{a};
      std::queue<Point> todo;
      todo.push(a);
      bool found = false;
      while (!todo.empty() && !found) {
        Point c = todo.front();
        todo.pop();
        if (c == b) found = true;
        for (Point d : {Point{c.i + 1, c.j}, Point{c.i, c.j + 1}})
          if (s.count(d) && hibi::leq(d, b) && seen.insert(d).second) todo.push(d);
      }
      if (!found) return false;
    }
  return true;
}

/// Order ideals of a poset (as bitmasks), by enumeration of all subsets.
inline std::vector<std::uint32_t> order_ideals(const hibi::Poset& P) {
  const std::size_t k = P.size();
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    bool down = true;
    for (std::size_t b = 0; b < k && down; ++b)
      if (s >> b & 1)
        for (std::size_t a = 0; a < k; ++a)
          if (P.less(a, b) && !(s >> a & 1)) {
            down = false;
            break;
          }
    if (down) out.push_back(s);
  }
  return out;
}

/// Number of lattice elements per rank, by ideal size.
inline std::vector<int> ideal_rank_profile(const hibi::Poset& P) {
  std::vector<int> prof(P.size() + 1, 0);
  for (auto s : order_ideals(P)) ++prof[static_cast<std::size_t>(std::popcount(s))];
  return prof;
}

inline std::vector<int> rank_profile(const hibi::PlanarLattice& L) {
  std::vector<int> prof(static_cast<std::size_t>(L.rank()) + 1, 0);
  for (Point p : L.points()) ++prof[static_cast<std::size_t>(p.rank())];
  return prof;
}

/// Some vertex subset of size >= 6 inducing a cycle. Vertices: s_0.. then t_0..
inline bool has_chordless_long_cycle(const hibi::BipartiteGraph& g) {
  const int L = g.left, R = g.right, V = L + R;
  if (V > 20) throw std::runtime_error("graph too large for the brute-force cycle search");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(V), 0);
  for (Point e : g.edges) {
    adj[static_cast<std::size_t>(e.i)] |= 1u << (L + e.j);
    adj[static_cast<std::size_t>(L + e.j)] |= 1u << e.i;
  }
  for (std::uint32_t s = 0; s < (1u << V); ++s) {
    if (std::popcount(s) < 6) continue;
    bool two = true;
    for (int v = 0; v < V && two; ++v)
      if (s >> v & 1) two = std::popcount(adj[static_cast<std::size_t>(v)] & s) == 2;
    if (!two) continue;
    // 2-regular: a cycle iff connected
    const int start = std::countr_zero(s);
    std::uint32_t seen = 1u << start, frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1)
        next |= adj[static_cast<std::size_t>(std::countr_zero(f))] & s;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == s) return true;
  }
  return false;
}

/// Largest variable set that contains no lead-term support, over all subsets.
inline int krull_dimension(const hibi::GroebnerReport& gb, std::size_t nvars) {
  std::vector<std::uint64_t> supports;
  for (const auto& b : gb.basis) supports.push_back(b.lead.support());
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << nvars); ++s) {
    const int c = std::popcount(s);
    if (c <= best) continue;
    if (std::none_of(supports.begin(), supports.end(),
                     [&](std::uint64_t t) { return (t & s) == t; }))
      best = c;
  }
  return best;
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (a %= p; e; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

/// Rank over Z/p by plain row reduction.
inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] % p == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const auto inv = static_cast<std::int64_t>(
        pow_mod(static_cast<std::uint64_t>((a[r][c] % p + p) % p), static_cast<std::uint64_t>(p - 2),
                static_cast<std::uint64_t>(p)));
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k == r || a[k][c] % p == 0) continue;
      const std::int64_t f = (a[k][c] % p + p) % p * inv % p;
      for (std::size_t x = 0; x < cols; ++x) a[k][x] = ((a[k][x] - f * a[r][x]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

/// Betti numbers of the toric ideal (ideal convention), from the Koszul
/// complex of the semigroup ring itself: a basis of R_t is the set of
/// distinct images of degree-t monomials, and x_a acts by adding deg(a).
/// No Groebner basis is involved.
inline std::map<std::pair<int, int>, std::size_t> semigroup_betti(const hibi::MonomialMap& map,
                                                                  int j_max,
                                                                  std::int64_t p = 32003) {
  using Deg = std::vector<int>;
  const int N = static_cast<int>(map.nvars());
  const std::size_t G = map.grading_dim();
  auto deg_of = [&](int v) {
    Deg d(G);
    for (std::size_t k = 0; k < G; ++k) d[k] = map.image(static_cast<std::size_t>(v))[k];
    return d;
  };
  auto add = [](Deg a, const Deg& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
  };
  // semigroup elements by degree
  std::vector<std::set<Deg>> elems(static_cast<std::size_t>(j_max) + 1);
  elems[0].insert(Deg(G, 0));
  for (int t = 1; t <= j_max; ++t)
    for (const auto& b : elems[static_cast<std::size_t>(t - 1)])
      for (int v = 0; v < N; ++v) elems[static_cast<std::size_t>(t)].insert(add(b, deg_of(v)));

  std::map<std::pair<int, int>, std::size_t> out;
  for (int j = 1; j <= j_max; ++j) {
    // basis of C_s in degree j: (subset mask, element), grouped by total multidegree
    std::vector<std::map<Deg, std::vector<std::pair<std::uint32_t, Deg>>>> C(
        static_cast<std::size_t>(N) + 2);
    for (std::uint32_t A = 0; A < (1u << N); ++A) {
      const int s = std::popcount(A);
      if (s > j) continue;
      Deg dA(G, 0);
      for (int v = 0; v < N; ++v)
        if (A >> v & 1) dA = add(dA, deg_of(v));
      for (const auto& b : elems[static_cast<std::size_t>(j - s)])
        C[static_cast<std::size_t>(s)][add(dA, b)].push_back({A, b});
    }
    auto boundary_rank = [&](int s, const Deg& key) -> std::size_t {
      if (s < 1) return 0;
      auto src = C[static_cast<std::size_t>(s)].find(key);
      auto dst = C[static_cast<std::size_t>(s - 1)].find(key);
      if (src == C[static_cast<std::size_t>(s)].end() ||
          dst == C[static_cast<std::size_t>(s - 1)].end())
        return 0;
      const auto& rows = src->second;
      const auto& cols = dst->second;
      std::map<std::pair<std::uint32_t, Deg>, std::size_t> col_index;
      for (std::size_t c = 0; c < cols.size(); ++c) col_index[cols[c]] = c;
      std::vector<std::vector<std::int64_t>> M(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& [A, b] = rows[r];
        int sign = 1;
        for (int v = 0; v < N; ++v) {
          if (!(A >> v & 1)) continue;
          const std::size_t c = col_index.at({A & ~(1u << v), add(b, deg_of(v))});
          M[r][c] += sign;
          sign = -sign;
        }
      }
      return rank_mod(std::move(M), p);
    };
    for (int s = 1; s <= std::min(N, j); ++s) {
      std::size_t h = 0;
      for (const auto& [key, basis] : C[static_cast<std::size_t>(s)])
        h += basis.size() - boundary_rank(s, key) - boundary_rank(s + 1, key);
      if (h) out[{s - 1, j}] = h;
    }
  }
  return out;
}

}  // namespace oracle

namespace oracle {

/// Hilbert function of the semigroup ring: distinct images per degree.
inline std::vector<std::size_t> semigroup_hilbert(const hibi::MonomialMap& map, int d_max) {
  std::set<std::vector<int>> level{std::vector<int>(map.grading_dim(), 0)};
  std::vector<std::size_t> out{1};
  for (int t = 1; t <= d_max; ++t) {
    std::set<std::vector<int>> next;
    for (const auto& b : level)
      for (std::size_t v = 0; v < map.nvars(); ++v) {
        auto c = b;
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += map.image(v)[k];
        next.insert(std::move(c));
      }
    level = std::move(next);
    out.push_back(level.size());
  }
  return out;
}

}  // namespace oracle
