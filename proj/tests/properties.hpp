#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// binary. Each returns the number of cases run and the failures seen.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "hibi/classifier.hpp"
#include "hibi/corpus.hpp"
#include "oracles.hpp"

namespace props {

using namespace hibi;

struct Tally {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 20) failures.push_back(what);
  }
  bool ok() const { return failures.empty(); }
};

inline PlanarLattice random_lattice(std::mt19937_64& rng, int max_side) {
  const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_side));
  const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_side));
  return rng() % 2 ? random_staircase(rng, m, n) : random_width2(rng, m + n);
}

/// Poset of join-irreducibles round-trips to an isomorphic lattice, and
/// re-validating the points reproduces the lattice.
inline Tally birkhoff(std::uint64_t seed, std::size_t count) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    auto L = random_lattice(rng, 5);
    const std::string tag = "birkhoff case " + std::to_string(k);
    auto P = join_irreducibles(L);
    auto back = poset_ideals_to_planar(P);
    t.check(isomorphic(back, L) && P.size() == static_cast<std::size_t>(L.rank()) &&
                validate_planar_lattice(L.points()) == L &&
                oracle::rank_profile(L) == oracle::ideal_rank_profile(P) &&
                oracle::is_planar_lattice(L.points()),
            tag);
  }
  return t;
}

inline RankWindow random_window(std::mt19937_64& rng, const PlanarLattice& L) {
  const int r = L.rank();
  const int p = static_cast<int>(rng() % static_cast<unsigned>(r));
  const int q = p + 1 + static_cast<int>(rng() % static_cast<unsigned>(r - p));
  return {p, q};
}

/// Recomputing the reduced basis, or feeding the basis back in, changes nothing.
inline Tally groebner_determinism(std::uint64_t seed, std::size_t count) {
  Tally t;
  std::mt19937_64 rng(seed);
  while (t.cases < count) {
    auto L = random_lattice(rng, 4);
    if (L.rank() < 2) continue;
    auto w = random_window(rng, L);
    MonomialMap map(L, w);
    if (map.nvars() > 16) continue;
    const OrderKind kind = kCandidateOrders[rng() % kCandidateOrders.size()];
    MonomialOrder ord(kind, map.variables());
    auto gens = defining_ideal_generators(L, w, ord);
    auto a = buchberger(gens, ord);
    auto b = buchberger(gens, ord);
    auto c = buchberger(a.basis, ord);
    // shuffled input
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto d = buchberger(shuffled, ord);
    t.check(a.basis == b.basis && a.basis == c.basis && a.basis == d.basis &&
                is_groebner_basis(a.basis, ord),
            "groebner case " + std::to_string(t.cases) + " window " + to_string(w) + " order " +
                std::string(order_name(kind)));
  }
  return t;
}

/// normal_form(normal_form(u)) = normal_form(u), the result is irreducible
/// and stays in the fiber of u.
inline Tally normal_form_idempotence(std::uint64_t seed, std::size_t count) {
  Tally t;
  std::mt19937_64 rng(seed);
  while (t.cases < count) {
    auto L = random_lattice(rng, 4);
    if (L.rank() < 2) continue;
    auto w = random_window(rng, L);
    MonomialMap map(L, w);
    if (map.nvars() > 16) continue;
    auto gb = buchberger_auto(
        defining_ideal_generators(L, w, MonomialOrder(OrderKind::kRankLex, map.variables())),
        map.variables());
    Monomial u(map.nvars());
    const int deg = 2 + static_cast<int>(rng() % 4);
    for (int d = 0; d < deg; ++d) u.multiply_by(rng() % map.nvars());
    auto nf = normal_form(u, gb.basis);
    bool irreducible = true;
    for (const auto& g : gb.basis) irreducible = irreducible && !g.lead.divides(nf);
    t.check(normal_form(nf, gb.basis) == nf && irreducible && map.image(nf) == map.image(u) &&
                nf.degree() == u.degree(),
            "normal form case " + std::to_string(t.cases));
  }
  return t;
}

/// Swapping coordinates transposes every window object and leaves every
/// verdict unchanged.
inline Tally transposition(std::uint64_t seed, std::size_t count) {
  Tally t;
  std::mt19937_64 rng(seed);
  while (t.cases < count) {
    auto L = random_lattice(rng, 4);
    if (L.rank() < 2) continue;
    auto T = L.transposed();
    auto w = random_window(rng, L);
    MonomialMap map(L, w);
    if (map.nvars() > 12) continue;
    bool ok = generators(L, w).size() == generators(T, w).size() &&
              dimension(L, w) == dimension(T, w) &&
              polyomino(L, w).cells().size() == polyomino(T, w).cells().size() &&
              check_convexity(polyomino(T, w)) &&
              is_chordal_bipartite(bipartite_graph(T, w)).chordal;
    auto a = classify_window(L, w);
    auto b = classify_window(T, w);
    ok = ok && a.linear_resolution == b.linear_resolution &&
         a.linearly_related == b.linearly_related;
    if (L.m() >= 2 && L.n() >= 2) ok = ok && is_linearly_related_lattice(L) == is_linearly_related_lattice(T);
    t.check(ok, "transposition case " + std::to_string(t.cases) + " window " + to_string(w));
  }
  return t;
}

}  // namespace props
