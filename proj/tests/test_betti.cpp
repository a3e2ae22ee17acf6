#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "hibi/corpus.hpp"
#include "hibi/io.hpp"
#include "oracles.hpp"

using namespace hibi;

namespace {

struct Instance {
  MonomialMap map;
  std::vector<Binomial> gens;
  GroebnerReport gb;
};

Instance make(const PlanarLattice& L, RankWindow w) {
  MonomialMap map(L, w);
  auto gens = defining_ideal_generators(L, w, MonomialOrder(OrderKind::kRankLex, map.variables()));
  auto gb = buchberger_auto(gens, map.variables());
  return {std::move(map), std::move(gens), std::move(gb)};
}

using Entries = std::map<std::pair<int, int>, std::size_t>;

Entries up_to(const Entries& e, int j_max) {
  Entries out;
  for (const auto& [k, v] : e)
    if (k.second <= j_max) out[k] = v;
  return out;
}

}  // namespace

TEST_CASE("Hilbert functions") {
  {
    auto I = make(full_grid(1, 1), {0, 2});
    CHECK(hilbert_function(I.gb, I.map.nvars(), 2) == std::vector<std::size_t>{1, 4, 9});
  }
  {
    auto I = make(full_grid(2, 1), {0, 3});
    CHECK(hilbert_function(I.gb, I.map.nvars(), 2) == std::vector<std::size_t>{1, 6, 18});
  }
  {
    auto I = make(staircase_example(), {3, 7});
    auto h = hilbert_function(I.gb, I.map.nvars(), 3);
    CHECK(h == oracle::semigroup_hilbert(I.map, 3));
    std::ifstream in(std::string(HIBI_GOLDEN_DIR) + "/hilbert_staircase_3_7.json");
    REQUIRE(in);
    auto golden = Json::parse(in);
    CHECK(h == golden["hilbert"].get<std::vector<std::size_t>>());
  }
}

TEST_CASE("Krull dimension") {
  auto q = make(full_grid(1, 1), {0, 2});
  CHECK(krull_dimension_via_initial(q.gb, q.map.nvars()) == 3);
  auto f = make(staircase_example(), {3, 7});
  CHECK(krull_dimension_via_initial(f.gb, f.map.nvars()) == 9);
  CHECK(dimension(staircase_example(), {3, 7}) == 9);
  CHECK(krull_dimension_via_initial(f.gb, f.map.nvars()) ==
        oracle::krull_dimension(f.gb, f.map.nvars()));
  auto g = make(full_grid(5, 4), {0, 9});
  CHECK(krull_dimension_via_initial(g.gb, g.map.nvars()) == 10);
}

TEST_CASE("h-polynomial") {
  auto q = make(full_grid(1, 1), {0, 2});
  CHECK(h_polynomial(q.gb, q.map.nvars()) == std::vector<long long>{1, 1});
  auto m = make(full_grid(2, 1), {0, 3});
  CHECK(h_polynomial(m.gb, m.map.nvars()) == std::vector<long long>{1, 2});
}

TEST_CASE("Betti tables of the anchor ideals") {
  {
    auto I = make(full_grid(1, 1), {0, 2});
    auto t = betti_numbers(I.gens, I.map);
    CHECK(t.entries == Entries{{{0, 2}, 1}});
    CHECK(has_linear_resolution_oracle(I.gens, I.map));
    CHECK(is_linearly_related_oracle(I.gens, I.map));
  }
  {
    auto I = make(full_grid(2, 1), {0, 3});
    auto t = betti_numbers(I.gens, I.map);
    CHECK(t.entries == Entries{{{0, 2}, 3}, {{1, 3}, 2}});
    CHECK(has_linear_resolution_oracle(I.gens, I.map));
    CHECK(is_linearly_related_oracle(I.gens, I.map));
  }
  {
    auto I = make(full_grid(2, 2), {1, 3});
    auto t = betti_numbers(I.gens, I.map);
    CHECK(t.entries == Entries{{{0, 2}, 2}, {{1, 4}, 1}});
    CHECK(t.at(1, 3) == 0);
    CHECK_FALSE(has_linear_resolution_oracle(I.gens, I.map));
    CHECK_FALSE(is_linearly_related_oracle(I.gens, I.map));
  }
  {
    // Hibi ring of the 3x3 grid: 9 quadrics, Gorenstein
    auto I = make(full_grid(2, 2), {0, 4});
    auto t = betti_numbers(I.gens, I.map);
    CHECK(t.entries == Entries{{{0, 2}, 9}, {{1, 3}, 16}, {{2, 4}, 9}, {{3, 6}, 1}});
    auto full = I;
    BettiOptions o;
    o.full_range = true;
    auto t2 = betti_numbers(full.gens, full.map, o);
    CHECK(t2 == t);
    CHECK(t2.bound_source == "krull-dimension");
    CHECK(t.bound_source == "h-polynomial");
  }
}

TEST_CASE("zero ideal") {
  auto I = make(full_grid(2, 2), {0, 1});
  CHECK(I.gens.empty());
  CHECK(betti_numbers(I.gens, I.map).entries.empty());
  CHECK(has_linear_resolution_oracle(I.gens, I.map));
  CHECK(is_linearly_related_oracle(I.gens, I.map));
}

TEST_CASE("caps and primes") {
  auto I = make(staircase_example(), {3, 7});
  try {
    betti_numbers(I.gens, I.map);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCapExceeded);
  }
  BettiOptions bad;
  bad.prime = 32002;
  auto q = make(full_grid(1, 1), {0, 2});
  CHECK_THROWS_AS(betti_numbers(q.gens, q.map, bad), Error);
  bad.prime = 101;
  CHECK_THROWS_AS(betti_numbers(q.gens, q.map, bad), Error);
  BettiOptions other;
  other.prime = 65537;
  CHECK(betti_numbers(q.gens, q.map, other).entries == Entries{{{0, 2}, 1}});
}

TEST_CASE("Macaulay layout") {
  auto I = make(full_grid(2, 1), {0, 3});
  auto text = format_macaulay(betti_numbers(I.gens, I.map));
  CHECK(text.find("total:") != std::string::npos);
  CHECK(text.find('3') != std::string::npos);
}

TEST_CASE("matrix ranks") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 30, c = 1 + rng() % 30;
    const std::uint32_t p = trial % 2 ? 32003 : 65537;
    ModMatrix m(r, c, p);
    std::vector<std::vector<std::int64_t>> dense(r, std::vector<std::int64_t>(c, 0));
    const int density = 1 + static_cast<int>(rng() % 4);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (static_cast<int>(rng() % 4) < density) {
          const std::int64_t v = static_cast<std::int64_t>(rng() % 5) - 2;
          m.set(i, j, v);
          dense[i][j] = (v % p + p) % p;
        }
    // duplicate rows to force dependencies
    if (r > 2) {
      for (std::size_t j = 0; j < c; ++j) {
        m.set(r - 1, j, m.at(0, j));
        dense[r - 1][j] = dense[0][j];
      }
    }
    const auto expect = oracle::rank_mod(dense, p);
    CHECK(rank_serial(m) == expect);
    CHECK(rank_parallel(m) == expect);
  }
  CHECK(is_prime(32003));
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(32001));
  CHECK(inverse_mod(3, 7) == 5);
}

TEST_CASE("Koszul tables agree with the semigroup oracle") {
  std::vector<std::pair<PlanarLattice, RankWindow>> cases = {
      {full_grid(2, 2), {1, 3}},
      {full_grid(2, 1), {0, 3}},
      {full_grid(3, 1), {0, 4}},
      {full_grid(3, 1), {1, 4}},
      {full_grid(2, 2), {1, 4}},
      {full_grid(2, 2), {0, 3}},
      {staircase({0, 0, 1}, {2, 2, 2}), {0, 4}},
      {staircase({0, 0, 1}, {2, 2, 2}), {1, 3}},
      {staircase({0, 0, 0}, {1, 2, 2}), {0, 4}},
      {staircase_example(), {5, 7}},
      {staircase_example(), {6, 8}},
  };
  for (const auto& [L, w] : cases) {
    auto I = make(L, w);
    CAPTURE(to_string(w));
    CAPTURE(I.map.nvars());
    const int jlim = std::min<int>(6, static_cast<int>(I.map.nvars()));
    auto table = betti_numbers(I.gens, I.map);
    auto expect = oracle::semigroup_betti(I.map, jlim);
    CHECK(up_to(table.entries, jlim) == expect);
  }
}

TEST_CASE("Euler characteristic and policies") {
  CorpusSpec spec;
  spec.seed = 29;
  spec.count = 16;
  spec.max_m = 3;
  spec.max_n = 3;
  int checked = 0;
  for (const auto& e : generate_corpus(spec))
    for (RankWindow w : all_windows(e.lattice, false)) {
      MonomialMap map(e.lattice, w);
      if (map.nvars() > 9 || map.nvars() < 2) continue;
      auto I = make(e.lattice, w);
      CAPTURE(e.name);
      CAPTURE(to_string(w));
      BettiOptions par, ser;
      par.full_range = ser.full_range = true;
      ser.policy = ExecPolicy::kSerial;
      auto t = betti_numbers(I.gens, I.map, par);
      CHECK(t == betti_numbers(I.gens, I.map, ser));
      auto hf = hilbert_function(I.gb, I.map.nvars(), static_cast<int>(I.map.nvars()));
      for (int j = 0; j <= static_cast<int>(I.map.nvars()); ++j) CHECK(euler_consistent(t, hf, j));
      CHECK(krull_dimension_via_initial(I.gb, I.map.nvars()) ==
            oracle::krull_dimension(I.gb, I.map.nvars()));
      CHECK(krull_dimension_via_initial(I.gb, I.map.nvars()) == dimension(e.lattice, w));
      if (t.at(0, 2) >= 2) CHECK(t.at(1, 3) + t.at(1, 4) >= 1);
      ++checked;
    }
  CHECK(checked > 50);
}

TEST_CASE("variable order does not change the table") {
  auto L = full_grid(2, 2);
  auto I = make(L, {1, 4});
  BettiOptions a, b;
  a.order = OrderKind::kRankLex;
  b.order = OrderKind::kRevlex;
  CHECK(betti_numbers(I.gens, I.map, a) == betti_numbers(I.gens, I.map, b));
}
