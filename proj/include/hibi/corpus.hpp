#pragma once

// Deterministic lattice corpora for sweeps and property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hibi/lattice.hpp"

namespace hibi {

enum class Family {
  kNamed,           // fixed lattices used throughout the tests
  kLinearFamilies,  // chain + point and the N poset at several sizes
  kFullGrid,
  kStaircase,
  kRandomPoset,
};

std::string_view family_name(Family f);
/// "named", "linear-families", "full-grid", "staircase", "random-poset".
std::optional<Family> parse_family(std::string_view name);

struct CorpusSpec {
  std::uint64_t seed = 0;
  /// Random lattices drawn from the random families, round robin.
  std::size_t count = 10;
  int min_m = 1, max_m = 4;
  int min_n = 1, max_n = 4;
  std::vector<Family> families = {Family::kNamed, Family::kLinearFamilies, Family::kFullGrid,
                                  Family::kStaircase, Family::kRandomPoset};
};

struct CorpusEntry {
  std::string name;
  Family family;
  PlanarLattice lattice;
};

/// The lattice drawn in the window example: columns i = 0..5 holding
/// j in [0,2], [0,3], [0,4], [0,4], [2,4], [2,4].
PlanarLattice staircase_example();

/// Columns i = 0..m hold j in [lo[i], hi[i]].
PlanarLattice staircase(const std::vector<int>& lo, const std::vector<int>& hi);

std::vector<CorpusEntry> named_lattices();
std::vector<CorpusEntry> linear_families(int max_rank);

PlanarLattice random_staircase(std::mt19937_64& rng, int m, int n);
/// Width-2 poset on k elements, lattice of its order ideals.
PlanarLattice random_width2(std::mt19937_64& rng, int k);

/// Named and family entries first (not counted), then `count` random ones.
std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec);

}  // namespace hibi
