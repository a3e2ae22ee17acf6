#include "hibi/corpus.hpp"

#include <algorithm>

namespace hibi {

namespace {

constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::kNamed, "named"},
    {Family::kLinearFamilies, "linear-families"},
    {Family::kFullGrid, "full-grid"},
    {Family::kStaircase, "staircase"},
    {Family::kRandomPoset, "random-poset"},
};

// Uniform enough for corpus generation; raw draws keep the stream
// identical across standard libraries.
int draw(std::mt19937_64& rng, int lo, int hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (n == name) return fam;
  return std::nullopt;
}

PlanarLattice staircase(const std::vector<int>& lo, const std::vector<int>& hi) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < lo.size(); ++i)
    for (int j = lo[i]; j <= hi[i]; ++j) pts.push_back({static_cast<int>(i), j});
  return validate_planar_lattice(std::move(pts));
}

PlanarLattice staircase_example() {
  return staircase({0, 0, 0, 0, 2, 2}, {2, 3, 4, 4, 4, 4});
}

std::vector<CorpusEntry> named_lattices() {
  std::vector<CorpusEntry> out;
  out.push_back({"staircase-example", Family::kNamed, staircase_example()});
  out.push_back({"grid-1x1", Family::kNamed, full_grid(1, 1)});
  out.push_back({"grid-2x2", Family::kNamed, full_grid(2, 2)});
  out.push_back({"grid-3x3", Family::kNamed, full_grid(3, 3)});
  out.push_back({"grid-5x4", Family::kNamed, full_grid(5, 4)});
  out.push_back({"grid-2x2-minus-(2,0)", Family::kNamed, staircase({0, 0, 1}, {2, 2, 2})});
  return out;
}

std::vector<CorpusEntry> linear_families(int max_rank) {
  std::vector<CorpusEntry> out;
  for (int k = 1; k + 1 <= max_rank; ++k) {
    out.push_back({"chain-plus-point-" + std::to_string(k), Family::kLinearFamilies,
                   full_grid(k, 1)});
    if (k > 1)
      out.push_back({"point-plus-chain-" + std::to_string(k), Family::kLinearFamilies,
                     full_grid(1, k)});
  }
  if (max_rank >= 4) {
    out.push_back({"n-poset", Family::kLinearFamilies, staircase({0, 0, 1}, {2, 2, 2})});
    out.push_back({"n-poset-transposed", Family::kLinearFamilies, staircase({0, 0, 0}, {1, 2, 2})});
  }
  return out;
}

PlanarLattice random_staircase(std::mt19937_64& rng, int m, int n) {
  std::vector<int> lo(static_cast<std::size_t>(m) + 1), hi(static_cast<std::size_t>(m) + 1);
  hi[0] = m == 0 ? n : draw(rng, 0, n);
  for (std::size_t i = 1; i < hi.size(); ++i) hi[i] = draw(rng, hi[i - 1], n);
  hi.back() = n;
  lo[0] = 0;
  for (std::size_t i = 1; i < lo.size(); ++i) lo[i] = draw(rng, lo[i - 1], hi[i - 1]);
  return staircase(lo, hi);
}

PlanarLattice random_width2(std::mt19937_64& rng, int k) {
  k = std::max(k, 1);
  const int a = k == 1 ? 1 : draw(rng, 1, k - 1);
  const int b = k - a;
  std::vector<std::string> labels;
  for (int x = 0; x < a; ++x) labels.push_back("a" + std::to_string(x));
  for (int y = 0; y < b; ++y) labels.push_back("b" + std::to_string(y));
  std::vector<std::pair<std::string, std::string>> chains;
  for (int x = 0; x + 1 < a; ++x) chains.emplace_back(labels[x], labels[x + 1]);
  for (int y = 0; y + 1 < b; ++y) chains.emplace_back(labels[a + y], labels[a + y + 1]);
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto rel = chains;
    for (int x = 0; x < a; ++x)
      for (int y = 0; y < b; ++y) {
        const auto r = rng() % 8;
        if (r == 0) rel.emplace_back(labels[x], labels[a + y]);
        if (r == 1) rel.emplace_back(labels[a + y], labels[x]);
      }
    try {
      return poset_ideals_to_planar(Poset(labels, rel));
    } catch (const Error&) {
      // cyclic draw; try again
    }
  }
  return poset_ideals_to_planar(Poset(labels, chains));
}

std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec) {
  std::vector<CorpusEntry> out;
  auto wants = [&](Family f) {
    return std::find(spec.families.begin(), spec.families.end(), f) != spec.families.end();
  };
  if (wants(Family::kNamed))
    for (auto& e : named_lattices()) out.push_back(std::move(e));
  if (wants(Family::kLinearFamilies))
    for (auto& e : linear_families(6)) out.push_back(std::move(e));

  std::vector<Family> random;
  for (Family f : {Family::kFullGrid, Family::kStaircase, Family::kRandomPoset})
    if (wants(f)) random.push_back(f);
  if (random.empty()) return out;

  std::mt19937_64 rng(spec.seed);
  for (std::size_t k = 0; k < spec.count; ++k) {
    const Family f = random[k % random.size()];
    const int m = draw(rng, spec.min_m, spec.max_m);
    const int n = draw(rng, spec.min_n, spec.max_n);
    std::string name = std::string(family_name(f)) + "-" + std::to_string(k);
    switch (f) {
      case Family::kFullGrid:
        out.push_back({std::move(name), f, full_grid(m, n)});
        break;
      case Family::kStaircase:
        out.push_back({std::move(name), f, random_staircase(rng, m, n)});
        break;
      default:
        out.push_back({std::move(name), f, random_width2(rng, m + n)});
        break;
    }
  }
  return out;
}

}  // namespace hibi
