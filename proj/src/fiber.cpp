#include "hibi/fiber.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace hibi {

std::size_t default_budget() {
  if (const char* env = std::getenv("HIBI_LAB_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 2'000'000;
}

namespace {

// Number of monomials of degree d in n variables, saturating at cap + 1.
std::size_t count_monomials(std::size_t n, int d, std::size_t cap) {
  if (n == 0) return d == 0 ? 1 : 0;
  // C(n + d - 1, d), built incrementally.
  unsigned long long c = 1;
  for (int k = 1; k <= d; ++k) {
    c = c * (n - 1 + static_cast<unsigned long long>(k)) / static_cast<unsigned long long>(k);
    if (c > cap) return cap + 1;
  }
  return static_cast<std::size_t>(c);
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree,
                                          std::size_t budget) {
  if (count_monomials(nvars, degree, budget) > budget)
    throw Error(ErrorCode::kDegreeInfeasible,
                "degree " + std::to_string(degree) + " in " + std::to_string(nvars) +
                    " variables exceeds the enumeration budget");
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  // Nondecreasing index sequences v_1 <= ... <= v_d.
  std::vector<std::size_t> seq(static_cast<std::size_t>(degree), 0);
  for (;;) {
    Monomial m(nvars);
    for (std::size_t v : seq) m.multiply_by(v);
    out.push_back(std::move(m));
    std::ptrdiff_t k = degree - 1;
    while (k >= 0 && seq[static_cast<std::size_t>(k)] == nvars - 1) --k;
    if (k < 0) break;
    std::size_t next = seq[static_cast<std::size_t>(k)] + 1;
    for (auto t = static_cast<std::size_t>(k); t < seq.size(); ++t) seq[t] = next;
  }
  return out;
}

FiberCertificate toric_fiber_oracle(const MonomialMap& map, std::span<const Binomial> gens,
                                    int max_degree, const GroebnerReport* candidate,
                                    std::size_t budget) {
  FiberCertificate cert;
  const std::size_t n = map.nvars();
  for (const auto& g : gens)
    if (map.image(g.lead) != map.image(g.trail)) cert.membership = false;

  for (int e = 0; e <= max_degree; ++e) {
    FiberLevel level;
    level.degree = e;
    auto monos = monomials_of_degree(n, e, budget);
    level.monomials = monos.size();
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    index.reserve(monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);

    std::unordered_map<MultiDegree, std::size_t, MultiDegreeHash> fiber_of;
    std::vector<std::size_t> fiber(monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k)
      fiber[k] = fiber_of.try_emplace(map.image(monos[k]), fiber_of.size()).first->second;
    level.fibers = fiber_of.size();

    DisjointSets sets(monos.size());
    std::size_t components = monos.size();
    for (const auto& g : gens) {
      if (g.degree() > e) continue;
      for (const auto& u : monomials_of_degree(n, e - g.degree(), budget)) {
        Monomial a = u, b = u;
        a.multiply_by(g.lead);
        b.multiply_by(g.trail);
        if (sets.unite(index.at(a), index.at(b))) --components;
      }
    }
    level.span_rank = monos.size() - components;
    level.generation = cert.membership && components == level.fibers;

    if (candidate) {
      std::vector<std::unordered_set<Monomial, MonomialHash>> forms(level.fibers);
      std::unordered_set<Monomial, MonomialHash> all_forms;
      for (std::size_t k = 0; k < monos.size(); ++k) {
        Monomial nf = normal_form(monos[k], candidate->basis);
        forms[fiber[k]].insert(nf);
        all_forms.insert(std::move(nf));
      }
      level.distinct_normal_forms = all_forms.size();
      level.groebner = std::all_of(forms.begin(), forms.end(),
                                   [](const auto& f) { return f.size() == 1; }) &&
                       all_forms.size() == level.fibers;
    }
    cert.generation = cert.generation && level.generation;
    cert.groebner = cert.groebner && (candidate == nullptr || level.groebner);
    cert.levels.push_back(level);
  }
  if (!candidate) cert.groebner = false;
  return cert;
}

}  // namespace hibi
