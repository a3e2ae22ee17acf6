#include "hibi/betti.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace hibi {

namespace {

/// Standard monomials of the initial ideal, generated degree by degree:
/// every standard monomial of degree d is a standard monomial of degree
/// d - 1 times a variable at least as large as its largest index.
class StandardMonomials {
 public:
  StandardMonomials(const GroebnerReport& gb, std::size_t nvars, std::size_t budget)
      : basis_(gb.basis), nvars_(nvars), budget_(budget), leads_with_var_(nvars) {
    for (std::size_t g = 0; g < basis_.size(); ++g)
      for (std::size_t v = 0; v < nvars; ++v)
        if (basis_[g].lead[v]) leads_with_var_[v].push_back(g);
    levels_.push_back({Monomial(nvars)});
    max_var_.push_back({0});
    index_.emplace_back();
    index_[0].emplace(Monomial(nvars), 0);
  }

  const std::vector<Monomial>& of_degree(int d) {
    while (static_cast<int>(levels_.size()) <= d) extend();
    return levels_[static_cast<std::size_t>(d)];
  }

  std::optional<std::uint32_t> index_of(const Monomial& u) {
    of_degree(u.degree());
    const auto& idx = index_[static_cast<std::size_t>(u.degree())];
    auto it = idx.find(u);
    if (it == idx.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<Binomial>& basis() const { return basis_; }

 private:
  void extend() {
    const auto& prev = levels_.back();
    const auto& prev_max = max_var_.back();
    std::vector<Monomial> next;
    std::vector<std::size_t> next_max;
    for (std::size_t k = 0; k < prev.size(); ++k) {
      const std::size_t start = levels_.size() == 1 ? 0 : prev_max[k];
      for (std::size_t v = start; v < nvars_; ++v) {
        Monomial w = prev[k];
        w.multiply_by(v);
        bool standard = std::none_of(
            leads_with_var_[v].begin(), leads_with_var_[v].end(),
            [&](std::size_t g) { return basis_[g].lead.divides(w); });
        if (!standard) continue;
        next.push_back(std::move(w));
        next_max.push_back(v);
        if (next.size() > budget_)
          throw Error(ErrorCode::kBudgetExceeded,
                      "standard monomial enumeration exceeds the budget");
      }
    }
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> idx;
    idx.reserve(next.size());
    for (std::size_t k = 0; k < next.size(); ++k)
      idx.emplace(next[k], static_cast<std::uint32_t>(k));
    levels_.push_back(std::move(next));
    max_var_.push_back(std::move(next_max));
    index_.push_back(std::move(idx));
  }

  std::vector<Binomial> basis_;
  std::size_t nvars_;
  std::size_t budget_;
  std::vector<std::vector<std::size_t>> leads_with_var_;
  std::vector<std::vector<Monomial>> levels_;
  std::vector<std::vector<std::size_t>> max_var_;
  std::vector<std::unordered_map<Monomial, std::uint32_t, MonomialHash>> index_;
};

long long binomial_coefficient(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long c = 1;
  for (long long t = 1; t <= k; ++t) c = c * (n - k + t) / t;
  return c;
}

// Koszul homology of S/I restricted to one total degree at a time.
class KoszulEngine {
 public:
  KoszulEngine(const GroebnerReport& gb, const MonomialMap& map, const BettiOptions& options)
      : standard_(gb, map.nvars(), options.budget),
        map_(map),
        nvars_(map.nvars()),
        prime_(options.prime),
        budget_(options.budget),
        policy_(options.policy) {}

  /// h_s for s in [s_lo, s_hi] in total degree j.
  std::vector<std::size_t> homology(int j, int s_lo, int s_hi) {
    std::vector<std::size_t> result(static_cast<std::size_t>(std::max(0, s_hi - s_lo + 1)), 0);
    if (s_hi < s_lo) return result;
    const int k_lo = std::max(0, s_lo - 1);
    const int k_hi = std::min({static_cast<int>(nvars_), s_hi + 1, j});

    for (int k = std::max(1, k_lo); k <= k_hi; ++k) times_table(j - k);

    // Elements e_A (x) u keyed by the multidegree of A plus that of u.
    struct Elem {
      std::uint32_t block;
      std::uint32_t k;
      std::uint64_t mask;
      std::uint32_t u;
    };
    std::vector<Elem> elems;
    std::unordered_map<MultiDegree, std::uint32_t, MultiDegreeHash> block_of;
    for (int k = k_lo; k <= k_hi; ++k) {
      const auto& monos = standard_.of_degree(j - k);
      std::vector<MultiDegree> mono_deg(monos.size());
      for (std::size_t u = 0; u < monos.size(); ++u) mono_deg[u] = map_.image(monos[u]);
      for_each_subset(static_cast<unsigned>(k), [&](std::uint64_t mask) {
        MultiDegree base{};
        for (std::uint64_t rest = mask; rest; rest &= rest - 1)
          add_into(base, map_.image(static_cast<std::size_t>(std::countr_zero(rest))));
        for (std::size_t u = 0; u < monos.size(); ++u) {
          MultiDegree key = base;
          add_into(key, mono_deg[u]);
          auto [it, fresh] =
              block_of.try_emplace(key, static_cast<std::uint32_t>(block_of.size()));
          elems.push_back({it->second, static_cast<std::uint32_t>(k), mask,
                           static_cast<std::uint32_t>(u)});
        }
        if (elems.size() > budget_)
          throw Error(ErrorCode::kCapExceeded,
                      "Koszul strand in degree " + std::to_string(j) + " exceeds the budget");
      });
    }
    std::sort(elems.begin(), elems.end(), [](const Elem& a, const Elem& b) {
      return std::tie(a.block, a.k, a.mask, a.u) < std::tie(b.block, b.k, b.mask, b.u);
    });
    std::vector<std::size_t> starts;
    for (std::size_t e = 0; e < elems.size(); ++e)
      if (e == 0 || elems[e].block != elems[e - 1].block) starts.push_back(e);
    starts.push_back(elems.size());

    std::atomic<bool> inconsistent{false};
    const auto nblocks = static_cast<std::ptrdiff_t>(starts.size() - 1);
    auto process = [&](std::ptrdiff_t b, std::vector<std::size_t>& acc) {
      const std::size_t begin = starts[static_cast<std::size_t>(b)];
      const std::size_t end = starts[static_cast<std::size_t>(b) + 1];
      // Sub-range of each exterior degree k inside the block.
      std::vector<std::size_t> lo(static_cast<std::size_t>(k_hi + 2), begin);
      std::vector<std::size_t> hi(static_cast<std::size_t>(k_hi + 2), begin);
      for (int k = k_lo; k <= k_hi; ++k) {
        auto first = std::lower_bound(elems.begin() + begin, elems.begin() + end, k,
                                      [](const Elem& e, int kk) { return e.k < static_cast<std::uint32_t>(kk); });
        auto last = std::upper_bound(first, elems.begin() + end, k,
                                     [](int kk, const Elem& e) { return static_cast<std::uint32_t>(kk) < e.k; });
        lo[k] = static_cast<std::size_t>(first - elems.begin());
        hi[k] = static_cast<std::size_t>(last - elems.begin());
      }
      auto count = [&](int k) -> std::size_t {
        if (k < k_lo || k > k_hi) return 0;
        return hi[k] - lo[k];
      };
      auto boundary_rank = [&](int k) -> std::size_t {
        if (k < 1 || k < k_lo + 1 || k > k_hi || count(k) == 0 || count(k - 1) == 0) return 0;
        const int t = j - k;  // degree of u in the source
        const auto& table = times_[static_cast<std::size_t>(t)];
        ModMatrix d(count(k), count(k - 1), prime_);
        for (std::size_t r = lo[k]; r < hi[k]; ++r) {
          const Elem& e = elems[r];
          int pos = 0;
          for (std::uint64_t rest = e.mask; rest; rest &= rest - 1, ++pos) {
            const auto a = static_cast<std::size_t>(std::countr_zero(rest));
            const std::uint64_t tmask = e.mask & ~(std::uint64_t{1} << a);
            const std::uint32_t tu = table[static_cast<std::size_t>(e.u) * nvars_ + a];
            auto it = std::lower_bound(
                elems.begin() + static_cast<std::ptrdiff_t>(lo[k - 1]),
                elems.begin() + static_cast<std::ptrdiff_t>(hi[k - 1]), std::pair(tmask, tu),
                [](const Elem& x, const std::pair<std::uint64_t, std::uint32_t>& key) {
                  return std::pair(x.mask, x.u) < key;
                });
            if (it == elems.begin() + static_cast<std::ptrdiff_t>(hi[k - 1]) ||
                it->mask != tmask || it->u != tu) {
              inconsistent = true;
              return 0;
            }
            d.add(r - lo[k], static_cast<std::size_t>(it - elems.begin()) - lo[k - 1],
                  pos % 2 == 0 ? 1 : -1);
          }
        }
        return rank_serial(std::move(d));
      };
      std::vector<std::size_t> ranks(static_cast<std::size_t>(s_hi + 3), 0);
      for (int k = s_lo; k <= s_hi + 1; ++k) ranks[static_cast<std::size_t>(k)] = boundary_rank(k);
      for (int s = s_lo; s <= s_hi; ++s) {
        const std::size_t n = count(s);
        const std::size_t r = ranks[static_cast<std::size_t>(s)] + ranks[static_cast<std::size_t>(s) + 1];
        acc[static_cast<std::size_t>(s - s_lo)] += n - r;
      }
    };

    if (policy_ == ExecPolicy::kParallel) {
#pragma omp parallel
      {
        std::vector<std::size_t> local(result.size(), 0);
#pragma omp for schedule(dynamic, 16)
        for (std::ptrdiff_t b = 0; b < nblocks; ++b) process(b, local);
#pragma omp critical
        for (std::size_t s = 0; s < result.size(); ++s) result[s] += local[s];
      }
    } else {
      for (std::ptrdiff_t b = 0; b < nblocks; ++b) process(b, result);
    }
    if (inconsistent)
      throw Error(ErrorCode::kOracleInconsistency,
                  "normal form left the multidegree block; basis is not a Groebner basis "
                  "of a fine-graded ideal");
    return result;
  }

  int nvars() const { return static_cast<int>(nvars_); }

 private:
  template <typename F>
  void for_each_subset(unsigned k, F&& f) const {
    if (k > nvars_) return;
    if (k == 0) {
      f(std::uint64_t{0});
      return;
    }
    const std::uint64_t limit = nvars_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nvars_) - 1;
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    while (mask <= limit) {
      f(mask);
      // Gosper's hack
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      if (r == 0 || r > limit) break;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }

  // times_[t][u * N + a] = index of NF(x_a * u) among standard monomials of
  // degree t + 1.
  void times_table(int t) {
    if (t < 0) return;
    if (times_.size() <= static_cast<std::size_t>(t)) times_.resize(static_cast<std::size_t>(t) + 1);
    auto& table = times_[static_cast<std::size_t>(t)];
    if (!table.empty()) return;
    const auto monos = standard_.of_degree(t);
    standard_.of_degree(t + 1);
    table.assign(monos.size() * nvars_, 0);
    for (std::size_t u = 0; u < monos.size(); ++u)
      for (std::size_t a = 0; a < nvars_; ++a) {
        Monomial w = monos[u];
        w.multiply_by(a);
        auto idx = standard_.index_of(normal_form(std::move(w), standard_.basis()));
        if (!idx)
          throw Error(ErrorCode::kOracleInconsistency, "normal form is not a standard monomial");
        table[u * nvars_ + a] = *idx;
      }
  }

  StandardMonomials standard_;
  const MonomialMap& map_;
  std::size_t nvars_;
  std::uint32_t prime_;
  std::size_t budget_;
  ExecPolicy policy_;
  std::vector<std::vector<std::uint32_t>> times_;
};

GroebnerReport basis_for(std::span<const Binomial> gens, const MonomialMap& map,
                         const BettiOptions& options) {
  if (options.order)
    return buchberger(gens, MonomialOrder(*options.order, map.variables()));
  return buchberger_auto(gens, map.variables());
}

void check_prime(std::uint32_t p) {
  if (!is_prime(p) || p < 32003 || p >= (1u << 31))
    throw Error(ErrorCode::kInvalidInput,
                "field characteristic must be a prime in [32003, 2^31)");
}

// Largest strand t = j - s of S/I that can carry homology.
int strand_bound(const GroebnerReport& gb, std::size_t nvars, const BettiOptions& options,
                 std::string& source) {
  if (!gb.squarefree) {
    source = "none";
    return options.j_max >= 0 ? options.j_max : static_cast<int>(nvars);
  }
  const int d = krull_dimension_via_initial(gb, nvars);
  if (options.full_range) {
    source = "krull-dimension";
    return std::max(2, d);
  }
  auto h = h_polynomial(gb, nvars, options.budget);
  int deg = 0;
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k] != 0) deg = static_cast<int>(k);
  source = "h-polynomial";
  return std::max(2, std::min(deg, d));
}

}  // namespace

std::vector<std::size_t> hilbert_function(const GroebnerReport& gb, std::size_t nvars,
                                          int d_max, std::size_t budget) {
  StandardMonomials standard(gb, nvars, budget);
  std::vector<std::size_t> out;
  for (int d = 0; d <= d_max; ++d) out.push_back(standard.of_degree(d).size());
  return out;
}

int krull_dimension_via_initial(const GroebnerReport& gb, std::size_t nvars) {
  if (nvars > 64) throw Error(ErrorCode::kCapExceeded, "more than 64 variables");
  std::vector<std::uint64_t> supports;
  for (const auto& g : gb.basis) supports.push_back(g.lead.support());
  const bool graph = std::all_of(supports.begin(), supports.end(),
                                 [](std::uint64_t s) { return std::popcount(s) == 2; });
  const std::uint64_t all =
      nvars == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nvars) - 1;

  if (graph) {
    // Maximum independent set: take vertices of degree <= 1 greedily,
    // otherwise branch on a vertex of maximum degree.
    std::vector<std::uint64_t> nbr(nvars, 0);
    for (std::uint64_t s : supports) {
      const auto a = static_cast<std::size_t>(std::countr_zero(s));
      const auto b = static_cast<std::size_t>(63 - std::countl_zero(s));
      nbr[a] |= std::uint64_t{1} << b;
      nbr[b] |= std::uint64_t{1} << a;
    }
    std::function<int(std::uint64_t)> mis = [&](std::uint64_t alive) -> int {
      if (!alive) return 0;
      int best_v = -1, best_deg = -1;
      for (std::uint64_t rest = alive; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int deg = std::popcount(nbr[static_cast<std::size_t>(v)] & alive);
        if (deg <= 1) {
          return 1 + mis(alive & ~(std::uint64_t{1} << v) & ~nbr[static_cast<std::size_t>(v)]);
        }
        if (deg > best_deg) {
          best_deg = deg;
          best_v = v;
        }
      }
      const std::uint64_t bit = std::uint64_t{1} << best_v;
      const int without = mis(alive & ~bit);
      const int with = 1 + mis(alive & ~bit & ~nbr[static_cast<std::size_t>(best_v)]);
      return std::max(without, with);
    };
    return mis(all);
  }

  // General monomial initial ideal: faces avoid containing any support.
  int best = 0;
  std::function<void(std::size_t, std::uint64_t, int)> grow = [&](std::size_t v,
                                                                 std::uint64_t face, int size) {
    best = std::max(best, size);
    if (size + static_cast<int>(nvars - v) <= best) return;
    for (std::size_t w = v; w < nvars; ++w) {
      const std::uint64_t next = face | (std::uint64_t{1} << w);
      bool ok = std::none_of(supports.begin(), supports.end(),
                             [&](std::uint64_t s) { return (s & next) == s; });
      if (ok) grow(w + 1, next, size + 1);
      if (size + static_cast<int>(nvars - w) - 1 <= best) return;
    }
  };
  grow(0, 0, 0);
  return best;
}

std::vector<long long> h_polynomial(const GroebnerReport& gb, std::size_t nvars,
                                    std::size_t budget) {
  const int d = krull_dimension_via_initial(gb, nvars);
  auto hf = hilbert_function(gb, nvars, d, budget);
  std::vector<long long> h(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= k; ++i)
      h[static_cast<std::size_t>(k)] += (i % 2 ? -1 : 1) * binomial_coefficient(d, i) *
                                         static_cast<long long>(hf[static_cast<std::size_t>(k - i)]);
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

std::size_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::string format_macaulay(const BettiTable& table) {
  int cols = 0, row_lo = 2, row_hi = 2;
  for (const auto& [key, value] : table.entries) {
    cols = std::max(cols, key.first + 1);
    row_hi = std::max(row_hi, key.second - key.first);
    row_lo = std::min(row_lo, key.second - key.first);
  }
  std::ostringstream os;
  auto cell = [&](const std::string& s) {
    os << ' ';
    for (std::size_t pad = s.size(); pad < 5; ++pad) os << ' ';
    os << s;
  };
  os << "       ";
  for (int i = 0; i < cols; ++i) cell(std::to_string(i));
  os << "\ntotal:";
  for (int i = 0; i < cols; ++i) {
    std::size_t total = 0;
    for (const auto& [key, value] : table.entries)
      if (key.first == i) total += value;
    cell(std::to_string(total));
  }
  os << '\n';
  for (int r = row_lo; r <= row_hi && cols > 0; ++r) {
    std::string label = std::to_string(r) + ":";
    for (std::size_t pad = label.size(); pad < 6; ++pad) os << ' ';
    os << label;
    for (int i = 0; i < cols; ++i) {
      std::size_t v = table.at(i, i + r);
      cell(v ? std::to_string(v) : ".");
    }
    os << '\n';
  }
  return os.str();
}

BettiTable betti_numbers(std::span<const Binomial> gens, const MonomialMap& map,
                         const BettiOptions& options) {
  check_prime(options.prime);
  const std::size_t n = map.nvars();
  if (n > options.cap_vars)
    throw Error(ErrorCode::kCapExceeded, std::to_string(n) + " variables exceed the cap of " +
                                             std::to_string(options.cap_vars));
  BettiTable table;
  table.nvars = n;
  table.prime = options.prime;
  table.j_max = options.j_max >= 0 ? options.j_max : static_cast<int>(n);
  table.i_max = options.i_max >= 0 ? options.i_max : std::max(0, static_cast<int>(n) - 1);
  if (gens.empty()) {
    table.bound_source = "none";
    return table;
  }
  auto gb = basis_for(gens, map, options);
  const int strand = strand_bound(gb, n, options, table.bound_source);
  table.strand_max = strand + 1;
  KoszulEngine engine(gb, map, options);
  for (int j = 2; j <= table.j_max; ++j) {
    const int s_lo = std::max(1, j - strand);
    const int s_hi = std::min({j - 1, static_cast<int>(n), table.i_max + 1});
    auto h = engine.homology(j, s_lo, s_hi);
    for (int s = s_lo; s <= s_hi; ++s)
      if (auto v = h[static_cast<std::size_t>(s - s_lo)]) table.entries[{s - 1, j}] = v;
  }
  if (gb.quadratic)
    for (const auto& [key, value] : table.entries)
      if (key.first == 1 && key.second > 4)
        throw Error(ErrorCode::kOracleInconsistency,
                    "first syzygy in degree " + std::to_string(key.second) +
                        " for an ideal with a quadratic Groebner basis");
  return table;
}

bool has_linear_resolution_oracle(std::span<const Binomial> gens, const MonomialMap& map,
                                  const BettiOptions& options) {
  check_prime(options.prime);
  if (gens.empty()) return true;
  const std::size_t n = map.nvars();
  if (n > options.cap_vars)
    throw Error(ErrorCode::kCapExceeded, std::to_string(n) + " variables exceed the cap of " +
                                             std::to_string(options.cap_vars));
  auto gb = basis_for(gens, map, options);
  std::string source;
  const int strand = strand_bound(gb, n, options, source);
  const int j_max = options.j_max >= 0 ? options.j_max : static_cast<int>(n);
  KoszulEngine engine(gb, map, options);
  // Off-linear strands of S/I are t = j - s >= 2.
  for (int j = 3; j <= j_max; ++j) {
    const int s_lo = std::max(1, j - strand);
    const int s_hi = std::min(j - 2, static_cast<int>(n));
    auto h = engine.homology(j, s_lo, s_hi);
    if (std::any_of(h.begin(), h.end(), [](std::size_t v) { return v != 0; })) return false;
  }
  return true;
}

bool is_linearly_related_oracle(std::span<const Binomial> gens, const MonomialMap& map,
                                const BettiOptions& options) {
  check_prime(options.prime);
  if (gens.empty()) return true;
  const std::size_t n = map.nvars();
  if (n > options.linrel_cap_vars)
    throw Error(ErrorCode::kCapExceeded, std::to_string(n) + " variables exceed the cap of " +
                                             std::to_string(options.linrel_cap_vars));
  auto gb = basis_for(gens, map, options);
  KoszulEngine engine(gb, map, options);
  return engine.homology(4, 2, 2)[0] == 0;
}

bool euler_consistent(const BettiTable& table, std::span<const std::size_t> hilbert, int j) {
  const auto n = static_cast<long long>(table.nvars);
  long long lhs = 0;
  for (long long s = 0; s <= std::min<long long>(n, j); ++s) {
    const auto t = static_cast<std::size_t>(j - s);
    if (t >= hilbert.size()) return false;
    lhs += (s % 2 ? -1 : 1) * binomial_coefficient(n, s) * static_cast<long long>(hilbert[t]);
  }
  long long rhs = j == 0 ? 1 : 0;
  for (const auto& [key, value] : table.entries)
    if (key.second == j) rhs += ((key.first + 1) % 2 ? -1 : 1) * static_cast<long long>(value);
  return lhs == rhs;
}

}  // namespace hibi
