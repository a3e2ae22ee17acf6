#include "hibi/binomial.hpp"

#include <algorithm>
#include <string_view>

namespace hibi {

Monomial Monomial::variable(std::size_t nvars, std::size_t v) {
  Monomial m(nvars);
  m.multiply_by(v);
  return m;
}

Monomial Monomial::product(std::size_t nvars, std::size_t a, std::size_t b) {
  Monomial m(nvars);
  m.multiply_by(a);
  m.multiply_by(b);
  return m;
}

void Monomial::multiply_by(const Monomial& other) {
  for (std::size_t v = 0; v < exps_.size(); ++v) exps_[v] += other.exps_[v];
  degree_ += other.degree_;
}

void Monomial::divide_by(const Monomial& divisor) {
  for (std::size_t v = 0; v < exps_.size(); ++v) exps_[v] -= divisor.exps_[v];
  degree_ -= divisor.degree_;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v] > other.exps_[v]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v] && other.exps_[v]) return false;
  return true;
}

bool Monomial::squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e <= 1; });
}

std::uint64_t Monomial::support() const {
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v]) mask |= std::uint64_t{1} << v;
  return mask;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    out.exps_[v] = std::max(a.exps_[v], b.exps_[v]);
    out.degree_ += out.exps_[v];
  }
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  const auto& e = m.exponents();
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(e.data()), e.size()));
}

// ---------------------------------------------------------------- orders

std::string_view order_name(OrderKind kind) {
  switch (kind) {
    case OrderKind::kRankLex: return "rank-lex";
    case OrderKind::kRankRevlex: return "rank-revlex";
    case OrderKind::kLex: return "lex";
    case OrderKind::kRevlex: return "revlex";
  }
  return "?";
}

std::optional<OrderKind> parse_order(std::string_view name) {
  for (OrderKind k : kCandidateOrders)
    if (order_name(k) == name) return k;
  return std::nullopt;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::span<const Point> variables)
    : kind_(kind) {
  const bool by_rank = kind == OrderKind::kRankLex || kind == OrderKind::kRankRevlex;
  for (std::size_t v = 0; v < variables.size(); ++v) descending_.push_back(v);
  auto key = [&](std::size_t v) {
    Point a = variables[v];
    return by_rank ? std::pair(a.rank(), a.i) : std::pair(a.i, a.j);
  };
  std::sort(descending_.begin(), descending_.end(),
            [&](std::size_t a, std::size_t b) { return key(a) > key(b); });
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == OrderKind::kRankLex || kind_ == OrderKind::kLex) {
    for (std::size_t v : descending_)
      if (a[v] != b[v]) return a[v] <=> b[v];
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (auto it = descending_.rbegin(); it != descending_.rend(); ++it)
    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  return std::strong_ordering::equal;
}

std::optional<Binomial> make_binomial(Monomial a, Monomial b, const MonomialOrder& order) {
  auto c = order.compare(a, b);
  if (c == std::strong_ordering::equal) return std::nullopt;
  if (c == std::strong_ordering::less) std::swap(a, b);
  return Binomial{std::move(a), std::move(b)};
}

std::vector<Binomial> normalized(std::span<const Binomial> binomials,
                                 const MonomialOrder& order) {
  std::vector<Binomial> out;
  for (const auto& b : binomials)
    if (auto nb = make_binomial(b.lead, b.trail, order)) out.push_back(std::move(*nb));
  std::sort(out.begin(), out.end(), [&](const Binomial& x, const Binomial& y) {
    auto c = order.compare(x.lead, y.lead);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return order.compare(x.trail, y.trail) == std::strong_ordering::less;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------- toric map

std::size_t MultiDegreeHash::operator()(const MultiDegree& d) const noexcept {
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(d.data()), d.size()));
}

void add_into(MultiDegree& acc, const MultiDegree& d) {
  for (std::size_t k = 0; k < kMaxGradingDim; ++k) acc[k] += d[k];
}

bool subtract_from(MultiDegree& acc, const MultiDegree& d) {
  for (std::size_t k = 0; k < kMaxGradingDim; ++k) {
    if (acc[k] < d[k]) return false;
    acc[k] -= d[k];
  }
  return true;
}

MonomialMap::MonomialMap(int m, int n, std::vector<Point> variables)
    : m_(m), n_(n), variables_(std::move(variables)) {
  if (grading_dim() > kMaxGradingDim)
    throw Error(ErrorCode::kCapExceeded, "lattice too large for the fine grading");
  for (Point a : variables_) {
    MultiDegree d{};
    d[static_cast<std::size_t>(a.i)] = 1;
    d[static_cast<std::size_t>(m_ + 1 + a.j)] = 1;
    images_.push_back(d);
  }
}

MonomialMap::MonomialMap(const PlanarLattice& lattice, RankWindow w)
    : MonomialMap(lattice.m(), lattice.n(), generators(lattice, w)) {}

MultiDegree MonomialMap::image(const Monomial& u) const {
  MultiDegree d{};
  for (std::size_t v = 0; v < u.nvars(); ++v)
    for (std::uint8_t e = 0; e < u[v]; ++e) add_into(d, images_[v]);
  return d;
}

// ---------------------------------------------------------------- ideal

std::vector<Binomial> defining_ideal_generators(const PlanarLattice& lattice,
                                                RankWindow w,
                                                const MonomialOrder& order) {
  const auto vars = generators(lattice, w);
  const std::size_t n = vars.size();
  auto index = [&](Point a) -> std::optional<std::size_t> {
    auto it = std::find(vars.begin(), vars.end(), a);
    if (it == vars.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars.begin());
  };
  std::vector<Binomial> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Point x = vars[a], y = vars[b];
      if (leq(x, y) || leq(y, x)) continue;
      auto lo = index(meet(x, y));
      auto hi = index(join(x, y));
      if (!lo || !hi) continue;  // meet or join rank outside the window
      if (auto bin = make_binomial(Monomial::product(n, a, b),
                                   Monomial::product(n, *lo, *hi), order))
        out.push_back(std::move(*bin));
    }
  return normalized(out, order);
}

Monomial normal_form(Monomial m, std::span<const Binomial> basis) {
  for (;;) {
    auto it = std::find_if(basis.begin(), basis.end(),
                           [&](const Binomial& g) { return g.lead.divides(m); });
    if (it == basis.end()) return m;
    m.divide_by(it->lead);
    m.multiply_by(it->trail);
  }
}

std::optional<Binomial> normal_form(const Binomial& b, std::span<const Binomial> basis,
                                    const MonomialOrder& order) {
  return make_binomial(normal_form(b.lead, basis), normal_form(b.trail, basis), order);
}

std::string to_string(const Monomial& m, std::span<const Point> variables) {
  bool wide = std::any_of(variables.begin(), variables.end(),
                          [](Point a) { return a.i >= 10 || a.j >= 10; });
  std::string out;
  for (std::size_t v = 0; v < m.nvars(); ++v) {
    if (!m[v]) continue;
    Point a = variables[v];
    out += "y_{" + std::to_string(a.i) + (wide ? "," : "") + std::to_string(a.j) + "}";
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Binomial& b, std::span<const Point> variables) {
  return to_string(b.lead, variables) + " - " + to_string(b.trail, variables);
}

}  // namespace hibi
