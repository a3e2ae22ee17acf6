#include "hibi/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace hibi {

namespace {

std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g,
                                   const MonomialOrder& order) {
  Monomial l = lcm(f.lead, g.lead);
  Monomial a = l;
  a.divide_by(f.lead);
  a.multiply_by(f.trail);
  Monomial b = l;
  b.divide_by(g.lead);
  b.multiply_by(g.trail);
  return make_binomial(std::move(a), std::move(b), order);
}

std::vector<Binomial> interreduce(std::vector<Binomial> basis, const MonomialOrder& order) {
  // Minimal basis: drop elements whose lead is divisible by another lead.
  std::vector<Binomial> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < basis.size() && !redundant; ++l) {
      if (l == k || !basis[l].lead.divides(basis[k].lead)) continue;
      redundant = !(basis[l].lead == basis[k].lead) || l < k;
    }
    if (!redundant) minimal.push_back(basis[k]);
  }
  std::vector<Binomial> reduced;
  for (const auto& g : minimal) {
    Monomial trail = normal_form(g.trail, minimal);
    if (auto b = make_binomial(g.lead, std::move(trail), order)) reduced.push_back(*b);
  }
  return normalized(reduced, order);
}

}  // namespace

GroebnerReport buchberger(std::span<const Binomial> gens, const MonomialOrder& order,
                          const BuchbergerOptions& options) {
  GroebnerReport report;
  report.order = order.kind();
  std::vector<Binomial> basis = normalized(gens, order);

  // (lcm degree, first, second); the set keeps selection deterministic.
  std::set<std::tuple<int, std::size_t, std::size_t>> pairs;
  auto add_pairs = [&](std::size_t k) {
    for (std::size_t l = 0; l < k; ++l)
      pairs.emplace(lcm(basis[l].lead, basis[k].lead).degree(), l, k);
  };
  for (std::size_t k = 0; k < basis.size(); ++k) add_pairs(k);

  while (!pairs.empty()) {
    auto [deg, l, k] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (basis[l].lead.coprime(basis[k].lead)) continue;
    if (++report.spairs_processed > options.max_pairs)
      throw Error(ErrorCode::kBudgetExceeded, "Buchberger pair budget exhausted");
    auto s = s_binomial(basis[l], basis[k], order);
    if (!s) continue;
    auto h = normal_form(*s, basis, order);
    if (!h) continue;
    basis.push_back(std::move(*h));
    if (options.stop_on_nonquadratic && basis.back().degree() > 2) {
      report.complete = false;
      break;
    }
    add_pairs(basis.size() - 1);
  }

  report.basis = report.complete ? interreduce(std::move(basis), order) : std::move(basis);
  report.quadratic = std::all_of(report.basis.begin(), report.basis.end(),
                                 [](const Binomial& b) { return b.degree() == 2; });
  report.squarefree = std::all_of(report.basis.begin(), report.basis.end(), [](const Binomial& b) {
    return b.lead.squarefree() && b.trail.squarefree();
  });
  return report;
}

GroebnerReport buchberger_auto(std::span<const Binomial> gens,
                               std::span<const Point> variables,
                               const BuchbergerOptions& options) {
  std::vector<OrderKind> rejected;
  for (OrderKind kind : kCandidateOrders) {
    MonomialOrder order(kind, variables);
    BuchbergerOptions opts = options;
    opts.stop_on_nonquadratic = true;
    auto report = buchberger(gens, order, opts);
    if (report.complete && report.quadratic && report.squarefree) {
      report.rejected_orders = rejected;
      return report;
    }
    rejected.push_back(kind);
  }
  auto report = buchberger(gens, MonomialOrder(OrderKind::kRankLex, variables), options);
  report.rejected_orders = rejected;
  return report;
}

bool is_groebner_basis(std::span<const Binomial> basis, const MonomialOrder& order) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t l = k + 1; l < basis.size(); ++l) {
      auto s = s_binomial(basis[k], basis[l], order);
      if (s && normal_form(*s, basis, order)) return false;
    }
  return true;
}

}  // namespace hibi
