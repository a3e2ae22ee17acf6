#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hibi/binomial.hpp"

namespace hibi {

struct GroebnerReport {
  std::vector<Binomial> basis;  // reduced, sorted by (lead, trail)
  bool quadratic = false;
  bool squarefree = false;
  std::size_t spairs_processed = 0;
  OrderKind order = OrderKind::kRankLex;
  /// False when the run stopped early at the first non-quadratic element.
  bool complete = true;
  /// Orders tried before this one (auto mode).
  std::vector<OrderKind> rejected_orders;
};

struct BuchbergerOptions {
  std::size_t max_pairs = 20'000'000;
  /// Stop as soon as an element of degree > 2 enters the basis. With
  /// homogeneous input processed by degree such an element survives
  /// interreduction, so the reduced basis is known to be non-quadratic.
  bool stop_on_nonquadratic = false;
};

/// Buchberger specialized to +-1 binomials: normal pair selection
/// (smallest lcm degree first), coprime leads skipped, interreduced result.
GroebnerReport buchberger(std::span<const Binomial> gens, const MonomialOrder& order,
                          const BuchbergerOptions& options = {});

/// Tries the candidate orders in turn (rank-lex first) and returns the first
/// quadratic squarefree basis; if none qualifies, the complete rank-lex run.
GroebnerReport buchberger_auto(std::span<const Binomial> gens,
                               std::span<const Point> variables,
                               const BuchbergerOptions& options = {});

/// Every S-pair reduces to zero.
bool is_groebner_basis(std::span<const Binomial> basis, const MonomialOrder& order);

}  // namespace hibi
