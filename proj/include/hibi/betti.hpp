#pragma once

// Homological ground truth for a binomial ideal I of the window ring:
// Hilbert functions from standard monomials, Krull dimension from the
// initial ideal, and graded Betti numbers over Z/p as Koszul homology
//   Tor_s(S/I, K)_j = H_s( wedge^s V (x) (S/I)_{j-s} ).
//
// Tables are reported for the ideal: beta_{i,j}(I) = beta_{i+1,j}(S/I),
// so beta_{0,2} counts the quadratic minimal generators.
//
// The Koszul complex is split along the fine Z^{(m+1)+(n+1)} grading of the
// toric map; each multidegree block is an independent small complex whose
// boundary ranks are computed by exact elimination mod p.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hibi/fiber.hpp"
#include "hibi/groebner.hpp"
#include "hibi/modp.hpp"

namespace hibi {

std::vector<std::size_t> hilbert_function(const GroebnerReport& gb, std::size_t nvars,
                                          int d_max, std::size_t budget = default_budget());

/// Largest variable set containing the support of no initial term.
int krull_dimension_via_initial(const GroebnerReport& gb, std::size_t nvars);

/// Coefficients of the h-polynomial H(z)(1-z)^d, d the Krull dimension.
std::vector<long long> h_polynomial(const GroebnerReport& gb, std::size_t nvars,
                                    std::size_t budget = default_budget());

struct BettiOptions {
  std::uint32_t prime = 32003;
  /// Variable cap for full tables and the linear-resolution test.
  std::size_t cap_vars = 12;
  /// Variable cap for the degree-4 syzygy test alone.
  std::size_t linrel_cap_vars = 20;
  int i_max = -1;  // default nvars - 1
  int j_max = -1;  // default nvars
  /// Strands j - i - 1 <= Krull dimension instead of <= max(2, deg h).
  bool full_range = false;
  std::size_t budget = default_budget();
  ExecPolicy policy = ExecPolicy::kParallel;
  /// Order for the Groebner basis; automatic selection when unset.
  std::optional<OrderKind> order;
};

struct BettiTable {
  /// Nonzero entries only, ideal convention.
  std::map<std::pair<int, int>, std::size_t> entries;
  std::size_t nvars = 0;
  std::uint32_t prime = 0;
  int i_max = 0;
  int j_max = 0;
  /// Largest j - i examined.
  int strand_max = 0;
  /// "h-polynomial", "krull-dimension" or "none".
  std::string bound_source;

  std::size_t at(int i, int j) const;
  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries == b.entries;
  }
};

/// Macaulay2-style layout: columns i, rows j - i.
std::string format_macaulay(const BettiTable& table);

/// Throws kCapExceeded past the variable cap and kOracleInconsistency when
/// a quadratic Groebner basis shows first syzygies beyond degree 4.
BettiTable betti_numbers(std::span<const Binomial> gens, const MonomialMap& map,
                         const BettiOptions& options = {});

/// beta_{i,j}(I) = 0 for j != i + 2; true for the zero ideal.
bool has_linear_resolution_oracle(std::span<const Binomial> gens, const MonomialMap& map,
                                  const BettiOptions& options = {});

/// beta_{1,4}(I) = 0.
bool is_linearly_related_oracle(std::span<const Binomial> gens, const MonomialMap& map,
                                const BettiOptions& options = {});

/// Euler characteristic of the degree-j Koszul strand against the table:
///   sum_s (-1)^s C(N,s) H(j-s) = 1[j=0] + sum_i (-1)^(i+1) beta_{i,j}(I).
bool euler_consistent(const BettiTable& table, std::span<const std::size_t> hilbert,
                      int j);

}  // namespace hibi
