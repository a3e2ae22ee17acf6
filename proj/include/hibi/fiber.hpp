#pragma once

// Certificates computed by grouping all monomials of a fixed degree by
// their image under the toric map. The toric ideal in degree e is spanned
// by differences of monomials sharing a fiber.

#include <cstddef>
#include <vector>

#include "hibi/groebner.hpp"

namespace hibi {

/// All monomials of degree `degree` in `nvars` variables, in a fixed
/// (colex-of-exponent) order. Throws kDegreeInfeasible past `budget`.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree,
                                          std::size_t budget);

struct FiberLevel {
  int degree = 0;
  std::size_t monomials = 0;
  std::size_t fibers = 0;
  /// dim of the span of {u * g}: monomials minus connected components of
  /// the move graph.
  std::size_t span_rank = 0;
  bool generation = false;
  /// Candidate basis gives one normal form per fiber.
  bool groebner = false;
  std::size_t distinct_normal_forms = 0;
};

struct FiberCertificate {
  bool membership = true;
  bool generation = true;
  bool groebner = true;
  std::vector<FiberLevel> levels;
};

/// Checks (a) each generator lies in the toric ideal, (b) the generators
/// span the toric ideal in every degree <= max_degree, and, when
/// `candidate` is given, (c) it has a unique normal form per fiber.
FiberCertificate toric_fiber_oracle(const MonomialMap& map, std::span<const Binomial> gens,
                                    int max_degree, const GroebnerReport* candidate,
                                    std::size_t budget);

/// Budget for monomial enumeration; HIBI_LAB_BUDGET overrides the default.
std::size_t default_budget();

}  // namespace hibi
