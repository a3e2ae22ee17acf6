#pragma once

// Monomials and +-1 binomials in the variables y_a, a a window point, plus
// the monomial orders used for Groebner computations and the toric map
// y_{ij} -> s_i t_j.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hibi/window.hpp"

namespace hibi {

/// Dense exponent vector over a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  static Monomial variable(std::size_t nvars, std::size_t v);
  static Monomial product(std::size_t nvars, std::size_t a, std::size_t b);

  std::size_t nvars() const { return exps_.size(); }
  int degree() const { return degree_; }
  std::uint8_t operator[](std::size_t v) const { return exps_[v]; }
  const std::vector<std::uint8_t>& exponents() const { return exps_; }

  void multiply_by(std::size_t v) {
    ++exps_[v];
    ++degree_;
  }
  void multiply_by(const Monomial& other);
  /// Requires divisor.divides(*this).
  void divide_by(const Monomial& divisor);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  bool squarefree() const;
  /// Bitmask of variables with positive exponent (nvars <= 64).
  std::uint64_t support() const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

 private:
  std::vector<std::uint8_t> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

enum class OrderKind { kRankLex, kRankRevlex, kLex, kRevlex };

std::string_view order_name(OrderKind kind);
/// Accepts "rank-lex", "rank-revlex", "lex", "revlex".
std::optional<OrderKind> parse_order(std::string_view name);
inline constexpr std::array<OrderKind, 4> kCandidateOrders = {
    OrderKind::kRankLex, OrderKind::kRankRevlex, OrderKind::kLex, OrderKind::kRevlex};

/// Rank orders rank y_{ij} above y_{kl} when (i+j, i) > (k+l, k); plain
/// orders compare (i, j). Lex compares exponents from the largest variable
/// down; revlex is graded reverse lexicographic.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::span<const Point> variables);

  OrderKind kind() const { return kind_; }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }
  /// Variables from largest to smallest.
  const std::vector<std::size_t>& descending() const { return descending_; }

 private:
  OrderKind kind_;
  std::vector<std::size_t> descending_;
};

/// lead - trail with lead > trail in the order it was built for.
struct Binomial {
  Monomial lead;
  Monomial trail;

  int degree() const { return lead.degree(); }
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// a - b oriented by `order`; nullopt when a == b.
std::optional<Binomial> make_binomial(Monomial a, Monomial b, const MonomialOrder& order);
/// Re-orients every binomial for `order`, then sorts by (lead, trail).
std::vector<Binomial> normalized(std::span<const Binomial> binomials,
                                 const MonomialOrder& order);

inline constexpr std::size_t kMaxGradingDim = 48;
/// Fine multidegree in Z^{(m+1)+(n+1)}: the exponent of s_0..s_m, t_0..t_n.
using MultiDegree = std::array<std::uint8_t, kMaxGradingDim>;

struct MultiDegreeHash {
  std::size_t operator()(const MultiDegree& d) const noexcept;
};

/// y_{ij} -> s_i t_j, the parametrization of the edge ring.
class MonomialMap {
 public:
  MonomialMap(const PlanarLattice& lattice, RankWindow w);
  MonomialMap(int m, int n, std::vector<Point> variables);

  const std::vector<Point>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  std::size_t grading_dim() const { return static_cast<std::size_t>(m_ + n_ + 2); }
  const MultiDegree& image(std::size_t v) const { return images_[v]; }
  MultiDegree image(const Monomial& u) const;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<Point> variables_;
  std::vector<MultiDegree> images_;
};

void add_into(MultiDegree& acc, const MultiDegree& d);
/// acc -= d; false (acc unspecified) when a coordinate would go negative.
bool subtract_from(MultiDegree& acc, const MultiDegree& d);

/// y_a y_b - y_{a meet b} y_{a join b} for every incomparable pair a, b of
/// window points whose meet and join ranks lie in the window, oriented and
/// sorted for `order`. Variables are indexed as in generators(L, w).
std::vector<Binomial> defining_ideal_generators(const PlanarLattice& lattice,
                                                RankWindow w,
                                                const MonomialOrder& order);

Monomial normal_form(Monomial m, std::span<const Binomial> basis);
/// Reduces both terms; nullopt when they reduce to the same monomial.
std::optional<Binomial> normal_form(const Binomial& b, std::span<const Binomial> basis,
                                    const MonomialOrder& order);

/// y_{10}y_{01} style text; coordinates >= 10 are comma separated.
std::string to_string(const Monomial& m, std::span<const Point> variables);
std::string to_string(const Binomial& b, std::span<const Point> variables);

}  // namespace hibi
