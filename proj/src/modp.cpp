#include "hibi/modp.hpp"

#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hibi {

void ModMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  std::int64_t v = value % static_cast<std::int64_t>(prime_);
  if (v < 0) v += prime_;
  data_[r * cols_ + c] = static_cast<std::uint32_t>(v);
}

void ModMatrix::add(std::size_t r, std::size_t c, std::int64_t value) {
  set(r, c, static_cast<std::int64_t>(at(r, c)) + value);
}

void ModMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

// row_t -= factor * row_s on columns [from, cols)
inline void eliminate(std::uint32_t* target, const std::uint32_t* source, std::size_t from,
                      std::size_t cols, std::uint64_t factor, std::uint64_t p) {
  for (std::size_t c = from; c < cols; ++c) {
    if (!source[c]) continue;
    std::uint64_t v = target[c] + p * p - factor * source[c];
    target[c] = static_cast<std::uint32_t>(v % p);
  }
}

template <bool Parallel>
std::size_t rank_impl(ModMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::uint64_t p = m.prime();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(rank, pivot);
    const std::uint32_t* src = m.row(rank);
    const std::uint64_t inv = inverse_mod(src[c], static_cast<std::uint32_t>(p));
    const auto first = static_cast<std::ptrdiff_t>(rank + 1);
    const auto last = static_cast<std::ptrdiff_t>(rows);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static) if ((last - first) * (cols - c) > 4096)
      for (std::ptrdiff_t r = first; r < last; ++r) {
        std::uint32_t* dst = m.row(static_cast<std::size_t>(r));
        if (dst[c]) eliminate(dst, src, c, cols, dst[c] * inv % p, p);
      }
    } else {
      for (std::ptrdiff_t r = first; r < last; ++r) {
        std::uint32_t* dst = m.row(static_cast<std::size_t>(r));
        if (dst[c]) eliminate(dst, src, c, cols, dst[c] * inv % p, p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_serial(ModMatrix m) { return rank_impl<false>(std::move(m)); }
std::size_t rank_parallel(ModMatrix m) { return rank_impl<true>(std::move(m)); }

std::size_t rank(ModMatrix m, ExecPolicy policy) {
  return policy == ExecPolicy::kParallel ? rank_parallel(std::move(m))
                                         : rank_serial(std::move(m));
}

}  // namespace hibi
