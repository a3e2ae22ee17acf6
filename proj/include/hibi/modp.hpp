#pragma once

// Exact linear algebra over Z/p. Two kernels with identical results: the
// serial reference and an OpenMP version that parallelizes row updates.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hibi {

enum class ExecPolicy { kSerial, kParallel };

class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint32_t prime)
      : rows_(rows), cols_(cols), prime_(prime), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return prime_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value);
  /// entry += value (mod p)
  void add(std::size_t r, std::size_t c, std::int64_t value);

  std::uint32_t* row(std::size_t r) { return data_.data() + r * cols_; }
  const std::uint32_t* row(std::size_t r) const { return data_.data() + r * cols_; }
  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t prime_;
  std::vector<std::uint32_t> data_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint32_t p);

/// Gaussian elimination with column pivoting; consumes the matrix.
std::size_t rank_serial(ModMatrix m);
std::size_t rank_parallel(ModMatrix m);
std::size_t rank(ModMatrix m, ExecPolicy policy);

}  // namespace hibi
