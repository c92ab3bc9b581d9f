#pragma once

// Exact dense linear algebra over Q. No floating point anywhere.
//
// rank() and kernel_basis() are the production kernels: their row-update
// loops run under OpenMP once a block is large enough to be worth it.
// linalg::reference holds plain serial versions that the tests and the
// benchmark compare against.

#include <cstddef>
#include <span>
#include <vector>

#include "tautcoh/graded.hpp"
#include "tautcoh/rational.hpp"

namespace tautcoh::linalg {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Row-major entries; throws InvalidArgument unless entries.size() == rows * cols.
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  RationalVector apply(std::span<const Rational> v) const;
  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Rank over Q by integer elimination on integer-scaled rows, each updated row kept primitive.
std::size_t rank(const RationalMatrix& m);

/// Basis of ker(m) read off the reduced row echelon form. Pivots are the first
/// nonzero entry in scan order; each free column f yields the vector with a 1
/// in position f, so the basis is reproducible.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

namespace reference {

/// Textbook Gaussian elimination over Q, serial.
std::size_t rank(const RationalMatrix& m);
/// Serial RREF kernel with the same pivot rule as linalg::kernel_basis.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

}  // namespace reference

/// A matrix together with the bases it is written in: rows index the
/// codomain, columns the domain.
struct LinearMapData {
  RationalMatrix matrix;
  graded::BasisSpace domain;
  graded::BasisSpace codomain;

  /// Throws BasisMismatch on a size mismatch and InvalidArgument when an entry
  /// pairs basis elements of different degree.
  void validate() const;
};

}  // namespace tautcoh::linalg
