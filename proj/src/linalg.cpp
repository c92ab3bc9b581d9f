#include "tautcoh/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>

#include "tautcoh/error.hpp"

namespace tautcoh::linalg {

namespace {

// Below this many entries in the trailing block the row updates stay serial.
constexpr std::size_t kParallelBlock = 4096;

template <typename T>
void swap_rows(std::vector<T>& a, std::size_t cols, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(r1 * cols),
                   a.begin() + static_cast<std::ptrdiff_t>((r1 + 1) * cols),
                   a.begin() + static_cast<std::ptrdiff_t>(r2 * cols));
}

// Each row multiplied by the lcm of its denominators; rank is unchanged.
std::vector<mpz_class> integer_rows(const RationalMatrix& m) {
  std::vector<mpz_class> out(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class scale = 1;
    for (const auto& q : m.row(r)) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      out[r * m.cols() + c] = q.get_num() * (scale / q.get_den());
    }
  }
  return out;
}

struct Echelon {
  std::vector<Rational> entries;
  std::vector<std::size_t> pivot_cols;
};

Echelon reduced_row_echelon(const RationalMatrix& m, bool parallel) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Echelon e{m.entries(), {}};
  auto& a = e.entries;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    swap_rows(a, cols, p, r);
    const Rational inv = 1 / a[r * cols + c];
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] *= inv;

    const bool go_parallel = parallel && rows * (cols - c) >= kParallelBlock;
    const auto n_rows = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static) if (go_parallel)
    for (std::ptrdiff_t i = 0; i < n_rows; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (ui == r) continue;
      const Rational f = a[ui * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[ui * cols + j] -= f * a[r * cols + j];
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

std::vector<RationalVector> kernel_from_echelon(const Echelon& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols);
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = -e.entries[k * cols + f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::InvalidArgument, "matrix " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                                " given " + std::to_string(entries_.size()) + " entries");
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "vector length does not match column count");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] != 0) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<mpz_class> a = integer_rows(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    swap_rows(a, cols, p, r);
    const mpz_class pivot = a[r * cols + c];

    // row_i <- (pivot * row_i - lead * row_r) / content, for rows with a nonzero lead only
    const bool go_parallel = (rows - r) * (cols - c) >= kParallelBlock;
    const auto first = static_cast<std::ptrdiff_t>(r + 1);
    const auto last = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic, 4) if (go_parallel)
    for (std::ptrdiff_t i = first; i < last; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (a[ui * cols + c] == 0) continue;
      const mpz_class lead = a[ui * cols + c];
      mpz_class content = 0;
      a[ui * cols + c] = 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class& x = a[ui * cols + j];
        const mpz_class& y = a[r * cols + j];
        if (x == 0 && y == 0) continue;
        x *= pivot;
        if (y != 0) mpz_submul(x.get_mpz_t(), lead.get_mpz_t(), y.get_mpz_t());
        if (x != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
      }
      if (content > 1) {
        for (std::size_t j = c + 1; j < cols; ++j) {
          mpz_class& x = a[ui * cols + j];
          if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
        }
      }
    }
    ++r;
  }
  return r;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  return kernel_from_echelon(reduced_row_echelon(m, true), m.cols());
}

namespace reference {

std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Rational> a = m.entries();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    swap_rows(a, cols, p, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i * cols + c] == 0) continue;
      const Rational f = a[i * cols + c] / a[r * cols + c];
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] -= f * a[r * cols + j];
    }
    ++r;
  }
  return r;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  return kernel_from_echelon(reduced_row_echelon(m, false), m.cols());
}

}  // namespace reference

void LinearMapData::validate() const {
  if (matrix.rows() != codomain.size() || matrix.cols() != domain.size()) {
    throw Error(ErrorKind::BasisMismatch, "matrix " + std::to_string(matrix.rows()) + "x" +
                                              std::to_string(matrix.cols()) + " vs codomain " +
                                              std::to_string(codomain.size()) + ", domain " +
                                              std::to_string(domain.size()));
  }
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      if (matrix(r, c) != 0 && codomain[r].degree != domain[c].degree) {
        throw Error(ErrorKind::InvalidArgument, "map does not preserve degree at (" + codomain[r].label + ", " +
                                                    domain[c].label + ")");
      }
    }
  }
}

}  // namespace tautcoh::linalg
