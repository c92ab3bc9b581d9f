#pragma once

// Z-graded super vector spaces, tracked either by their dimension profile
// (GradedDim) or by an explicit degree-labelled basis (BasisSpace).
// Parity of an element is its cohomological degree mod 2.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tautcoh/rational.hpp"

namespace tautcoh::graded {

/// Dimension profile d -> dim H^d. Stored with trailing zeros stripped, so
/// equality is equality of the normalized profiles.
class GradedDim {
 public:
  GradedDim() = default;
  GradedDim(std::initializer_list<std::uint64_t> dims);
  explicit GradedDim(std::vector<std::uint64_t> dims);

  static GradedDim concentrated(std::size_t degree, std::uint64_t dim);

  /// dim in the given degree; zero outside the support.
  std::uint64_t operator[](std::size_t degree) const noexcept {
    return degree < dims_.size() ? dims_[degree] : 0;
  }

  /// One past the highest nonzero degree (0 for the zero space).
  std::size_t length() const noexcept { return dims_.size(); }
  const std::vector<std::uint64_t>& entries() const noexcept { return dims_; }
  /// Entries extended with zeros to at least `len` degrees.
  std::vector<std::uint64_t> padded(std::size_t len) const;

  std::uint64_t total() const noexcept;
  bool is_zero() const noexcept { return dims_.empty(); }
  /// True when nothing lives above `max_degree`.
  bool supported_in(std::size_t max_degree) const noexcept { return dims_.size() <= max_degree + 1; }

  friend bool operator==(const GradedDim&, const GradedDim&) = default;

 private:
  void normalize();
  std::vector<std::uint64_t> dims_;
};

std::string to_string(const GradedDim& a);

GradedDim sum_dims(const GradedDim& a, const GradedDim& b);
/// Kunneth: (a (x) b)_i = sum_{p+q=i} a_p b_q.
GradedDim tensor_dims(const GradedDim& a, const GradedDim& b);
/// k-th Z/2-graded symmetric power: symmetric algebra on the even part
/// tensored with the exterior algebra on the odd part. Evaluated from the
/// generating product prod_even (1 - z t^i)^{-a_i} prod_odd (1 + z t^i)^{a_i}.
GradedDim super_sym_dims(std::size_t k, const GradedDim& a);
/// Degreewise difference; throws NegativeQuotient when small does not fit.
GradedDim quotient_dims(const GradedDim& big, const GradedDim& small);
std::int64_t euler_char(const GradedDim& a);

struct BasisElement {
  std::string label;
  std::size_t degree = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

class BasisSpace {
 public:
  BasisSpace() = default;
  /// Throws InvalidArgument on repeated labels.
  explicit BasisSpace(std::vector<BasisElement> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const BasisElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<BasisElement>& elements() const noexcept { return elements_; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  bool is_odd(std::size_t i) const { return elements_[i].degree % 2 == 1; }
  GradedDim dims() const;

  friend bool operator==(const BasisSpace& a, const BasisSpace& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<BasisElement> elements_;
};

/// Monomial of the super-symmetric algebra on a BasisSpace, in canonical form:
/// even factors as a nondecreasing index list, odd factors strictly increasing
/// (odd squares vanish). Indices refer to the underlying BasisSpace.
struct SymMonomial {
  std::vector<std::size_t> even;
  std::vector<std::size_t> odd;
  std::size_t degree = 0;

  std::size_t size() const noexcept { return even.size() + odd.size(); }
  auto operator<=>(const SymMonomial&) const = default;
};

struct SignedMonomial {
  int sign = 1;
  SymMonomial monomial;
};

/// All monomials of S^k V, ordered lexicographically by their sorted factor
/// index sequence.
std::vector<SymMonomial> enumerate_sym_basis(std::size_t k, const BasisSpace& v);

/// m * e_i with the Koszul sign from moving an odd e_i past the odd factors of
/// m that sort after it. Empty when e_i is odd and already a factor.
std::optional<SignedMonomial> multiply(const SymMonomial& m, std::size_t i, const BasisSpace& v);
/// Ordered product e_{f0} e_{f1} ... brought into canonical form.
std::optional<SignedMonomial> canonical_monomial(std::span<const std::size_t> factors,
                                                 const BasisSpace& v);

std::string monomial_label(const SymMonomial& m, const BasisSpace& v);
/// S^k V as a BasisSpace labelled by monomial_label, in enumerate_sym_basis order.
BasisSpace sym_basis_space(std::size_t k, const BasisSpace& v);
/// Basis {a_i (x) b_j}, a-major order.
BasisSpace tensor_basis(const BasisSpace& a, const BasisSpace& b);

using SymVector = std::map<SymMonomial, Rational>;

/// u^k in S^k V for a homogeneous vector u given by its coordinates in V,
/// computed by repeated multiplication in the super-symmetric algebra.
SymVector sym_power_vector(std::span<const Rational> u, std::size_t k, const BasisSpace& v);

}  // namespace tautcoh::graded
