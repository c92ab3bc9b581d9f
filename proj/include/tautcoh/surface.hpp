#pragma once

// Input data for the decomposition formulas: cohomology dimension profiles of
// line bundles on a surface, optional degree-0 bases, and multiplication
// tables between spaces of sections.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tautcoh/graded.hpp"
#include "tautcoh/rational.hpp"

namespace tautcoh::surface {

/// The bundles the formulas ask about. LA = L(x)A, L2A = L^2(x)A, L2A2 = L^2(x)A^2.
enum class Slot { O, L, L2, A, LA, L2A, L2A2 };

inline constexpr std::array kAllSlots{Slot::O, Slot::L, Slot::L2, Slot::A, Slot::LA, Slot::L2A, Slot::L2A2};

std::string_view slot_name(Slot s) noexcept;
/// Throws ConfigParse on an unknown name.
Slot parse_slot(std::string_view name);

struct LineBundleData {
  std::string name;
  graded::GradedDim h;
  /// Basis of H^0 when known; every element has degree 0.
  std::optional<graded::BasisSpace> basis;

  /// Throws InvalidDims when h reaches past degree 2 or the basis disagrees with h_0.
  void validate() const;
};

struct MultTerm {
  std::size_t target = 0;
  Rational coeff;
};

/// Structure constants of mu: left (x) right -> target,
/// mu(left_i, right_j) = sum_k c[i][j][k] target_k. Stored sparsely per (i, j).
class MultTable {
 public:
  MultTable(graded::BasisSpace left, graded::BasisSpace right, graded::BasisSpace target);

  const graded::BasisSpace& left() const noexcept { return left_; }
  const graded::BasisSpace& right() const noexcept { return right_; }
  const graded::BasisSpace& target() const noexcept { return target_; }

  /// Accumulates coeff * target_k into mu(left_i, right_j). Throws
  /// InvalidArgument when an index is out of range.
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff);
  const std::vector<MultTerm>& product(std::size_t i, std::size_t j) const { return terms_[i * right_.size() + j]; }

  /// mu(x, y) for coordinate vectors x in left, y in right.
  std::vector<Rational> apply(std::span<const Rational> x, std::span<const Rational> y) const;

 private:
  graded::BasisSpace left_;
  graded::BasisSpace right_;
  graded::BasisSpace target_;
  std::vector<std::vector<MultTerm>> terms_;
};

struct SlotMult {
  Slot left;
  Slot right;
  Slot target;
  MultTable table;
};

struct SurfaceData {
  std::string name;
  std::map<Slot, LineBundleData> bundles;
  std::vector<SlotMult> mults;
  /// Set when A is known to be the structure sheaf.
  bool trivial_twist = false;

  bool has(Slot s) const { return bundles.contains(s); }
  /// Throws MissingSlot.
  const LineBundleData& bundle(Slot s) const;
  /// Throws MissingSlot when the slot lacks a degree-0 basis.
  const graded::BasisSpace& basis(Slot s) const;
  const MultTable* find_mult(Slot left, Slot right, Slot target) const;

  /// Throws InvalidDims / BasisMismatch when the invariants fail.
  void validate() const;
};

/// O(d) on P^2: h^0 = C(d+2,2) for d >= 0, h^2 = C(-d-1,2) for d <= -3, with the
/// degree-d monomials in U, V, W (lex order, U > V > W) as basis of H^0.
LineBundleData p2_line_bundle(int d);

/// Monomial multiplication H^0(O(a)) (x) H^0(O(b)) -> H^0(O(a+b)) on P^2.
MultTable p2_mult_table(int a, int b);

/// P^2 with L = O(d), A = O(e): every slot filled from p2_line_bundle, plus the
/// table (A, L2A) -> L2A2 whenever both degrees are nonnegative.
SurfaceData p2_surface(int d, int e);

/// Presets fix H*(O): rational_qpg0 [1,0,0], K3 [1,0,1], abelian [1,2,1];
/// custom takes it from bundle_dims. When A is absent it is taken to be O and
/// the twisted slots are filled from L and L2. Throws InvalidDims for an
/// unknown preset, a slot with support past degree 2, or a custom H*(O)
/// without h^0 = 1.
SurfaceData preset_surface(const std::string& name, const std::map<Slot, graded::GradedDim>& bundle_dims);

}  // namespace tautcoh::surface
