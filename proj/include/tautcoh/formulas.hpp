#pragma once

// Cohomology of S^k L^[n] (x) D_n^A on the Hilbert scheme X^[n] of a surface,
// evaluated at the level of graded dimensions.
//
// Every evaluator returns a Decomposition whose total is the degreewise sum
// of its summands. Results of the conjectural general-n formula carry
// conjectural = true and are never produced by the other entry points.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tautcoh/graded.hpp"
#include "tautcoh/linalg.hpp"
#include "tautcoh/surface.hpp"

namespace tautcoh::formulas {

using graded::GradedDim;

enum class Theorem {
  SkTautological,   // k = 0, 1: S^{n-k}H*(A) (x) S^k H*(L(x)A)
  S2HilbertSquare,  // n = 2, A = O
  S2HilbertCube,    // n = 3, A = O
  S2Conjecture,     // general n, A = O (unproved)
  S2TwistedSections,
  S2TwistedBounds,
};

std::string_view to_string(Theorem t) noexcept;

struct Summand {
  std::string label;
  GradedDim dims;
};

/// Residual K* of a twisted decomposition. Its Euler characteristic is always
/// known; its dimensions only when the long exact sequence is forced to split.
struct Residual {
  std::string label;
  std::int64_t euler = 0;
  /// K^i <= middle^i + right^{i-1}.
  GradedDim upper_bound;
  std::optional<GradedDim> exact;
  std::string reason;
};

struct Decomposition {
  GradedDim total;
  std::vector<Summand> summands;
  Theorem provenance = Theorem::SkTautological;
  bool conjectural = false;
  /// Present only for twisted bounds. When residual->exact is set it is also
  /// one of the summands; otherwise total covers the canonical part only.
  std::optional<Residual> residual;

  bool complete() const noexcept { return !residual || residual->exact.has_value(); }
};

/// Builds a Decomposition, summing the totals.
Decomposition make_decomposition(Theorem provenance, std::vector<Summand> summands);

struct KernelReport {
  linalg::LinearMapData map;
  std::size_t kernel_dim = 0;
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
  std::size_t rank = 0;
};

struct SectionsReport {
  Decomposition decomposition;
  KernelReport kernel;
};

/// The two known terms of the sequence  ... -> K^* -> middle -> right -> K^{*+1} -> ...
struct LesTerms {
  GradedDim middle;
  GradedDim right;
};

/// H*(X^[n], S^k L^[n] (x) D_n^A) = S^{n-k}H*(A) (x) S^k H*(L(x)A) for k = 0, 1.
Decomposition coh_sk_taut(int n, int k, const GradedDim& hA, const GradedDim& hLA);

Decomposition coh_s2_n2(const GradedDim& hO, const GradedDim& hL, const GradedDim& hL2);
Decomposition coh_s2_n3(const GradedDim& hO, const GradedDim& hL, const GradedDim& hL2);
/// S^{n-2}H*(O) (x) S^2H*(L)  +  (S^{n-1}H*(O) / S^{n-2}H*(O)) (x) H*(L^2), flagged conjectural.
Decomposition coh_s2_conjecture(int n, const GradedDim& hO, const GradedDim& hL, const GradedDim& hL2);

/// Matrix of S^{n-1}V (x) W -> S^{n-2}V (x) M,
///   u_1...u_{n-1} (x) a  |->  sum_j u_1..^u_j..u_{n-1} (x) mu(u_j, a),
/// the polarization of u^{n-1} (x) a |-> (n-1) u^{n-2} (x) u a.
/// Throws BasisMismatch when mu is not a table V x W -> M and
/// BadDegreeSupport when a basis leaves degree 0.
linalg::LinearMapData build_map_2515(int n, const graded::BasisSpace& v, const graded::BasisSpace& w,
                                     const graded::BasisSpace& m, const surface::MultTable& mu);

/// H^0 = S^{n-2}H^0(A) (x) S^2H^0(L(x)A)  +  K_0, K_0 the kernel of build_map_2515
/// on (H^0(A), H^0(L^2 A), H^0(L^2 A^2)). Needs bases for A, L2A, L2A2, the
/// dimension of H^0(LA) and the table (A, L2A) -> L2A2.
SectionsReport sections_s2_twisted(int n, const surface::SurfaceData& surface);

/// middle/right of the twisted sequences: n = 2: H*(A)(x)H*(L^2A) -> H*(L^2A^2);
/// n = 3: S^2H*(A)(x)H*(L^2A) -> H*(A)(x)H*(L^2A^2).
LesTerms les_terms(int n, const GradedDim& hA, const GradedDim& hL2A, const GradedDim& hL2A2);

/// chi(K) forced by exactness, from products of Euler characteristics.
std::int64_t euler_K_twisted(int n, const GradedDim& hA, const GradedDim& hL2A, const GradedDim& hL2A2);

/// chi(K) - chi(middle) + chi(right); zero for a consistent implementation.
std::int64_t les_alternating_sum(int n, const GradedDim& hA, const GradedDim& hL2A, const GradedDim& hL2A2);

/// Canonical summand exactly, K* as Euler characteristic plus degreewise
/// bounds. K* is given exactly when A = O (split surjection), when a term of
/// the sequence vanishes, or when everything sits in degree 0 and the
/// multiplication table is available.
Decomposition coh_s2_twisted_bounds(int n, const surface::SurfaceData& surface);

}  // namespace tautcoh::formulas
