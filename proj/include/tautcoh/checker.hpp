#pragma once

// Consistency checks tying the formulas to independent routes: brute-force
// enumeration against generating functions, the conjectural formula against
// the proved cases, explicit kernels against Euler characteristics, and the
// P^2 model against Serre duality and Riemann-Roch.
//
// All comparisons are exact. A failing outcome names the first degree where
// expected and actual disagree.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tautcoh/graded.hpp"
#include "tautcoh/parallel.hpp"
#include "tautcoh/surface.hpp"

namespace tautcoh::checker {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string details;
};

/// Equal-or-not outcome for two profiles; details give both sides and the
/// first disagreeing degree.
CheckOutcome compare_dims(std::string name, const graded::GradedDim& expected, const graded::GradedDim& actual);
CheckOutcome compare_ints(std::string name, std::int64_t expected, std::int64_t actual);

/// Every profile supported in degrees 0..4 with total <= max_total_dim, every k <= max_k.
std::vector<CheckOutcome> check_sym_enumeration(std::size_t max_total_dim, std::size_t max_k,
                                                Execution exec = Execution::Parallel);

/// Seeded random (hO, hL, hL2) with entries in 0..4 and h^0(O) = 1.
std::vector<CheckOutcome> check_conjecture_specialization(std::size_t samples, std::uint64_t seed,
                                                          Execution exec = Execution::Parallel);

/// P^2, A = O, L = O(d): K_0 = 0 and H^0 = C(C(d+2,2)+1, 2) for n in 2..n_max, d in 0..d_max.
std::vector<CheckOutcome> check_twisted_reduces_trivial(int n_max, int d_max, Execution exec = Execution::Parallel);

/// P^2, L = O(d), A = O(e): explicit kernel dimension vs chi(K) at n = 2.
std::vector<CheckOutcome> check_two_routes_n2(int d_max, int e_max, Execution exec = Execution::Parallel);

/// chi of the n = 2 decomposition against two Euler-characteristic reconstructions.
std::vector<CheckOutcome> check_les_euler(const std::vector<surface::SurfaceData>& surfaces);

/// chi(K) - chi(middle) + chi(right) = 0 for n = 2, 3, and chi(K) matches any
/// exactly determined residual.
std::vector<CheckOutcome> check_les_exactness(const std::vector<surface::SurfaceData>& surfaces);

/// dim ker(H^0(O(1)) (x) H^0(O(1)) -> H^0(O(2))) = 3 on P^2.
std::vector<CheckOutcome> check_koszul_anchor();

/// The sections map sends u^{n-1} (x) a to (n-1) u^{n-2} (x) ua, for random
/// u, a on P^2 models.
std::vector<CheckOutcome> check_pure_power(int n_min, int n_max, std::size_t trials, std::uint64_t seed,
                                           Execution exec = Execution::Parallel);

/// Serre duality and Riemann-Roch for |d| <= d_range; multiplication ranks
/// for a, b <= ab_max; associativity for a, b, c <= 2.
std::vector<CheckOutcome> check_p2_model(int d_range, int ab_max);

/// rational_qpg0, K3 and abelian presets, each with and without a twist.
std::vector<surface::SurfaceData> preset_sample_surfaces();

enum class Suite { Default, Full };

struct SuiteSection {
  std::string name;
  std::vector<CheckOutcome> outcomes;
};

std::vector<SuiteSection> run_suite(Suite suite, Execution exec = Execution::Parallel);

}  // namespace tautcoh::checker
