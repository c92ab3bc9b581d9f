#include "tautcoh/checker.hpp"

#include <array>
#include <map>
#include <random>
#include <sstream>
#include <tuple>
#include <utility>

#include "tautcoh/error.hpp"
#include "tautcoh/formulas.hpp"
#include "tautcoh/linalg.hpp"

namespace tautcoh::checker {

using graded::GradedDim;
using surface::Slot;
using surface::SurfaceData;

CheckOutcome compare_dims(std::string name, const GradedDim& expected, const GradedDim& actual) {
  CheckOutcome out{std::move(name), expected == actual, {}};
  std::ostringstream os;
  os << "expected " << graded::to_string(expected) << ", actual " << graded::to_string(actual);
  if (!out.passed) {
    std::size_t deg = 0;
    while (expected[deg] == actual[deg]) ++deg;
    os << "; first disagreement in degree " << deg << " (" << expected[deg] << " vs " << actual[deg] << ")";
  }
  out.details = os.str();
  return out;
}

CheckOutcome compare_ints(std::string name, std::int64_t expected, std::int64_t actual) {
  return {std::move(name), expected == actual,
          "expected " + std::to_string(expected) + ", actual " + std::to_string(actual)};
}

namespace {

// Every vector of `slots` nonnegative entries summing to at most max_total.
void profiles_rec(std::size_t slots, std::size_t remaining, std::vector<std::uint64_t>& cur,
                  std::vector<GradedDim>& out) {
  if (cur.size() == slots) {
    out.emplace_back(cur);
    return;
  }
  for (std::size_t v = 0; v <= remaining; ++v) {
    cur.push_back(v);
    profiles_rec(slots, remaining - v, cur, out);
    cur.pop_back();
  }
}

graded::BasisSpace generic_basis(const GradedDim& dims) {
  std::vector<graded::BasisElement> elems;
  for (std::size_t deg = 0; deg < dims.length(); ++deg) {
    for (std::uint64_t i = 0; i < dims[deg]; ++i) {
      elems.push_back({"g" + std::to_string(deg) + "_" + std::to_string(i), deg});
    }
  }
  return graded::BasisSpace(std::move(elems));
}

GradedDim count_by_degree(const std::vector<graded::SymMonomial>& monomials) {
  std::vector<std::uint64_t> counts;
  for (const auto& m : monomials) {
    if (counts.size() <= m.degree) counts.resize(m.degree + 1, 0);
    ++counts[m.degree];
  }
  return GradedDim(std::move(counts));
}

GradedDim random_profile(std::mt19937_64& rng, bool unit_h0) {
  std::uniform_int_distribution<std::uint64_t> entry(0, 4);
  std::vector<std::uint64_t> d(3);
  for (auto& x : d) x = entry(rng);
  if (unit_h0) d[0] = 1;
  return GradedDim(std::move(d));
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

std::string p2_tag(int d, int e) { return "(d=" + std::to_string(d) + ",e=" + std::to_string(e) + ")"; }

SurfaceData make_preset(const std::string& name, std::map<Slot, GradedDim> dims) {
  auto s = surface::preset_surface(name, dims);
  if (!s.trivial_twist) s.name += "+A";
  return s;
}

}  // namespace

std::vector<CheckOutcome> check_sym_enumeration(std::size_t max_total_dim, std::size_t max_k, Execution exec) {
  std::vector<GradedDim> profiles;
  std::vector<std::uint64_t> cur;
  profiles_rec(5, max_total_dim, cur, profiles);
  const std::size_t per_profile = max_k + 1;
  return indexed_map<CheckOutcome>(
      profiles.size() * per_profile,
      [&](std::size_t idx) {
        const auto& dims = profiles[idx / per_profile];
        const std::size_t k = idx % per_profile;
        const auto enumerated = count_by_degree(graded::enumerate_sym_basis(k, generic_basis(dims)));
        return compare_dims("sym_enumeration " + graded::to_string(dims) + " k=" + std::to_string(k),
                            graded::super_sym_dims(k, dims), enumerated);
      },
      exec);
}

std::vector<CheckOutcome> check_conjecture_specialization(std::size_t samples, std::uint64_t seed, Execution exec) {
  // Inputs are drawn serially so the sample set does not depend on threading.
  std::mt19937_64 rng(seed);
  std::vector<std::array<GradedDim, 3>> inputs;
  for (std::size_t i = 0; i < samples; ++i) {
    auto ho = random_profile(rng, true);
    auto hl = random_profile(rng, false);
    auto hl2 = random_profile(rng, false);
    inputs.push_back({ho, hl, hl2});
  }
  return indexed_map<CheckOutcome>(
      samples * 2,
      [&](std::size_t idx) {
        const auto& [ho, hl, hl2] = inputs[idx / 2];
        const int n = 2 + static_cast<int>(idx % 2);
        const auto theorem = n == 2 ? formulas::coh_s2_n2(ho, hl, hl2) : formulas::coh_s2_n3(ho, hl, hl2);
        const auto conj = formulas::coh_s2_conjecture(n, ho, hl, hl2);
        return compare_dims("conjecture_n" + std::to_string(n) + " hO=" + graded::to_string(ho) +
                                " hL=" + graded::to_string(hl) + " hL2=" + graded::to_string(hl2),
                            theorem.total, conj.total);
      },
      exec);
}

std::vector<CheckOutcome> check_twisted_reduces_trivial(int n_max, int d_max, Execution exec) {
  std::vector<std::pair<int, int>> grid;
  for (int n = 2; n <= n_max; ++n) {
    for (int d = 0; d <= d_max; ++d) grid.emplace_back(n, d);
  }
  return indexed_map<CheckOutcome>(
      grid.size(),
      [&](std::size_t idx) {
        const auto [n, d] = grid[idx];
        const auto report = formulas::sections_s2_twisted(n, surface::p2_surface(d, 0));
        const auto h0 = binomial(static_cast<std::uint64_t>(d + 2), 2);
        const GradedDim expected{binomial(h0 + 1, 2)};
        auto out = compare_dims("twisted_trivial n=" + std::to_string(n) + " d=" + std::to_string(d), expected,
                                report.decomposition.total);
        if (report.kernel.kernel_dim != 0) {
          out.passed = false;
          out.details += "; K0 = " + std::to_string(report.kernel.kernel_dim) + ", expected 0";
        }
        return out;
      },
      exec);
}

std::vector<CheckOutcome> check_two_routes_n2(int d_max, int e_max, Execution exec) {
  std::vector<std::pair<int, int>> grid;
  for (int d = 0; d <= d_max; ++d) {
    for (int e = 0; e <= e_max; ++e) grid.emplace_back(d, e);
  }
  return indexed_map<CheckOutcome>(
      grid.size(),
      [&](std::size_t idx) {
        const auto [d, e] = grid[idx];
        const auto s = surface::p2_surface(d, e);
        const auto matrix_route = formulas::sections_s2_twisted(2, s).kernel.kernel_dim;
        const auto euler_route =
            formulas::euler_K_twisted(2, s.bundle(Slot::A).h, s.bundle(Slot::L2A).h, s.bundle(Slot::L2A2).h);
        return compare_ints("two_routes_n2 " + p2_tag(d, e), euler_route, static_cast<std::int64_t>(matrix_route));
      },
      exec);
}

std::vector<CheckOutcome> check_les_euler(const std::vector<SurfaceData>& surfaces) {
  using graded::euler_char;
  std::vector<CheckOutcome> out;
  for (const auto& s : surfaces) {
    const auto& ho = s.bundle(Slot::O).h;
    const auto& hl = s.bundle(Slot::L).h;
    const auto& hl2 = s.bundle(Slot::L2).h;
    const auto chi_theorem = euler_char(formulas::coh_s2_n2(ho, hl, hl2).total);
    const auto chi_sym = euler_char(graded::super_sym_dims(2, hl));
    const auto chi_quotient = chi_sym + euler_char(graded::quotient_dims(ho, GradedDim{1})) * euler_char(hl2);
    const auto chi_sequence = chi_sym + euler_char(ho) * euler_char(hl2) - euler_char(hl2);
    auto o = compare_ints("les_euler " + s.name, chi_quotient, chi_theorem);
    if (chi_sequence != chi_theorem) {
      o.passed = false;
      o.details += "; sequence reconstruction gives " + std::to_string(chi_sequence);
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> check_les_exactness(const std::vector<SurfaceData>& surfaces) {
  std::vector<CheckOutcome> out;
  for (const auto& s : surfaces) {
    const auto& ha = s.bundle(Slot::A).h;
    const auto& hl2a = s.bundle(Slot::L2A).h;
    const auto& hl2a2 = s.bundle(Slot::L2A2).h;
    for (int n : {2, 3}) {
      const std::string tag = " n=" + std::to_string(n) + " " + s.name;
      out.push_back(compare_ints("les_alternating_sum" + tag, 0, formulas::les_alternating_sum(n, ha, hl2a, hl2a2)));
      const auto dec = formulas::coh_s2_twisted_bounds(n, s);
      if (dec.residual && dec.residual->exact) {
        out.push_back(compare_ints("residual_euler" + tag, dec.residual->euler, graded::euler_char(*dec.residual->exact)));
      }
    }
  }
  return out;
}

std::vector<CheckOutcome> check_koszul_anchor() {
  const auto mu = surface::p2_mult_table(1, 1);
  const auto map = formulas::build_map_2515(2, mu.left(), mu.right(), mu.target(), mu);
  const auto kernel = linalg::kernel_basis(map.matrix);
  std::vector<CheckOutcome> out;
  out.push_back(compare_ints("koszul_anchor kernel_basis", 3, static_cast<std::int64_t>(kernel.size())));
  out.push_back(compare_ints("koszul_anchor rank", 6, static_cast<std::int64_t>(linalg::rank(map.matrix))));
  out.push_back(compare_ints("koszul_anchor reference_rank", 6, static_cast<std::int64_t>(linalg::reference::rank(map.matrix))));
  std::size_t nonzero = 0;
  for (const auto& v : kernel) {
    for (const auto& x : map.matrix.apply(v)) nonzero += x != 0;
  }
  out.push_back(compare_ints("koszul_anchor substitution", 0, static_cast<std::int64_t>(nonzero)));
  return out;
}

std::vector<CheckOutcome> check_pure_power(int n_min, int n_max, std::size_t trials, std::uint64_t seed,
                                           Execution exec) {
  struct Trial {
    int n, a, b;
    std::vector<Rational> u, alpha;
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(0, 2);
  std::vector<Trial> plan;
  for (int n = n_min; n <= n_max; ++n) {
    for (std::size_t t = 0; t < trials; ++t) {
      Trial tr{n, deg(rng), deg(rng), {}, {}};
      const auto dim = [](int x) { return binomial(static_cast<std::uint64_t>(x + 2), 2); };
      for (std::uint64_t i = 0; i < dim(tr.a); ++i) tr.u.push_back(random_rational(rng));
      for (std::uint64_t i = 0; i < dim(tr.b); ++i) tr.alpha.push_back(random_rational(rng));
      plan.push_back(std::move(tr));
    }
  }
  return indexed_map<CheckOutcome>(
      plan.size(),
      [&](std::size_t idx) {
        const auto& tr = plan[idx];
        const auto mu = surface::p2_mult_table(tr.a, tr.b);
        const auto& v = mu.left();
        const auto& w = mu.right();
        const auto& m = mu.target();
        const auto map = formulas::build_map_2515(tr.n, v, w, m, mu);
        const auto n = static_cast<std::size_t>(tr.n);

        const auto dom = graded::enumerate_sym_basis(n - 1, v);
        const auto cod = graded::enumerate_sym_basis(n - 2, v);
        const auto upow = graded::sym_power_vector(tr.u, n - 1, v);
        const auto ulow = graded::sym_power_vector(tr.u, n - 2, v);
        const auto ua = mu.apply(tr.u, tr.alpha);

        std::vector<Rational> x(map.matrix.cols());
        for (std::size_t d = 0; d < dom.size(); ++d) {
          auto it = upow.find(dom[d]);
          if (it == upow.end()) continue;
          for (std::size_t j = 0; j < w.size(); ++j) x[d * w.size() + j] = it->second * tr.alpha[j];
        }
        std::vector<Rational> expected(map.matrix.rows());
        for (std::size_t c = 0; c < cod.size(); ++c) {
          auto it = ulow.find(cod[c]);
          if (it == ulow.end()) continue;
          for (std::size_t k = 0; k < m.size(); ++k) expected[c * m.size() + k] = (tr.n - 1) * it->second * ua[k];
        }
        const auto actual = map.matrix.apply(x);
        CheckOutcome out{"pure_power n=" + std::to_string(tr.n) + " O(" + std::to_string(tr.a) + ")xO(" +
                             std::to_string(tr.b) + ") trial " + std::to_string(idx),
                         actual == expected, {}};
        for (std::size_t r = 0; r < actual.size(); ++r) {
          if (actual[r] != expected[r]) {
            out.details = "first mismatch at " + map.codomain[r].label + ": expected " + to_string(expected[r]) +
                          ", actual " + to_string(actual[r]);
            break;
          }
        }
        if (out.passed) out.details = "matches (n-1) u^{n-2} (x) ua in " + std::to_string(actual.size()) + " coordinates";
        return out;
      },
      exec);
}

std::vector<CheckOutcome> check_p2_model(int d_range, int ab_max) {
  std::vector<CheckOutcome> out;
  for (int d = -d_range; d <= d_range; ++d) {
    const auto h = surface::p2_line_bundle(d).h;
    const auto dual = surface::p2_line_bundle(-3 - d).h;
    out.push_back(compare_ints("serre_duality d=" + std::to_string(d), static_cast<std::int64_t>(dual[2]),
                               static_cast<std::int64_t>(h[0])));
    out.push_back(compare_ints("riemann_roch d=" + std::to_string(d), (d + 1) * (d + 2) / 2, graded::euler_char(h)));
  }
  for (int a = 0; a <= ab_max; ++a) {
    for (int b = 0; b <= ab_max; ++b) {
      const auto mu = surface::p2_mult_table(a, b);
      linalg::RationalMatrix flat(mu.target().size(), mu.left().size() * mu.right().size());
      for (std::size_t i = 0; i < mu.left().size(); ++i) {
        for (std::size_t j = 0; j < mu.right().size(); ++j) {
          for (const auto& t : mu.product(i, j)) flat(t.target, i * mu.right().size() + j) += t.coeff;
        }
      }
      out.push_back(compare_ints("mult_surjective a=" + std::to_string(a) + " b=" + std::to_string(b),
                                 static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(a + b + 2), 2)),
                                 static_cast<std::int64_t>(linalg::rank(flat))));
    }
  }
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      for (int c = 0; c <= 2; ++c) {
        const auto ab = surface::p2_mult_table(a, b);
        const auto ab_c = surface::p2_mult_table(a + b, c);
        const auto bc = surface::p2_mult_table(b, c);
        const auto a_bc = surface::p2_mult_table(a, b + c);
        std::size_t bad = 0;
        auto unit = [](std::size_t n, std::size_t i) {
          std::vector<Rational> e(n);
          e[i] = 1;
          return e;
        };
        for (std::size_t i = 0; i < ab.left().size(); ++i) {
          for (std::size_t j = 0; j < ab.right().size(); ++j) {
            for (std::size_t k = 0; k < bc.right().size(); ++k) {
              const auto x = unit(ab.left().size(), i);
              const auto y = unit(ab.right().size(), j);
              const auto z = unit(bc.right().size(), k);
              bad += ab_c.apply(ab.apply(x, y), z) != a_bc.apply(x, bc.apply(y, z));
            }
          }
        }
        out.push_back(compare_ints("mult_associative a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                       " c=" + std::to_string(c),
                                   0, static_cast<std::int64_t>(bad)));
      }
    }
  }
  return out;
}

std::vector<SurfaceData> preset_sample_surfaces() {
  // Ample bundles, so H^1 = H^2 = 0 for everything but O. Twisted numbers
  // follow Riemann-Roch with L^2 = A^2 = L.A = 2 (and O(1), O(1) on P^2).
  return {
      make_preset("rational_qpg0", {{Slot::L, {3}}, {Slot::L2, {6}}}),
      make_preset("rational_qpg0", {{Slot::L, {3}}, {Slot::L2, {6}}, {Slot::A, {3}}, {Slot::LA, {6}},
                                    {Slot::L2A, {10}}, {Slot::L2A2, {15}}}),
      make_preset("K3", {{Slot::L, {8}}, {Slot::L2, {26}}}),
      make_preset("K3", {{Slot::L, {3}}, {Slot::L2, {6}}, {Slot::A, {3}}, {Slot::LA, {6}}, {Slot::L2A, {11}},
                         {Slot::L2A2, {18}}}),
      make_preset("abelian", {{Slot::L, {3}}, {Slot::L2, {12}}}),
      make_preset("abelian", {{Slot::L, {1}}, {Slot::L2, {4}}, {Slot::A, {1}}, {Slot::LA, {4}}, {Slot::L2A, {9}},
                              {Slot::L2A2, {16}}}),
  };
}

std::vector<SuiteSection> run_suite(Suite suite, Execution exec) {
  const bool full = suite == Suite::Full;
  const auto presets = preset_sample_surfaces();
  auto with_p2 = presets;
  for (int d = 0; d <= 2; ++d) {
    for (int e = 0; e <= 2; ++e) with_p2.push_back(surface::p2_surface(d, e));
  }

  std::vector<SuiteSection> sections;
  sections.push_back({"sym_enumeration", check_sym_enumeration(full ? 8 : 6, full ? 5 : 4, exec)});
  sections.push_back({"conjecture_specialization", check_conjecture_specialization(full ? 1000 : 100, 42, exec)});
  sections.push_back({"twisted_reduces_trivial", check_twisted_reduces_trivial(full ? 8 : 6, full ? 4 : 3, exec)});
  sections.push_back({"two_routes_n2", check_two_routes_n2(full ? 4 : 3, full ? 4 : 3, exec)});
  sections.push_back({"koszul_anchor", check_koszul_anchor()});
  sections.push_back({"pure_power", check_pure_power(2, 5, full ? 40 : 10, 7, exec)});
  sections.push_back({"les_exactness", check_les_exactness(with_p2)});
  sections.push_back({"les_euler", check_les_euler(presets)});
  sections.push_back({"p2_model", check_p2_model(6, 3)});
  return sections;
}

}  // namespace tautcoh::checker
