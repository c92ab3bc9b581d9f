#include <map>
#include <random>

#include "doctest.h"
#include "tautcoh/error.hpp"
#include "tautcoh/formulas.hpp"

using namespace tautcoh;
using namespace tautcoh::formulas;
using graded::GradedDim;
using surface::Slot;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::InvalidArgument;
}

GradedDim summand_sum(const Decomposition& d) {
  GradedDim s;
  for (const auto& x : d.summands) s = graded::sum_dims(s, x.dims);
  return s;
}

// u^j in S^j V by the multinomial theorem: sum over multisets c of
// j!/prod c_i! prod u_i^{c_i}, keyed by the sorted index sequence.
std::map<std::vector<std::size_t>, Rational> multinomial_power(const std::vector<Rational>& u, std::size_t j) {
  std::map<std::vector<std::size_t>, Rational> out;
  std::vector<std::size_t> counts(u.size(), 0);
  auto factorial = [](std::size_t n) {
    mpz_class f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
  };
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == u.size() || u.empty()) {
      if (!u.empty()) counts[pos] = left;
      else if (left != 0) return;
      Rational coeff(factorial(j));
      std::vector<std::size_t> key;
      for (std::size_t i = 0; i < counts.size(); ++i) {
        coeff /= Rational(factorial(counts[i]));
        for (std::size_t c = 0; c < counts[i]; ++c) {
          coeff *= u[i];
          key.push_back(i);
        }
      }
      if (coeff != 0) out[key] = coeff;
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[pos] = c;
      self(self, pos + 1, left - c);
    }
  };
  rec(rec, 0, j);
  return out;
}

}  // namespace

TEST_CASE("coh_sk_taut examples") {
  CHECK(coh_sk_taut(2, 0, {1, 0, 1}, {}).total == GradedDim{1, 0, 1, 0, 1});
  CHECK(coh_sk_taut(2, 1, {1, 0, 0}, {5, 0, 0}).total == GradedDim{5});
  CHECK(coh_sk_taut(3, 1, {1, 0, 1}, {2, 0, 0}).total == GradedDim{2, 0, 2, 0, 2});
  CHECK(kind_of([] { coh_sk_taut(2, 1, {1, 0, 0, 1}, {1}); }) == ErrorKind::BadDegreeSupport);
  CHECK(kind_of([] { coh_sk_taut(2, 2, {1}, {1}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { coh_sk_taut(1, 0, {1}, {1}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("coh_s2_n2 examples") {
  // q = p_g = 0: only S^2 H*(L) survives
  const auto rational = coh_s2_n2({1, 0, 0}, {3, 1, 0}, {7, 2, 0});
  CHECK(rational.summands[1].dims.is_zero());
  CHECK(rational.total == GradedDim{6, 3});

  const auto k3 = coh_s2_n2({1, 0, 1}, {8, 0, 0}, {26, 0, 0});
  CHECK(k3.total == GradedDim{36, 0, 26, 0, 0});
  CHECK(k3.summands[0].dims == GradedDim{36});
  CHECK(k3.summands[1].dims == GradedDim{0, 0, 26});
  CHECK_FALSE(k3.conjectural);
  CHECK(k3.provenance == Theorem::S2HilbertSquare);

  CHECK(coh_s2_n2({1, 0, 0}, {0, 0, 0}, {1, 0, 0}).total.is_zero());
}

TEST_CASE("coh_s2_n3 examples") {
  const auto rational = coh_s2_n3({1}, {4, 0, 1}, {9});
  CHECK(rational.summands[1].dims.is_zero());
  CHECK(rational.total == graded::super_sym_dims(2, {4, 0, 1}));

  const auto k3 = coh_s2_n3({1, 0, 1}, {8, 0, 0}, {26, 0, 0});
  CHECK(k3.summands[0].dims == GradedDim{36, 0, 36});
  CHECK(k3.summands[1].dims == GradedDim{0, 0, 0, 0, 26});
  CHECK(k3.total == GradedDim{36, 0, 36, 0, 26});

  const auto abelian = coh_s2_n3({1, 2, 1}, {2}, {0});
  CHECK(abelian.summands[1].dims.is_zero());
  CHECK(abelian.total == GradedDim{3, 6, 3});

  // a single odd class cannot carry the embedding H*(O) -> S^2 H*(O)
  CHECK(kind_of([] { coh_s2_n3({0, 1}, {1}, {1}); }) == ErrorKind::NegativeQuotient);
}

TEST_CASE("coh_s2_conjecture examples") {
  const GradedDim ho{1, 2, 1}, hl{3, 1, 2}, hl2{4, 0, 1};
  CHECK(coh_s2_conjecture(2, ho, hl, hl2).total == coh_s2_n2(ho, hl, hl2).total);
  CHECK(coh_s2_conjecture(3, ho, hl, hl2).total == coh_s2_n3(ho, hl, hl2).total);
  const auto n4 = coh_s2_conjecture(4, {1, 0, 0}, {3, 0, 0}, {6, 0, 0});
  CHECK(n4.total == GradedDim{6});
  CHECK(n4.conjectural);
  CHECK(n4.provenance == Theorem::S2Conjecture);
  CHECK_FALSE(coh_s2_n2(ho, hl, hl2).conjectural);
}

TEST_CASE("property: conjecture specializes to n = 2, 3 on random inputs") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::uint64_t> e(0, 4);
  for (int i = 0; i < 300; ++i) {
    const GradedDim ho{1, e(rng), e(rng)}, hl{e(rng), e(rng), e(rng)}, hl2{e(rng), e(rng), e(rng)};
    CHECK(coh_s2_conjecture(2, ho, hl, hl2).total == coh_s2_n2(ho, hl, hl2).total);
    CHECK(coh_s2_conjecture(3, ho, hl, hl2).total == coh_s2_n3(ho, hl, hl2).total);
    for (int n = 2; n <= 6; ++n) {
      const auto d = coh_s2_conjecture(n, ho, hl, hl2);
      CHECK(d.total == summand_sum(d));
    }
  }
}

TEST_CASE("build_map_2515 examples") {
  const auto t11 = surface::p2_mult_table(1, 1);
  const auto m2 = build_map_2515(2, t11.left(), t11.right(), t11.target(), t11);
  CHECK(m2.matrix.rows() == 6);
  CHECK(m2.matrix.cols() == 9);
  CHECK(linalg::rank(m2.matrix) == 6);
  CHECK(linalg::kernel_basis(m2.matrix).size() == 3);
  CHECK_NOTHROW(m2.validate());

  // V one-dimensional: S^2 V (x) W = W and the map is 2 * (1 . a)
  const auto t01 = surface::p2_mult_table(0, 1);
  const auto m3 = build_map_2515(3, t01.left(), t01.right(), t01.target(), t01);
  linalg::RationalMatrix two(3, 3);
  for (std::size_t i = 0; i < 3; ++i) two(i, i) = 2;
  CHECK(m3.matrix == two);

  surface::MultTable zero(t11.left(), t11.right(), t11.target());
  for (int n = 2; n <= 4; ++n) CHECK(build_map_2515(n, zero.left(), zero.right(), zero.target(), zero).matrix.is_zero());

  CHECK(kind_of([&] { build_map_2515(2, t01.left(), t11.right(), t11.target(), t11); }) == ErrorKind::BasisMismatch);
  const graded::BasisSpace odd({{"a", 1}});
  surface::MultTable bad(odd, odd, odd);
  CHECK(kind_of([&] { build_map_2515(2, odd, odd, odd, bad); }) == ErrorKind::BadDegreeSupport);
}

TEST_CASE("property: pure powers go to (n-1) u^{n-2} (x) ua (multinomial oracle)") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4), deg(0, 2);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const int a = deg(rng), b = deg(rng);
      const auto mu = surface::p2_mult_table(a, b);
      const auto map = build_map_2515(n, mu.left(), mu.right(), mu.target(), mu);
      std::vector<Rational> u(mu.left().size()), alpha(mu.right().size());
      for (auto& x : u) x = Rational(num(rng), den(rng)), x.canonicalize();
      for (auto& x : alpha) x = Rational(num(rng), den(rng)), x.canonicalize();

      const auto nn = static_cast<std::size_t>(n);
      const auto dom = graded::enumerate_sym_basis(nn - 1, mu.left());
      const auto cod = graded::enumerate_sym_basis(nn - 2, mu.left());
      const auto high = multinomial_power(u, nn - 1);
      const auto low = multinomial_power(u, nn - 2);
      const auto ua = mu.apply(u, alpha);

      std::vector<Rational> x(map.matrix.cols()), expected(map.matrix.rows());
      for (std::size_t d = 0; d < dom.size(); ++d) {
        auto it = high.find(dom[d].even);
        if (it == high.end()) continue;
        for (std::size_t j = 0; j < alpha.size(); ++j) x[d * alpha.size() + j] = it->second * alpha[j];
      }
      for (std::size_t c = 0; c < cod.size(); ++c) {
        auto it = low.find(cod[c].even);
        if (it == low.end()) continue;
        for (std::size_t k = 0; k < ua.size(); ++k) expected[c * ua.size() + k] = (n - 1) * it->second * ua[k];
      }
      CHECK(map.matrix.apply(x) == expected);
    }
  }
}

TEST_CASE("sections_s2_twisted examples") {
  const auto trivial = sections_s2_twisted(2, surface::p2_surface(1, 0));
  CHECK(trivial.kernel.kernel_dim == 0);
  CHECK(trivial.decomposition.total == GradedDim{6});

  const auto twisted = sections_s2_twisted(2, surface::p2_surface(1, 1));
  CHECK(twisted.decomposition.summands[0].dims == GradedDim{21});
  CHECK(twisted.kernel.domain_dim == 30);
  CHECK(twisted.kernel.codomain_dim == 15);
  CHECK(twisted.kernel.rank == 15);
  CHECK(twisted.kernel.kernel_dim == 15);
  CHECK(twisted.decomposition.total == GradedDim{36});

  const auto n4 = sections_s2_twisted(4, surface::p2_surface(0, 0));
  CHECK(n4.decomposition.total == GradedDim{1});
  CHECK(n4.kernel.kernel_dim == 0);

  const auto k3 = surface::preset_surface("K3", {{Slot::L, {8}}, {Slot::L2, {26}}});
  CHECK(kind_of([&] { sections_s2_twisted(2, k3); }) == ErrorKind::MissingSlot);
  auto no_mult = surface::p2_surface(1, 1);
  no_mult.mults.clear();
  CHECK(kind_of([&] { sections_s2_twisted(2, no_mult); }) == ErrorKind::MissingMultTable);
}

TEST_CASE("property: A = O sections reduce to S^2 H^0(L)") {
  for (int n = 2; n <= 6; ++n) {
    for (int d = 0; d <= 3; ++d) {
      const auto r = sections_s2_twisted(n, surface::p2_surface(d, 0));
      const auto h0 = binomial(static_cast<std::uint64_t>(d + 2), 2);
      CHECK(r.kernel.kernel_dim == 0);
      CHECK(r.decomposition.total == GradedDim{binomial(h0 + 1, 2)});
      CHECK(r.kernel.kernel_dim == r.kernel.domain_dim - r.kernel.rank);
      CHECK(r.kernel.rank <= std::min(r.kernel.domain_dim, r.kernel.codomain_dim));
    }
  }
}

TEST_CASE("euler_K_twisted examples") {
  CHECK(euler_K_twisted(2, {3}, {10}, {15}) == 15);
  CHECK(euler_K_twisted(2, {1, 0, 0}, {4, 1, 2}, {4, 1, 2}) == 0);
  CHECK(euler_K_twisted(3, {1, 0, 0}, {4, 0, 1}, {4, 0, 1}) == 0);
  CHECK(euler_K_twisted(3, {1, 0, 0}, {4, 0, 1}, {2}) == 3);
  CHECK(kind_of([] { euler_K_twisted(4, {1}, {1}, {1}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("property: two routes agree at n = 2 on P^2") {
  for (int d = 0; d <= 3; ++d) {
    for (int e = 0; e <= 3; ++e) {
      const auto s = surface::p2_surface(d, e);
      const auto k = sections_s2_twisted(2, s).kernel.kernel_dim;
      CHECK(static_cast<std::int64_t>(k) ==
            euler_K_twisted(2, s.bundle(Slot::A).h, s.bundle(Slot::L2A).h, s.bundle(Slot::L2A2).h));
    }
  }
}

TEST_CASE("property: exactness alternating sum vanishes") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::uint64_t> e(0, 5);
  for (int i = 0; i < 200; ++i) {
    const GradedDim ha{e(rng), e(rng), e(rng)}, hl2a{e(rng), e(rng), e(rng)}, hl2a2{e(rng), e(rng), e(rng)};
    CHECK(les_alternating_sum(2, ha, hl2a, hl2a2) == 0);
    CHECK(les_alternating_sum(3, ha, hl2a, hl2a2) == 0);
  }
}

TEST_CASE("coh_s2_twisted_bounds") {
  SUBCASE("A = O collapses to the n = 2 theorem") {
    const auto k3 = surface::preset_surface("K3", {{Slot::L, {8}}, {Slot::L2, {26}}});
    const auto d = coh_s2_twisted_bounds(2, k3);
    REQUIRE(d.residual);
    REQUIRE(d.residual->exact);
    CHECK(*d.residual->exact == GradedDim{0, 0, 26});
    CHECK(d.residual->euler == 26);
    CHECK(d.total == coh_s2_n2({1, 0, 1}, {8}, {26}).total);
    CHECK(d.complete());

    const auto d3 = coh_s2_twisted_bounds(3, k3);
    CHECK(d3.total == coh_s2_n3({1, 0, 1}, {8}, {26}).total);
  }
  SUBCASE("everything in degree 0 on P^2") {
    const auto d = coh_s2_twisted_bounds(2, surface::p2_surface(1, 1));
    REQUIRE(d.residual->exact);
    CHECK(*d.residual->exact == GradedDim{15});
    CHECK(d.residual->euler == 15);
    CHECK(d.total == GradedDim{36});
    CHECK(d.total == sections_s2_twisted(2, surface::p2_surface(1, 1)).decomposition.total);

    const auto d3 = coh_s2_twisted_bounds(3, surface::p2_surface(1, 1));
    const auto s3 = sections_s2_twisted(3, surface::p2_surface(1, 1));
    REQUIRE(d3.residual->exact);
    CHECK((*d3.residual->exact)[0] == s3.kernel.kernel_dim);
    CHECK(graded::euler_char(*d3.residual->exact) == d3.residual->euler);
  }
  SUBCASE("vanishing middle term shifts the right term") {
    const auto s = surface::preset_surface(
        "K3", {{Slot::A, {1, 0, 1}}, {Slot::LA, {2}}, {Slot::L2A, {}}, {Slot::L2A2, {3}}});
    const auto d = coh_s2_twisted_bounds(3, s);
    REQUIRE(d.residual->exact);
    CHECK(*d.residual->exact == GradedDim{0, 3, 0, 3});
    CHECK(d.residual->euler == -6);
    CHECK(d.summands[0].dims == GradedDim{3, 0, 3});
  }
  SUBCASE("undetermined residual keeps Euler characteristic and bounds") {
    const auto s = surface::preset_surface(
        "K3", {{Slot::A, {2, 0, 1}}, {Slot::LA, {3}}, {Slot::L2A, {5, 1, 0}}, {Slot::L2A2, {7, 0, 2}}});
    const auto d = coh_s2_twisted_bounds(2, s);
    CHECK_FALSE(d.residual->exact.has_value());
    CHECK_FALSE(d.complete());
    // middle = [2,0,1] (x) [5,1] = [10,2,5,1], right = [7,0,2]
    CHECK(d.residual->upper_bound == GradedDim{10, 9, 5, 3});
    CHECK(d.residual->euler == 3 * 4 - 9);
  }
  CHECK(kind_of([] { coh_s2_twisted_bounds(2, surface::preset_surface("K3", {})); }) == ErrorKind::MissingSlot);
}

TEST_CASE("property: every decomposition total equals its summands") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::uint64_t> e(0, 3);
  for (int i = 0; i < 100; ++i) {
    const GradedDim ho{1, e(rng), e(rng)}, hl{e(rng), e(rng), e(rng)}, hl2{e(rng), e(rng), e(rng)};
    for (const auto& d : {coh_s2_n2(ho, hl, hl2), coh_s2_n3(ho, hl, hl2), coh_sk_taut(3, 1, ho, hl),
                          coh_sk_taut(2, 0, ho, hl)}) {
      CHECK(d.total == summand_sum(d));
    }
  }
}
