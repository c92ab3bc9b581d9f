#include "tautcoh/formulas.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "tautcoh/error.hpp"

namespace tautcoh::formulas {

using graded::BasisSpace;
using graded::quotient_dims;
using graded::super_sym_dims;
using graded::tensor_dims;
using surface::Slot;

namespace {

const GradedDim kGround{1};

void require_surface_support(const GradedDim& h, std::string_view what) {
  if (!h.supported_in(2)) {
    throw Error(ErrorKind::BadDegreeSupport,
                std::string(what) + " = " + graded::to_string(h) + " has support beyond degree 2");
  }
}

void require_n(int n, int lo) {
  if (n < lo) throw Error(ErrorKind::InvalidArgument, "n = " + std::to_string(n) + " below " + std::to_string(lo));
}

void require_n23(int n) {
  if (n != 2 && n != 3) throw Error(ErrorKind::InvalidArgument, "twisted sequences are known for n = 2, 3 only");
}

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

std::string pow_label(std::size_t k, std::string_view space) {
  if (k == 1) return std::string(space);
  return "S^" + std::to_string(k) + std::string(space);
}

}  // namespace

std::string_view to_string(Theorem t) noexcept {
  switch (t) {
    case Theorem::SkTautological: return "sk_taut";
    case Theorem::S2HilbertSquare: return "s2_n2";
    case Theorem::S2HilbertCube: return "s2_n3";
    case Theorem::S2Conjecture: return "s2_conjecture";
    case Theorem::S2TwistedSections: return "sections_twisted";
    case Theorem::S2TwistedBounds: return "twisted_bounds";
  }
  return "?";
}

Decomposition make_decomposition(Theorem provenance, std::vector<Summand> summands) {
  Decomposition d;
  d.provenance = provenance;
  d.conjectural = provenance == Theorem::S2Conjecture;
  for (const auto& s : summands) d.total = graded::sum_dims(d.total, s.dims);
  d.summands = std::move(summands);
  return d;
}

Decomposition coh_sk_taut(int n, int k, const GradedDim& hA, const GradedDim& hLA) {
  require_n(n, 2);
  if (k != 0 && k != 1) throw Error(ErrorKind::InvalidArgument, "k must be 0 or 1");
  require_surface_support(hA, "H*(A)");
  require_surface_support(hLA, "H*(L(x)A)");
  const auto sym_a = super_sym_dims(sz(n - k), hA);
  const auto sym_la = super_sym_dims(sz(k), hLA);
  std::string label = pow_label(sz(n - k), "H*(A)");
  if (k == 1) label += "(x)H*(LA)";
  return make_decomposition(Theorem::SkTautological, {{label, tensor_dims(sym_a, sym_la)}});
}

Decomposition coh_s2_n2(const GradedDim& hO, const GradedDim& hL, const GradedDim& hL2) {
  require_surface_support(hO, "H*(O)");
  require_surface_support(hL, "H*(L)");
  require_surface_support(hL2, "H*(L^2)");
  return make_decomposition(Theorem::S2HilbertSquare,
                            {{"S^2H*(L)", super_sym_dims(2, hL)},
                             {"(H*(O)/C)(x)H*(L^2)", tensor_dims(quotient_dims(hO, kGround), hL2)}});
}

Decomposition coh_s2_n3(const GradedDim& hO, const GradedDim& hL, const GradedDim& hL2) {
  require_surface_support(hO, "H*(O)");
  require_surface_support(hL, "H*(L)");
  require_surface_support(hL2, "H*(L^2)");
  return make_decomposition(
      Theorem::S2HilbertCube,
      {{"H*(O)(x)S^2H*(L)", tensor_dims(hO, super_sym_dims(2, hL))},
       {"(S^2H*(O)/H*(O))(x)H*(L^2)", tensor_dims(quotient_dims(super_sym_dims(2, hO), hO), hL2)}});
}

Decomposition coh_s2_conjecture(int n, const GradedDim& hO, const GradedDim& hL, const GradedDim& hL2) {
  require_n(n, 2);
  require_surface_support(hO, "H*(O)");
  require_surface_support(hL, "H*(L)");
  require_surface_support(hL2, "H*(L^2)");
  const std::size_t m = sz(n);
  const auto lower = super_sym_dims(m - 2, hO);
  const auto upper = super_sym_dims(m - 1, hO);
  const std::string lower_label = m == 2 ? "C" : pow_label(m - 2, "H*(O)");
  return make_decomposition(
      Theorem::S2Conjecture,
      {{(m == 2 ? "" : lower_label + "(x)") + "S^2H*(L)", tensor_dims(lower, super_sym_dims(2, hL))},
       {"(" + pow_label(m - 1, "H*(O)") + "/" + lower_label + ")(x)H*(L^2)",
        tensor_dims(quotient_dims(upper, lower), hL2)}});
}

linalg::LinearMapData build_map_2515(int n, const BasisSpace& v, const BasisSpace& w, const BasisSpace& m,
                                     const surface::MultTable& mu) {
  require_n(n, 2);
  if (mu.left() != v || mu.right() != w || mu.target() != m) {
    throw Error(ErrorKind::BasisMismatch, "multiplication table is not V x W -> M");
  }
  for (const auto* space : {&v, &w, &m}) {
    if (!space->dims().supported_in(0)) {
      throw Error(ErrorKind::BadDegreeSupport, "bases of the sections map must sit in degree 0");
    }
  }
  const std::size_t k = sz(n);
  const auto dom_monomials = graded::enumerate_sym_basis(k - 1, v);
  const auto cod_monomials = graded::enumerate_sym_basis(k - 2, v);
  std::map<graded::SymMonomial, std::size_t> cod_index;
  for (std::size_t i = 0; i < cod_monomials.size(); ++i) cod_index.emplace(cod_monomials[i], i);

  linalg::LinearMapData out{linalg::RationalMatrix(cod_monomials.size() * m.size(), dom_monomials.size() * w.size()),
                            graded::tensor_basis(graded::sym_basis_space(k - 1, v), w),
                            graded::tensor_basis(graded::sym_basis_space(k - 2, v), m)};
  for (std::size_t d = 0; d < dom_monomials.size(); ++d) {
    const auto& factors = dom_monomials[d].even;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      graded::SymMonomial rest;
      rest.even = factors;
      rest.even.erase(rest.even.begin() + static_cast<std::ptrdiff_t>(j));
      const std::size_t row_block = cod_index.at(rest) * m.size();
      for (std::size_t a = 0; a < w.size(); ++a) {
        const std::size_t col = d * w.size() + a;
        for (const auto& term : mu.product(factors[j], a)) out.matrix(row_block + term.target, col) += term.coeff;
      }
    }
  }
  return out;
}

SectionsReport sections_s2_twisted(int n, const surface::SurfaceData& surface) {
  require_n(n, 2);
  const auto& v = surface.basis(Slot::A);
  const auto& w = surface.basis(Slot::L2A);
  const auto& m = surface.basis(Slot::L2A2);
  const auto h0_la = surface.bundle(Slot::LA).h[0];
  const auto* mu = surface.find_mult(Slot::A, Slot::L2A, Slot::L2A2);
  if (!mu) throw Error(ErrorKind::MissingMultTable, surface.name + ": no multiplication (A, L2A) -> L2A2");

  KernelReport kr{build_map_2515(n, v, w, m, *mu), 0, 0, 0, 0};
  kr.domain_dim = kr.map.matrix.cols();
  kr.codomain_dim = kr.map.matrix.rows();
  kr.rank = linalg::rank(kr.map.matrix);
  kr.kernel_dim = kr.domain_dim - kr.rank;

  const auto canonical = tensor_dims(super_sym_dims(sz(n - 2), GradedDim{v.size()}),
                                     super_sym_dims(2, GradedDim{h0_la}));
  std::string label = n == 2 ? "S^2H^0(LA)" : pow_label(sz(n - 2), "H^0(A)") + "(x)S^2H^0(LA)";
  auto dec = make_decomposition(Theorem::S2TwistedSections,
                                {{label, canonical}, {"K0", GradedDim{kr.kernel_dim}}});
  return {std::move(dec), std::move(kr)};
}

LesTerms les_terms(int n, const GradedDim& hA, const GradedDim& hL2A, const GradedDim& hL2A2) {
  require_n23(n);
  require_surface_support(hA, "H*(A)");
  require_surface_support(hL2A, "H*(L^2A)");
  require_surface_support(hL2A2, "H*(L^2A^2)");
  if (n == 2) return {tensor_dims(hA, hL2A), hL2A2};
  return {tensor_dims(super_sym_dims(2, hA), hL2A), tensor_dims(hA, hL2A2)};
}

std::int64_t euler_K_twisted(int n, const GradedDim& hA, const GradedDim& hL2A, const GradedDim& hL2A2) {
  require_n23(n);
  using graded::euler_char;
  if (n == 2) return euler_char(hA) * euler_char(hL2A) - euler_char(hL2A2);
  return euler_char(super_sym_dims(2, hA)) * euler_char(hL2A) - euler_char(hA) * euler_char(hL2A2);
}

std::int64_t les_alternating_sum(int n, const GradedDim& hA, const GradedDim& hL2A, const GradedDim& hL2A2) {
  const auto terms = les_terms(n, hA, hL2A, hL2A2);
  return euler_K_twisted(n, hA, hL2A, hL2A2) - graded::euler_char(terms.middle) + graded::euler_char(terms.right);
}

Decomposition coh_s2_twisted_bounds(int n, const surface::SurfaceData& surface) {
  require_n23(n);
  const auto& hA = surface.bundle(Slot::A).h;
  const auto& hLA = surface.bundle(Slot::LA).h;
  const auto& hL2A = surface.bundle(Slot::L2A).h;
  const auto& hL2A2 = surface.bundle(Slot::L2A2).h;
  const auto terms = les_terms(n, hA, hL2A, hL2A2);

  Residual res;
  res.label = "K*";
  res.euler = euler_K_twisted(n, hA, hL2A, hL2A2);
  {
    const std::size_t len = std::max(terms.middle.length(), terms.right.length() + 1);
    std::vector<std::uint64_t> bound(len, 0);
    for (std::size_t i = 0; i < len; ++i) bound[i] = terms.middle[i] + (i > 0 ? terms.right[i - 1] : 0);
    res.upper_bound = GradedDim(std::move(bound));
  }

  const auto* mu = surface.find_mult(Slot::A, Slot::L2A, Slot::L2A2);
  if (surface.trivial_twist) {
    // A = O: 1 (x) a |-> a splits the map, so K* is its kernel.
    res.exact = quotient_dims(terms.middle, terms.right);
    res.reason = "A = O: the map is split surjective";
  } else if (terms.right.is_zero()) {
    res.exact = terms.middle;
    res.reason = "right term vanishes";
  } else if (terms.middle.is_zero()) {
    std::vector<std::uint64_t> shifted(terms.right.length() + 1, 0);
    for (std::size_t i = 0; i < terms.right.length(); ++i) shifted[i + 1] = terms.right[i];
    res.exact = GradedDim(std::move(shifted));
    res.reason = "middle term vanishes";
  } else if (terms.middle.supported_in(0) && terms.right.supported_in(0) && mu &&
             surface.bundle(Slot::A).basis && surface.bundle(Slot::L2A).basis && surface.bundle(Slot::L2A2).basis) {
    const auto map = build_map_2515(n, surface.basis(Slot::A), surface.basis(Slot::L2A), surface.basis(Slot::L2A2), *mu);
    const auto r = linalg::rank(map.matrix);
    res.exact = GradedDim{terms.middle[0] - r, terms.right[0] - r};
    res.reason = "all terms in degree 0: kernel and cokernel of the sections map";
  } else {
    res.reason = "connecting maps undetermined: Euler characteristic and bounds only";
  }

  std::vector<Summand> summands;
  if (n == 2) {
    summands.push_back({"S^2H*(LA)", super_sym_dims(2, hLA)});
  } else {
    summands.push_back({"H*(A)(x)S^2H*(LA)", tensor_dims(hA, super_sym_dims(2, hLA))});
  }
  if (res.exact) summands.push_back({res.label, *res.exact});
  auto dec = make_decomposition(Theorem::S2TwistedBounds, std::move(summands));
  dec.residual = std::move(res);
  return dec;
}

}  // namespace tautcoh::formulas
