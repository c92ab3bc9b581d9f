#include "tautcoh/surface.hpp"

#include <array>
#include <utility>

#include "tautcoh/error.hpp"

namespace tautcoh::surface {

using graded::BasisElement;
using graded::BasisSpace;
using graded::GradedDim;

std::string_view slot_name(Slot s) noexcept {
  switch (s) {
    case Slot::O: return "O";
    case Slot::L: return "L";
    case Slot::L2: return "L2";
    case Slot::A: return "A";
    case Slot::LA: return "LA";
    case Slot::L2A: return "L2A";
    case Slot::L2A2: return "L2A2";
  }
  return "?";
}

Slot parse_slot(std::string_view name) {
  for (auto s : kAllSlots) {
    if (slot_name(s) == name) return s;
  }
  throw Error(ErrorKind::ConfigParse, "unknown bundle slot '" + std::string(name) + "'");
}

void LineBundleData::validate() const {
  if (!h.supported_in(2)) {
    throw Error(ErrorKind::InvalidDims, name + ": " + graded::to_string(h) + " has support beyond degree 2");
  }
  if (basis) {
    if (basis->size() != h[0]) {
      throw Error(ErrorKind::InvalidDims, name + ": basis has " + std::to_string(basis->size()) +
                                              " elements but h^0 = " + std::to_string(h[0]));
    }
    for (const auto& e : basis->elements()) {
      if (e.degree != 0) throw Error(ErrorKind::InvalidDims, name + ": basis element '" + e.label + "' not in degree 0");
    }
  }
}

MultTable::MultTable(BasisSpace left, BasisSpace right, BasisSpace target)
    : left_(std::move(left)), right_(std::move(right)), target_(std::move(target)),
      terms_(left_.size() * right_.size()) {}

void MultTable::add(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff) {
  if (i >= left_.size() || j >= right_.size() || k >= target_.size()) {
    throw Error(ErrorKind::InvalidArgument, "multiplication entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                "," + std::to_string(k) + ") out of range");
  }
  auto& terms = terms_[i * right_.size() + j];
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (it->target == k) {
      it->coeff += coeff;
      if (it->coeff == 0) terms.erase(it);
      return;
    }
  }
  if (coeff != 0) terms.push_back({k, coeff});
}

std::vector<Rational> MultTable::apply(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != left_.size() || y.size() != right_.size()) {
    throw Error(ErrorKind::InvalidArgument, "operand sizes do not match the multiplication table");
  }
  std::vector<Rational> out(target_.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      for (const auto& t : product(i, j)) out[t.target] += t.coeff * x[i] * y[j];
    }
  }
  return out;
}

const LineBundleData& SurfaceData::bundle(Slot s) const {
  auto it = bundles.find(s);
  if (it == bundles.end()) {
    throw Error(ErrorKind::MissingSlot, name + ": slot " + std::string(slot_name(s)) + " not provided");
  }
  return it->second;
}

const BasisSpace& SurfaceData::basis(Slot s) const {
  const auto& b = bundle(s);
  if (!b.basis) {
    throw Error(ErrorKind::MissingSlot, name + ": slot " + std::string(slot_name(s)) + " has no H^0 basis");
  }
  return *b.basis;
}

const MultTable* SurfaceData::find_mult(Slot left, Slot right, Slot target) const {
  for (const auto& m : mults) {
    if (m.left == left && m.right == right && m.target == target) return &m.table;
  }
  return nullptr;
}

void SurfaceData::validate() const {
  const auto& o = bundle(Slot::O);
  if (o.h[0] != 1) throw Error(ErrorKind::InvalidDims, name + ": h^0(O) must be 1 (connected surface)");
  for (const auto& [slot, b] : bundles) b.validate();
  for (const auto& m : mults) {
    for (auto [slot, space] : {std::pair{m.left, &m.table.left()}, std::pair{m.right, &m.table.right()},
                               std::pair{m.target, &m.table.target()}}) {
      const auto& b = bundle(slot);
      if (!b.basis || *b.basis != *space) {
        throw Error(ErrorKind::BasisMismatch, name + ": multiplication table basis differs from slot " +
                                                  std::string(slot_name(slot)));
      }
    }
  }
}

namespace {

using Exponents = std::array<int, 3>;

std::vector<Exponents> p2_monomials(int d) {
  std::vector<Exponents> out;
  for (int a = d; a >= 0; --a) {
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  }
  return out;
}

std::string monomial_name(const Exponents& e) {
  static constexpr std::array<char, 3> vars{'U', 'V', 'W'};
  std::string s;
  for (std::size_t i = 0; i < 3; ++i) {
    if (e[i] == 0) continue;
    s += vars[i];
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

BasisSpace p2_basis(int d) {
  std::vector<BasisElement> elems;
  for (const auto& e : p2_monomials(d)) elems.push_back({monomial_name(e), 0});
  return BasisSpace(std::move(elems));
}

}  // namespace

LineBundleData p2_line_bundle(int d) {
  const auto h0 = d >= 0 ? binomial(static_cast<std::uint64_t>(d + 2), 2) : 0;
  const auto h2 = d <= -3 ? binomial(static_cast<std::uint64_t>(-d - 1), 2) : 0;
  LineBundleData out{"O(" + std::to_string(d) + ")", GradedDim{h0, 0, h2}, std::nullopt};
  if (d >= 0) out.basis = p2_basis(d);
  return out;
}

MultTable p2_mult_table(int a, int b) {
  if (a < 0 || b < 0) throw Error(ErrorKind::InvalidArgument, "p2_mult_table needs nonnegative degrees");
  const auto left = p2_monomials(a);
  const auto right = p2_monomials(b);
  const auto target = p2_monomials(a + b);
  std::map<Exponents, std::size_t> target_index;
  for (std::size_t k = 0; k < target.size(); ++k) target_index[target[k]] = k;

  MultTable table(p2_basis(a), p2_basis(b), p2_basis(a + b));
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      const Exponents prod{left[i][0] + right[j][0], left[i][1] + right[j][1], left[i][2] + right[j][2]};
      table.add(i, j, target_index.at(prod), 1);
    }
  }
  return table;
}

SurfaceData p2_surface(int d, int e) {
  SurfaceData s;
  s.name = "P2(d=" + std::to_string(d) + ",e=" + std::to_string(e) + ")";
  const std::array<std::pair<Slot, int>, 7> degrees{{{Slot::O, 0},
                                                     {Slot::L, d},
                                                     {Slot::L2, 2 * d},
                                                     {Slot::A, e},
                                                     {Slot::LA, d + e},
                                                     {Slot::L2A, 2 * d + e},
                                                     {Slot::L2A2, 2 * d + 2 * e}}};
  for (const auto& [slot, deg] : degrees) s.bundles[slot] = p2_line_bundle(deg);
  if (e >= 0 && 2 * d + e >= 0) {
    s.mults.push_back({Slot::A, Slot::L2A, Slot::L2A2, p2_mult_table(e, 2 * d + e)});
  }
  s.trivial_twist = e == 0;
  return s;
}

SurfaceData preset_surface(const std::string& name, const std::map<Slot, GradedDim>& bundle_dims) {
  std::optional<GradedDim> ho;
  if (name == "rational_qpg0") {
    ho = GradedDim{1, 0, 0};
  } else if (name == "K3") {
    ho = GradedDim{1, 0, 1};
  } else if (name == "abelian") {
    ho = GradedDim{1, 2, 1};
  } else if (name != "custom") {
    throw Error(ErrorKind::InvalidDims, "unknown preset '" + name + "'");
  }

  SurfaceData s;
  s.name = name;
  for (const auto& [slot, dims] : bundle_dims) {
    if (slot == Slot::O && ho && dims != *ho) {
      throw Error(ErrorKind::InvalidDims, name + " fixes H*(O) = " + graded::to_string(*ho) + ", got " +
                                              graded::to_string(dims));
    }
    s.bundles[slot] = LineBundleData{std::string(slot_name(slot)), dims, std::nullopt};
  }
  if (ho) s.bundles[Slot::O] = LineBundleData{"O", *ho, std::nullopt};
  if (!s.has(Slot::O)) throw Error(ErrorKind::InvalidDims, "custom surface needs H*(O)");

  if (!s.has(Slot::A)) {
    s.trivial_twist = true;
    s.bundles[Slot::A] = LineBundleData{"A", s.bundles[Slot::O].h, std::nullopt};
    const std::array<std::pair<Slot, Slot>, 3> same{{{Slot::LA, Slot::L}, {Slot::L2A, Slot::L2}, {Slot::L2A2, Slot::L2}}};
    for (const auto& [twisted, plain] : same) {
      if (!s.has(twisted) && s.has(plain)) s.bundles[twisted] = LineBundleData{std::string(slot_name(twisted)), s.bundles[plain].h, std::nullopt};
    }
  }
  s.validate();
  return s;
}

}  // namespace tautcoh::surface
