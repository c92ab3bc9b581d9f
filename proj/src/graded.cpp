#include "tautcoh/graded.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "tautcoh/error.hpp"

namespace tautcoh::graded {

GradedDim::GradedDim(std::initializer_list<std::uint64_t> dims) : dims_(dims) { normalize(); }

GradedDim::GradedDim(std::vector<std::uint64_t> dims) : dims_(std::move(dims)) { normalize(); }

GradedDim GradedDim::concentrated(std::size_t degree, std::uint64_t dim) {
  std::vector<std::uint64_t> d(degree + 1, 0);
  d[degree] = dim;
  return GradedDim(std::move(d));
}

void GradedDim::normalize() {
  while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
}

std::vector<std::uint64_t> GradedDim::padded(std::size_t len) const {
  std::vector<std::uint64_t> out = dims_;
  if (out.size() < len) out.resize(len, 0);
  return out;
}

std::uint64_t GradedDim::total() const noexcept {
  std::uint64_t t = 0;
  for (auto d : dims_) t += d;
  return t;
}

std::string to_string(const GradedDim& a) {
  if (a.is_zero()) return "[0]";
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ']';
  return os.str();
}

GradedDim sum_dims(const GradedDim& a, const GradedDim& b) {
  std::vector<std::uint64_t> out(std::max(a.length(), b.length()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return GradedDim(std::move(out));
}

GradedDim tensor_dims(const GradedDim& a, const GradedDim& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint64_t> out(a.length() + b.length() - 1, 0);
  for (std::size_t p = 0; p < a.length(); ++p) {
    for (std::size_t q = 0; q < b.length(); ++q) out[p + q] += a[p] * b[q];
  }
  return GradedDim(std::move(out));
}

GradedDim super_sym_dims(std::size_t k, const GradedDim& a) {
  // series[j] is the t-polynomial multiplying z^j, truncated at z^k.
  std::vector<std::vector<std::uint64_t>> series(k + 1);
  series[0] = {1};
  for (std::size_t deg = 0; deg < a.length(); ++deg) {
    const std::uint64_t count = a[deg];
    if (count == 0) continue;
    const bool odd = deg % 2 == 1;
    std::vector<std::vector<std::uint64_t>> next(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
      for (std::size_t m = 0; m <= j; ++m) {
        const std::uint64_t coeff = odd ? binomial(count, m) : binomial(count + m - 1, m);
        if (coeff == 0 || series[j - m].empty()) continue;
        const auto& src = series[j - m];
        const std::size_t shift = deg * m;
        auto& dst = next[j];
        if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + shift] += coeff * src[i];
      }
    }
    series = std::move(next);
  }
  return GradedDim(std::move(series[k]));
}

GradedDim quotient_dims(const GradedDim& big, const GradedDim& small) {
  std::vector<std::uint64_t> out(std::max(big.length(), small.length()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (big[i] < small[i]) {
      throw Error(ErrorKind::NegativeQuotient, to_string(small) + " does not embed in " +
                                                   to_string(big) + " in degree " +
                                                   std::to_string(i));
    }
    out[i] = big[i] - small[i];
  }
  return GradedDim(std::move(out));
}

std::int64_t euler_char(const GradedDim& a) {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < a.length(); ++i) {
    const auto d = static_cast<std::int64_t>(a[i]);
    chi += (i % 2 == 0) ? d : -d;
  }
  return chi;
}

BasisSpace::BasisSpace(std::vector<BasisElement> elements) : elements_(std::move(elements)) {
  std::set<std::string> seen;
  for (const auto& e : elements_) {
    if (!seen.insert(e.label).second) {
      throw Error(ErrorKind::InvalidArgument, "repeated basis label '" + e.label + "'");
    }
  }
}

std::optional<std::size_t> BasisSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].label == label) return i;
  }
  return std::nullopt;
}

GradedDim BasisSpace::dims() const {
  std::vector<std::uint64_t> d;
  for (const auto& e : elements_) {
    if (d.size() <= e.degree) d.resize(e.degree + 1, 0);
    ++d[e.degree];
  }
  return GradedDim(std::move(d));
}

namespace {

void enumerate_rec(const BasisSpace& v, std::size_t k, std::size_t start, std::vector<std::size_t>& factors,
                   std::vector<SymMonomial>& out) {
  if (factors.size() == k) {
    SymMonomial m;
    for (auto f : factors) {
      (v.is_odd(f) ? m.odd : m.even).push_back(f);
      m.degree += v[f].degree;
    }
    out.push_back(std::move(m));
    return;
  }
  for (std::size_t i = start; i < v.size(); ++i) {
    factors.push_back(i);
    // an odd generator may appear at most once
    enumerate_rec(v, k, v.is_odd(i) ? i + 1 : i, factors, out);
    factors.pop_back();
  }
}

}  // namespace

std::vector<SymMonomial> enumerate_sym_basis(std::size_t k, const BasisSpace& v) {
  std::vector<SymMonomial> out;
  std::vector<std::size_t> factors;
  factors.reserve(k);
  enumerate_rec(v, k, 0, factors, out);
  return out;
}

std::optional<SignedMonomial> multiply(const SymMonomial& m, std::size_t i, const BasisSpace& v) {
  SignedMonomial r{1, m};
  r.monomial.degree += v[i].degree;
  if (!v.is_odd(i)) {
    auto& even = r.monomial.even;
    even.insert(std::upper_bound(even.begin(), even.end(), i), i);
    return r;
  }
  auto& odd = r.monomial.odd;
  auto pos = std::lower_bound(odd.begin(), odd.end(), i);
  if (pos != odd.end() && *pos == i) return std::nullopt;
  const auto passed = std::distance(pos, odd.end());
  if (passed % 2 == 1) r.sign = -1;
  odd.insert(pos, i);
  return r;
}

std::optional<SignedMonomial> canonical_monomial(std::span<const std::size_t> factors,
                                                 const BasisSpace& v) {
  SignedMonomial acc;
  for (auto f : factors) {
    auto next = multiply(acc.monomial, f, v);
    if (!next) return std::nullopt;
    next->sign *= acc.sign;
    acc = std::move(*next);
  }
  return acc;
}

std::string monomial_label(const SymMonomial& m, const BasisSpace& v) {
  if (m.size() == 0) return "1";
  std::vector<std::size_t> all = m.even;
  all.insert(all.end(), m.odd.begin(), m.odd.end());
  std::string out;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    if (!out.empty()) out += '*';
    out += v[all[i]].label;
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

BasisSpace sym_basis_space(std::size_t k, const BasisSpace& v) {
  std::vector<BasisElement> elems;
  for (const auto& m : enumerate_sym_basis(k, v)) elems.push_back({monomial_label(m, v), m.degree});
  return BasisSpace(std::move(elems));
}

BasisSpace tensor_basis(const BasisSpace& a, const BasisSpace& b) {
  std::vector<BasisElement> elems;
  elems.reserve(a.size() * b.size());
  for (const auto& x : a.elements()) {
    for (const auto& y : b.elements()) elems.push_back({x.label + "(x)" + y.label, x.degree + y.degree});
  }
  return BasisSpace(std::move(elems));
}

SymVector sym_power_vector(std::span<const Rational> u, std::size_t k, const BasisSpace& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorKind::InvalidArgument, "coordinate vector does not match basis size");
  }
  SymVector acc{{SymMonomial{}, Rational(1)}};
  for (std::size_t step = 0; step < k; ++step) {
    SymVector next;
    for (const auto& [m, c] : acc) {
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        auto prod = multiply(m, i, v);
        if (!prod) continue;
        next[prod->monomial] += prod->sign * c * u[i];
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    acc = std::move(next);
  }
  return acc;
}

}  // namespace tautcoh::graded
