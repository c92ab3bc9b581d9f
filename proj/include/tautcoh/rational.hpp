#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tautcoh {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Exact binomial coefficient; binomial(n, k) = 0 for k > n.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace tautcoh
