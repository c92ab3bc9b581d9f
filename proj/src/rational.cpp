#include "tautcoh/rational.hpp"

#include "tautcoh/error.hpp"

namespace tautcoh {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error(ErrorKind::ConfigParse, "not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorKind::ConfigParse, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace tautcoh
