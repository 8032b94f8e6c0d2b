#include "wiretap/rational.hpp"

#include <cctype>

namespace wiretap {

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_fraction(std::string_view text) {
  std::size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_token(num)) return std::nullopt;
  BigInt n{std::string(num)};
  if (slash == std::string_view::npos) return Rational(n);
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(den)) return std::nullopt;
  BigInt d{std::string(den)};
  if (d == 0) return std::nullopt;
  if (d < 0) {  // the backing type wants a positive denominator
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

}  // namespace wiretap
