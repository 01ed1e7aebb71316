#include "flagcurv/rational.hpp"

#include <cctype>

namespace flagcurv {

namespace {

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  mpz_class v(std::string(s.substr(i)), 10);
  return negative ? mpz_class(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  const mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
  const std::string_view den_text = trim(s.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  const mpz_class den = parse_integer(den_text, text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational pow(const Rational& r, unsigned e) {
  Rational result(1);
  Rational base = r;
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

}  // namespace flagcurv
