#include "netident/rational.hpp"

#include "netident/error.hpp"

#include <cctype>

namespace netident {

std::string format_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return InvalidInput("malformed rational '" + std::string(text) + "'"); };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_text(num)) throw bad();
  if (slash == std::string_view::npos) return Rational(to_integer(num));
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_text(den)) throw bad();
  mpz_class d = to_integer(den);
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational r(to_integer(num), d);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

} // namespace netident
