#include "netident/poly.hpp"

#include "netident/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace netident {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::monomial(const Rational& c, unsigned n) {
  std::vector<Rational> v(n + 1);
  v[n] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<unsigned> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

Rational Poly::coeff(unsigned n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(0); }

Rational Poly::operator()(const Rational& x) const { return eval(*this, x); }

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t n = 0; n < other.coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t n = 0; n < other.coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * other.coeffs_[b];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    const Rational& c = coeffs_[n];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (n == 0) {
      os << format_rational(mag);
      continue;
    }
    if (mag != 1) os << format_rational(mag) << "*";
    os << var;
    if (n > 1) os << "^" << n;
  }
  return os.str();
}

Rational eval(const Poly& p, const Rational& x) {
  const auto& c = p.coeffs();
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

const char* to_string(FunctionClass c) {
  switch (c) {
  case FunctionClass::General:
    return "general";
  case FunctionClass::FZ:
    return "fz";
  case FunctionClass::FZNL:
    return "fznl";
  }
  return "?";
}

std::optional<FunctionClass> parse_function_class(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "general") return FunctionClass::General;
  if (lower == "fz") return FunctionClass::FZ;
  if (lower == "fznl") return FunctionClass::FZNL;
  return std::nullopt;
}

bool Classification::member_of(FunctionClass c) const {
  switch (c) {
  case FunctionClass::General:
    return true;
  case FunctionClass::FZ:
    return in_fz;
  case FunctionClass::FZNL:
    return in_fznl;
  }
  return false;
}

Classification classify(const Poly& p) {
  if (p.is_zero()) throw InvalidInput("zero polynomial is not a valid edge function");
  Classification c;
  c.in_fz = p.coeff(0) == 0;
  c.in_fznl = c.in_fz && *p.degree() > 1;
  c.is_linear = c.in_fz && *p.degree() <= 1;
  return c;
}

Poly shift_argument(const Poly& p, const Rational& c) {
  // Horner in the polynomial ring: (((a_d)(x + c) + a_{d-1})(x + c) + ...).
  const Poly x_plus_c{c, Rational(1)};
  Poly acc;
  const auto& a = p.coeffs();
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc *= x_plus_c;
    acc += Poly::constant(*it);
  }
  return acc;
}

namespace {

Rational shift_from_top_coefficients(const Poly& p, const Poly& q) {
  auto d = p.degree();
  if (!d || *d < 2)
    throw DegreeTooLow("shift recovery needs degree >= 2; for degree " + std::string(d ? std::to_string(*d) : "-inf") +
                       " a shift cannot be told apart from an additive constant");
  if (q.degree() != d || q.coeff(*d) != p.coeff(*d))
    throw NotAShift("leading terms differ: " + q.to_string() + " is not a shift of " + p.to_string());
  // Coefficient of x^{d-1} in p(x + c) is p_{d-1} + d * p_d * c.
  return (q.coeff(*d - 1) - p.coeff(*d - 1)) / (Rational(*d) * p.coeff(*d));
}

} // namespace

Rational recover_shift(const Poly& p, const Poly& q) {
  Rational c = shift_from_top_coefficients(p, q);
  if (shift_argument(p, c) != q) throw NotAShift(q.to_string() + " is not a shift of " + p.to_string());
  return c;
}

ShiftAndOffset recover_shift_modulo_constant(const Poly& p, const Poly& q) {
  Rational c = shift_from_top_coefficients(p, q);
  Poly shifted = shift_argument(p, c);
  Rational k = q.coeff(0) - shifted.coeff(0);
  if (shifted + Poly::constant(k) != q)
    throw NotAShift(q.to_string() + " is not a shift of " + p.to_string() + " plus a constant");
  return {c, k};
}

Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points, unsigned degree_bound) {
  const std::size_t n = static_cast<std::size_t>(degree_bound) + 1;
  if (points.size() < n)
    throw InvalidInput("interpolation with degree bound " + std::to_string(degree_bound) + " needs " +
                       std::to_string(n) + " points, got " + std::to_string(points.size()));
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (points[a].first == points[b].first)
        throw DuplicateAbscissa("abscissa " + format_rational(points[a].first) + " appears twice");

  // Newton divided differences on the first n points.
  std::vector<Rational> dd(n);
  for (std::size_t k = 0; k < n; ++k) dd[k] = points[k].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k)
      dd[k] = (dd[k] - dd[k - 1]) / (points[k].first - points[k - level].first);

  Poly p;
  for (std::size_t k = n; k-- > 0;) {
    p *= Poly{-points[k].first, Rational(1)};
    p += Poly::constant(dd[k]);
  }
  for (std::size_t k = n; k < points.size(); ++k)
    if (eval(p, points[k].first) != points[k].second)
      throw InconsistentSamples("samples do not fit a polynomial of degree <= " + std::to_string(degree_bound) +
                                " (mismatch at x = " + format_rational(points[k].first) + ")");
  return p;
}

std::vector<Rational> sample_abscissae(std::size_t count) {
  std::vector<Rational> xs;
  xs.reserve(count);
  for (long k = 0; xs.size() < count; ++k) {
    if (k == 0) {
      xs.emplace_back(0);
      continue;
    }
    xs.emplace_back(k);
    if (xs.size() < count) xs.emplace_back(-k);
  }
  return xs;
}

bool periodicity_impossible(const Poly& p, const Rational& period) {
  if (period == 0) throw InvalidInput("period must be nonzero");
  auto d = p.degree();
  if (!d || *d == 0) return false;
  return shift_argument(p, period) != p;
}

} // namespace netident
