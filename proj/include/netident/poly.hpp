#ifndef NETIDENT_POLY_HPP
#define NETIDENT_POLY_HPP

#include "netident/rational.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace netident {

// Univariate polynomial with exact rational coefficients, coeffs()[n] is
// the coefficient of x^n. Trailing zeros are always trimmed, so the zero
// polynomial has no stored coefficients.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly monomial(const Rational& c, unsigned n);
  static Poly constant(const Rational& c) { return Poly{c}; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree, or std::nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  // Coefficient of x^n (zero past the degree).
  Rational coeff(unsigned n) const;

  Rational operator()(const Rational& x) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  // Human-readable form, e.g. "x + 3/2*x^2". Zero renders as "0".
  std::string to_string(const std::string& var = "x") const;

private:
  void trim();

  std::vector<Rational> coeffs_;
};

// Horner evaluation.
Rational eval(const Poly& p, const Rational& x);

enum class FunctionClass { General, FZ, FZNL };

const char* to_string(FunctionClass c);
// Accepts "general", "fz", "fznl" (case-insensitive).
std::optional<FunctionClass> parse_function_class(std::string_view text);

struct Classification {
  bool in_fz = false;
  bool in_fznl = false;
  bool is_linear = false;

  // Most specific class the polynomial belongs to.
  FunctionClass tightest() const {
    return in_fznl ? FunctionClass::FZNL : in_fz ? FunctionClass::FZ : FunctionClass::General;
  }
  bool member_of(FunctionClass c) const;
};

// Throws InvalidInput for the zero polynomial: an edge always carries a
// nonzero function.
Classification classify(const Poly& p);

// q(x) = p(x + c), by binomial expansion.
Poly shift_argument(const Poly& p, const Rational& c);

// Given q == p(. + c), returns c. Requires degree(p) >= 2 (DegreeTooLow
// otherwise); throws NotAShift when q is not an exact shift of p.
Rational recover_shift(const Poly& p, const Poly& q);

// Like recover_shift but tolerates an additive constant: finds (c, k) with
// q == p(. + c) + k. The shift is read off the top two coefficients, which a
// constant cannot touch.
struct ShiftAndOffset {
  Rational shift;
  Rational offset;
};
ShiftAndOffset recover_shift_modulo_constant(const Poly& p, const Poly& q);

// Unique polynomial of degree <= degree_bound through the points (Newton
// divided differences). Needs at least degree_bound + 1 points; extra points
// are checked against the fit. Throws DuplicateAbscissa / InconsistentSamples.
Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points, unsigned degree_bound);

// Default sample abscissae 0, 1, -1, 2, -2, ... (the first `count` of them).
std::vector<Rational> sample_abscissae(std::size_t count);

// True iff p is non-constant and p(. + period) != p. Throws InvalidInput on
// a zero period.
bool periodicity_impossible(const Poly& p, const Rational& period);

} // namespace netident

#endif
