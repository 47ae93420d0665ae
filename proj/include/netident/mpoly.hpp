#ifndef NETIDENT_MPOLY_HPP
#define NETIDENT_MPOLY_HPP

#include "netident/graph.hpp"
#include "netident/poly.hpp"
#include "netident/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace netident {

// The excitation u_node delayed by `delay` steps relative to the instant at
// which the response is read.
struct DelayedInput {
  NodeId node = 0;
  int delay = 1;

  friend auto operator<=>(const DelayedInput&, const DelayedInput&) = default;
};

using Assignment = std::map<DelayedInput, Rational>;

// Product of powers of distinct variables, kept sorted by (node, delay).
// The empty monomial is the constant 1.
class Monomial {
public:
  using Factor = std::pair<DelayedInput, unsigned>;

  Monomial() = default;
  explicit Monomial(DelayedInput v, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }
  unsigned total_degree() const;
  // Exponent of v (0 when absent).
  unsigned exponent_of(DelayedInput v) const;

  Monomial operator*(const Monomial& other) const;
  Monomial delayed(int s) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
  std::vector<Factor> factors_;
};

// Sparse multivariate polynomial over DelayedInput variables in fully
// expanded canonical form: terms ordered by monomial, no zero coefficients.
// Two MPoly values are equal as functions iff they are structurally equal.
class MPoly {
public:
  using Terms = std::map<Monomial, Rational>;

  MPoly() = default;
  static MPoly constant(const Rational& c);
  static MPoly variable(DelayedInput v);
  // Zero coefficients are dropped.
  static MPoly from_terms(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational constant_term() const;
  // Every distinct variable occurring in some term.
  std::vector<DelayedInput> variables() const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);

  friend bool operator==(const MPoly&, const MPoly&) = default;

  // Renders as e.g. "u1[k-3]^2 + 2*u0[k-2]". `label` maps node ids to the
  // text used after "u"; by default the numeric id.
  std::string to_string(const std::function<std::string(NodeId)>& label = {}) const;

private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

// Number of terms above which expansion aborts with SizeLimitExceeded.
inline constexpr std::size_t kDefaultTermCap = 1'000'000;

// f(arg) fully expanded (Horner). Throws SizeLimitExceeded past term_cap.
MPoly compose(const Poly& f, const MPoly& arg, std::size_t term_cap = kDefaultTermCap);

// Every variable (j, d) becomes (j, d + s).
MPoly delay_shift(const MPoly& F, int s);

// Unassigned variables evaluate as 0.
Rational eval_response(const MPoly& F, const Assignment& assignment);

inline bool responses_equal(const MPoly& F, const MPoly& G) { return F == G; }

// Univariate polynomial in v obtained by zeroing every other variable.
Poly restrict_to_single_input(const MPoly& F, NodeId j, int delay);

// Treats F as a polynomial in v with the remaining variables fixed by
// `others` (missing ones are 0).
Poly slice(const MPoly& F, DelayedInput v, const Assignment& others);

} // namespace netident

#endif
