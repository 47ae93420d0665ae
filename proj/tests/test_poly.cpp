#include "netident/error.hpp"
#include "netident/generators.hpp"
#include "netident/poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace netident;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

// Naive power-sum evaluation, separate from the Horner path.
Rational naive_eval(const Poly& p, const Rational& x) {
  Rational sum = 0;
  for (std::size_t n = 0; n < p.coeffs().size(); ++n) {
    Rational term = p.coeffs()[n];
    for (std::size_t k = 0; k < n; ++k) term *= x;
    sum += term;
  }
  return sum;
}

} // namespace

TEST(Poly, Eval) {
  EXPECT_EQ(eval(Poly::monomial(1, 2), 3), 9);
  EXPECT_EQ(eval(Poly{}, q(7)), 0);
  EXPECT_EQ(eval(Poly{0, 1, 0, 1}, q(1, 2)), q(5, 8));
}

TEST(Poly, TrimsAndPrints) {
  Poly p{0, 1, 0, 0};
  EXPECT_EQ(p.degree(), 1u);
  EXPECT_FALSE(Poly{}.degree().has_value());
  EXPECT_EQ((Poly{0, 1, q(3, 2)}).to_string(), "x + 3/2*x^2");
}

TEST(Poly, Classify) {
  auto c = classify(Poly::monomial(1, 2));
  EXPECT_TRUE(c.in_fz);
  EXPECT_TRUE(c.in_fznl);
  EXPECT_FALSE(c.is_linear);
  c = classify(Poly{0, 2});
  EXPECT_TRUE(c.in_fz);
  EXPECT_FALSE(c.in_fznl);
  EXPECT_TRUE(c.is_linear);
  c = classify(Poly{5, 0, 1});
  EXPECT_FALSE(c.in_fz);
  EXPECT_FALSE(c.in_fznl);
  EXPECT_EQ(c.tightest(), FunctionClass::General);
  EXPECT_THROW(classify(Poly{}), InvalidInput);
}

TEST(Poly, ShiftArgument) {
  EXPECT_EQ(shift_argument(Poly::monomial(1, 2), 1), (Poly{1, 2, 1}));
  Poly p{3, 0, -2, 1};
  EXPECT_EQ(shift_argument(p, 0), p);
  // gauge pair building block: x^3 evaluated at x - gamma
  Poly s = shift_argument(Poly::monomial(1, 3), -1);
  EXPECT_EQ(s, (Poly{-1, 3, -3, 1}));
}

TEST(Poly, RecoverShift) {
  EXPECT_EQ(recover_shift(Poly::monomial(1, 2), Poly{1, 2, 1}), 1);
  Poly p{0, 1, 0, 1};
  EXPECT_EQ(recover_shift(p, p), 0);
  EXPECT_THROW(recover_shift(Poly{0, 2}, Poly{1, 2}), DegreeTooLow);
  EXPECT_THROW(recover_shift(Poly::monomial(1, 2), Poly{0, 2, 5}), NotAShift);
  auto r = recover_shift_modulo_constant(Poly::monomial(1, 2), Poly{7, 4, 1});
  EXPECT_EQ(r.shift, 2);
  EXPECT_EQ(r.offset, 3);
}

TEST(Poly, Interpolate) {
  EXPECT_EQ(interpolate({{0, 0}, {1, 1}, {-1, 1}}, 2), Poly::monomial(1, 2));
  EXPECT_EQ(interpolate({{0, 0}, {1, 2}}, 1), (Poly{0, 2}));
  Poly p{0, 1, 0, 1};
  std::vector<std::pair<Rational, Rational>> pts;
  for (int x : {-2, -1, 0, 1}) pts.emplace_back(x, naive_eval(p, x));
  EXPECT_EQ(interpolate(pts, 3), p);
  EXPECT_THROW(interpolate({{0, 0}, {0, 1}}, 1), DuplicateAbscissa);
  EXPECT_THROW(interpolate({{0, 0}, {1, 1}, {2, 5}}, 1), InconsistentSamples);
  EXPECT_THROW(interpolate({{0, 0}}, 1), Error);
}

TEST(Poly, SampleAbscissae) {
  auto xs = sample_abscissae(5);
  EXPECT_EQ(xs, (std::vector<Rational>{0, 1, -1, 2, -2}));
}

TEST(Poly, Periodicity) {
  EXPECT_TRUE(periodicity_impossible(Poly::monomial(1, 2), 1));
  EXPECT_FALSE(periodicity_impossible(Poly{5}, 1));
  EXPECT_THROW(periodicity_impossible(Poly::monomial(1, 2), 0), InvalidInput);
}

TEST(Poly, ParseClass) {
  EXPECT_EQ(parse_function_class("fznl"), FunctionClass::FZNL);
  EXPECT_EQ(parse_function_class("FZ"), FunctionClass::FZ);
  EXPECT_FALSE(parse_function_class("linear").has_value());
}

TEST(PolyProperty, ShiftsAndEvaluation) {
  std::mt19937_64 rng(5);
  PolySpec spec{0, 5, 4, false, false};
  for (int t = 0; t < 300; ++t) {
    Poly p = random_poly(rng, spec);
    Rational a = random_rational(rng, 4, 3), b = random_rational(rng, 4, 3), x = random_rational(rng, 5, 4);
    EXPECT_EQ(eval(p, x), naive_eval(p, x));
    EXPECT_EQ(shift_argument(shift_argument(p, a), b), shift_argument(p, a + b));
    // shifted polynomial agrees pointwise with p(x + a)
    EXPECT_EQ(eval(shift_argument(p, a), x), naive_eval(p, x + a));
    if (p.degree() && *p.degree() >= 2) EXPECT_EQ(recover_shift(p, shift_argument(p, a)), a);
    if (p.degree() && *p.degree() >= 1 && a != 0) EXPECT_TRUE(periodicity_impossible(p, a));
    // interpolation through deg+1 points reproduces p
    const unsigned bound = p.degree().value_or(0);
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& s : sample_abscissae(bound + 2)) pts.emplace_back(s, naive_eval(p, s));
    EXPECT_EQ(interpolate(pts, bound), p);
  }
}
