#include "netident/lemma_checks.hpp"

#include "netident/error.hpp"
#include "netident/generators.hpp"

#include <random>

namespace netident {

namespace {

DelayedInput x_var(std::size_t i) { return {static_cast<NodeId>(i), 1}; }
DelayedInput y_var(std::size_t l) { return {static_cast<NodeId>(100 + l), 1}; }

// Random polynomial in y_0..y_{m-1} with no constant term, total degree <= 3
// and small integer coefficients. Never zero.
MPoly random_upstream(std::mt19937_64& rng, std::size_t m) {
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<unsigned> power(0, 3);
  std::uniform_int_distribution<int> terms(1, 3);
  MPoly g;
  while (g.is_zero()) {
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
      MPoly mono = MPoly::constant(coef(rng));
      unsigned total = 0;
      for (std::size_t l = 0; l < m; ++l) {
        unsigned e = power(rng);
        if (total + e > 3) e = 3 - total;
        total += e;
        for (unsigned k = 0; k < e; ++k) mono = mono * MPoly::variable(y_var(l));
      }
      if (total == 0) continue;
      g += mono;
    }
  }
  return g;
}

// A variant of g that differs from it by a small term.
MPoly perturb(std::mt19937_64& rng, const MPoly& g, std::size_t m) {
  MPoly delta;
  std::uniform_int_distribution<std::size_t> var(0, m - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<unsigned> power(1, 3);
  const unsigned e = power(rng);
  delta = MPoly::constant(sign(rng) ? 1 : -1);
  for (unsigned k = 0; k < e; ++k) delta = delta * MPoly::variable(y_var(var(rng)));
  MPoly out = g + delta;
  return out.is_zero() ? g + delta + delta : out;
}

} // namespace

MPoly sum_of_shifted(const std::vector<Poly>& f, const std::vector<MPoly>& g) {
  if (f.size() != g.size()) throw InvalidInput("need one upstream function per summand");
  MPoly sum;
  for (std::size_t i = 0; i < f.size(); ++i) sum += compose(f[i], MPoly::variable(x_var(i)) + g[i]);
  return sum;
}

CheckTally check_periodicity(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  CheckTally t{"periodicity", instances, 0, instances};
  PolySpec spec{1, 5, 3, false, false};
  for (std::size_t k = 0; k < instances; ++k) {
    Poly p = random_poly(rng, spec);
    Rational period = 0;
    while (period == 0) period = random_rational(rng, 5, 4);
    if (periodicity_impossible(p, period)) ++t.passed;
  }
  return t;
}

CheckTally check_shift_uniqueness(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  CheckTally t{"shift-uniqueness", instances, 0, 0};
  PolySpec spec{1, 4, 2, true, false};
  std::uniform_int_distribution<std::size_t> vars(1, 2);
  std::bernoulli_distribution same(0.5);
  std::uniform_int_distribution<int> value(-2, 2);
  for (std::size_t k = 0; k < instances; ++k) {
    const std::size_t m = vars(rng);
    Poly f = random_poly(rng, spec);
    MPoly g = random_upstream(rng, m);
    MPoly g_tilde = same(rng) ? g : perturb(rng, g, m);
    const MPoly x = MPoly::variable(x_var(0));
    bool equal = compose(f, x + g) == compose(f, x + g_tilde);
    bool ok = !equal || g == g_tilde;
    if (equal) ++t.antecedent_held;
    if (ok && *f.degree() >= 2) {
      // At a numeric point the slice in x is f(x + g(y)); the shift read
      // off it must be g(y).
      Assignment y;
      for (std::size_t l = 0; l < m; ++l) y[y_var(l)] = value(rng);
      Poly h = slice(compose(f, x + g), x_var(0), y);
      ok = recover_shift(f, h) == eval_response(g, y);
    }
    if (ok) ++t.passed;
  }
  return t;
}

CheckTally check_sum_decomposition(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  CheckTally t{"sum-decomposition", instances, 0, 0};
  PolySpec spec{2, 3, 2, true, true};
  std::uniform_int_distribution<std::size_t> summands(1, 3), vars(1, 2);
  std::uniform_int_distribution<int> variant(0, 3);
  for (std::size_t k = 0; k < instances; ++k) {
    const std::size_t n = summands(rng), m = vars(rng);
    std::vector<Poly> f;
    std::vector<MPoly> g;
    for (std::size_t i = 0; i < n; ++i) {
      f.push_back(random_poly(rng, spec));
      g.push_back(random_upstream(rng, m));
    }
    std::vector<MPoly> g_tilde = g;
    std::uniform_int_distribution<std::size_t> which(0, n - 1);
    switch (variant(rng)) {
    case 0: // unchanged
      break;
    case 1: {
      const std::size_t idx = which(rng);
      g_tilde[idx] = perturb(rng, g[idx], m);
      break;
    }
    case 2: // swap two upstream functions (and share f so the swap is tempting)
      if (n > 1) {
        std::size_t a = which(rng), b = (a + 1) % n;
        f[b] = f[a];
        std::swap(g_tilde[a], g_tilde[b]);
      } else {
        g_tilde[0] = perturb(rng, g[0], m);
      }
      break;
    default: // move a term from one summand to the next
      if (n > 1) {
        std::size_t a = which(rng), b = (a + 1) % n;
        MPoly moved = random_upstream(rng, m);
        g_tilde[a] = g_tilde[a] + moved;
        g_tilde[b] = g_tilde[b] - moved;
        if (g_tilde[b].is_zero()) g_tilde[b] = g[b];
      } else {
        g_tilde[0] = g[0] + g[0];
      }
      break;
    }
    bool equal = sum_of_shifted(f, g) == sum_of_shifted(f, g_tilde);
    if (equal) ++t.antecedent_held;
    if (!equal || g == g_tilde) ++t.passed;
  }
  return t;
}

LinearSumCounterexample linear_sum_counterexample() {
  const Poly identity{Rational(0), Rational(1)};
  const MPoly y = MPoly::variable(y_var(0));
  LinearSumCounterexample c{{identity, identity}, {y, y * Rational(2)}, {y * Rational(2), y}};
  if (sum_of_shifted(c.f, c.g) != sum_of_shifted(c.f, c.g_tilde) || c.g == c.g_tilde)
    throw Error("linear counterexample failed its own check");
  return c;
}

} // namespace netident
