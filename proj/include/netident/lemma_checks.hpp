#ifndef NETIDENT_LEMMA_CHECKS_HPP
#define NETIDENT_LEMMA_CHECKS_HPP

#include "netident/mpoly.hpp"
#include "netident/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace netident {

// Brute-force property suites over random polynomials.

struct CheckTally {
  std::string name;
  std::size_t instances = 0;
  std::size_t passed = 0;
  // Instances where the hypothesis of the implication actually held
  // (meaningful for the implication-style checks only).
  std::size_t antecedent_held = 0;

  bool ok() const { return passed == instances; }
};

// Non-constant p and nonzero period never give p(. + period) == p.
CheckTally check_periodicity(std::uint64_t seed, std::size_t instances);

// f(x + g) == f(x + g~) as canonical polynomials forces g == g~ for
// non-constant f in F_Z, and recover_shift gives back the shift.
CheckTally check_shift_uniqueness(std::uint64_t seed, std::size_t instances);

// Sum decomposition: sum_i f_i(x_i + g_i(y)) == sum_i f_i(x_i + g~_i(y))
// forces g_i == g~_i when every f_i is nonlinear. n <= 3 summands,
// m <= 2 upstream variables, degrees <= 3.
CheckTally check_sum_decomposition(std::uint64_t seed, std::size_t instances);

// The sum-decomposition expression sum_i f_i(x_i + g_i) as an MPoly, with
// x_i = (i, 1) and the upstream variables y_l = (100 + l, 1).
MPoly sum_of_shifted(const std::vector<Poly>& f, const std::vector<MPoly>& g);

struct LinearSumCounterexample {
  std::vector<Poly> f;
  std::vector<MPoly> g;
  std::vector<MPoly> g_tilde;
};

// Linear f_i admit g != g~ with equal sums; returned instance is checked.
LinearSumCounterexample linear_sum_counterexample();

} // namespace netident

#endif
