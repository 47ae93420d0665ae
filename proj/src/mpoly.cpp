#include "netident/mpoly.hpp"

#include "netident/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace netident {

Monomial::Monomial(DelayedInput v, unsigned exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

unsigned Monomial::exponent_of(DelayedInput v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const DelayedInput& key) { return f.first < key; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::delayed(int s) const {
  // Adding the same s to every delay keeps the (node, delay) order intact.
  Monomial out = *this;
  for (auto& [v, e] : out.factors_) v.delay += s;
  return out;
}

MPoly MPoly::constant(const Rational& c) {
  MPoly p;
  p.add_term(Monomial{}, c);
  return p;
}

MPoly MPoly::from_terms(Terms terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  MPoly p;
  p.terms_ = std::move(terms);
  return p;
}

MPoly MPoly::variable(DelayedInput v) {
  MPoly p;
  p.add_term(Monomial(v), Rational(1));
  return p;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<DelayedInput> MPoly::variables() const {
  std::set<DelayedInput> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

MPoly& MPoly::operator+=(const MPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

std::string MPoly::to_string(const std::function<std::string(NodeId)>& label) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (m.is_constant()) {
      os << format_rational(mag);
      continue;
    }
    if (mag != 1) os << format_rational(mag) << "*";
    bool first_factor = true;
    for (const auto& [v, e] : m.factors()) {
      if (!first_factor) os << "*";
      first_factor = false;
      os << "u" << (label ? label(v.node) : std::to_string(v.node)) << "[k-" << v.delay << "]";
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

MPoly compose(const Poly& f, const MPoly& arg, std::size_t term_cap) {
  const auto& a = f.coeffs();
  MPoly acc;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = acc * arg;
    acc += MPoly::constant(*it);
    if (acc.term_count() > term_cap)
      throw SizeLimitExceeded("expanded response exceeds " + std::to_string(term_cap) + " terms");
  }
  return acc;
}

MPoly delay_shift(const MPoly& F, int s) {
  if (s == 0) return F;
  // Adding s to every delay preserves the monomial order.
  MPoly::Terms shifted;
  for (const auto& [m, c] : F.terms()) shifted.emplace_hint(shifted.end(), m.delayed(s), c);
  return MPoly::from_terms(std::move(shifted));
}

Rational eval_response(const MPoly& F, const Assignment& assignment) {
  Rational total = 0;
  for (const auto& [m, c] : F.terms()) {
    Rational term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end() || it->second == 0) {
        term = 0;
        break;
      }
      term *= pow(it->second, e);
    }
    total += term;
  }
  return total;
}

Poly slice(const MPoly& F, DelayedInput v, const Assignment& others) {
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : F.terms()) {
    Rational term = c;
    unsigned power = 0;
    for (const auto& [w, e] : m.factors()) {
      if (w == v) {
        power = e;
        continue;
      }
      auto it = others.find(w);
      if (it == others.end() || it->second == 0) {
        term = 0;
        break;
      }
      term *= pow(it->second, e);
    }
    if (term == 0) continue;
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += term;
  }
  return Poly(std::move(coeffs));
}

Poly restrict_to_single_input(const MPoly& F, NodeId j, int delay) { return slice(F, {j, delay}, {}); }

} // namespace netident
