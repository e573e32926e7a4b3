#pragma once

#include "penta/integer.hpp"

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace penta {

// Dense univariate polynomial over Q; coefficient k multiplies t^k. Trailing zeros are trimmed,
// so the zero polynomial has no coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);
  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, std::size_t k);
  // t + a
  static RatPoly linear(const Rational& a);
  // C(t + a, n) = (t + a)(t + a - 1) ... (t + a - n + 1) / n!
  static RatPoly binomial(const Integer& a, unsigned n);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& t) const;
  Rational operator()(const Integer& t) const { return (*this)(Rational(t)); }

  RatPoly derivative() const;
  // p(t + a)
  RatPoly shifted(const Integer& a) const;
  // p(t + 1) - p(t)
  RatPoly forward_difference() const;
  // Coefficients in the basis C(t - a, n), n = 0..deg: the forward differences of p at a.
  std::vector<Rational> newton_coefficients(const Integer& a) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rational& s);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  // Euclidean division; divisor must be nonzero.
  static void divide(const RatPoly& num, const RatPoly& den, RatPoly& quot, RatPoly& rem);
  static RatPoly gcd(RatPoly a, RatPoly b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Sturm chain of the square-free part of p, stored as primitive integer polynomials.
class SturmChain {
 public:
  explicit SturmChain(const RatPoly& p);
  // Number of sign variations of the chain at x (zeros skipped).
  int variations(const Integer& x) const;
  // Distinct real roots in (a, b]; requires a not a root.
  int roots_in(const Integer& a, const Integer& b) const;
  int sign_at(const Integer& x) const;

 private:
  std::vector<std::vector<Integer>> chain_;
};

// Exact minimum and maximum of an integer-indexed sequence over [lo, hi]. `value(k)` gives
// the sequence; `step_sign` is a polynomial with sign(value(k+1) - value(k)) = sign(step_sign(k))
// for lo <= k < hi. Extremes can only sit at the ends or next to a real root of step_sign,
// which are isolated with a Sturm chain, so only O(deg * log(hi - lo)) values are evaluated.
struct IntegerExtrema {
  Rational min;
  Integer argmin;
  Rational max;
  Integer argmax;
  std::size_t evaluations = 0;
};

IntegerExtrema integer_extrema(const std::function<Rational(const Integer&)>& value,
                               const RatPoly& step_sign, const Integer& lo, const Integer& hi);

// Extrema of the polynomial p itself over the integers in [lo, hi].
IntegerExtrema integer_extrema(const RatPoly& p, const Integer& lo, const Integer& hi);

}  // namespace penta
