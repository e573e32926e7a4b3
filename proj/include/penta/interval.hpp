#pragma once

#include "penta/integer.hpp"

#include <mpfr.h>

#include <functional>
#include <string>

namespace penta {

inline constexpr long kDefaultPrecision = 256;
inline constexpr long kDefaultPrecisionCap = 4096;

// Closed interval [lo, hi] with dyadic endpoints. Every operation rounds outward, so the
// result encloses the exact real value of the operation applied to any points of the inputs.
class Interval {
 public:
  explicit Interval(long precision = kDefaultPrecision);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval exact(const Rational& q, long precision = kDefaultPrecision);
  static Interval exact(const Integer& z, long precision = kDefaultPrecision);
  static Interval hull(const Rational& lo, const Rational& hi, long precision = kDefaultPrecision);

  long precision() const { return precision_; }
  Rational lower() const;
  Rational upper() const;
  Rational width() const { return upper() - lower(); }
  bool contains(const Rational& q) const;
  bool subset_of(const Interval& other) const;
  // Decimal rendering of both endpoints (rounded outward) to `digits` significant digits.
  std::string to_string(int digits = 12) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);

  friend Interval sqrt(const Interval& x);
  friend Interval log(const Interval& x);
  friend Interval exp(const Interval& x);
  friend Interval pow(const Interval& x, const Rational& p);

  friend bool strictly_below(const Interval& a, const Interval& b);
  friend bool below(const Interval& a, const Interval& b);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  long precision_;
};

Interval sqrt(const Interval& x);
Interval log(const Interval& x);
Interval exp(const Interval& x);
Interval pow(const Interval& x, const Rational& p);

// a.hi < b.lo
bool strictly_below(const Interval& a, const Interval& b);
// a.hi <= b.lo
bool below(const Interval& a, const Interval& b);

enum class Verdict { verified, refuted, inconclusive };

std::string to_string(Verdict v);

// Three-valued comparisons: refuted means the negation is certain.
Verdict less(const Interval& a, const Interval& b);
Verdict less_equal(const Interval& a, const Interval& b);

struct Certificate {
  Verdict verdict = Verdict::inconclusive;
  long precision = 0;
};

// Runs `at_precision` at `start`, doubling while inconclusive, up to `cap` bits.
Certificate certify(const std::function<Verdict(long)>& at_precision,
                    long start = kDefaultPrecision, long cap = kDefaultPrecisionCap);

}  // namespace penta
