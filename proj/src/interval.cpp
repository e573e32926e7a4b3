#include "penta/interval.hpp"

#include "penta/errors.hpp"

#include <algorithm>
#include <memory>
#include <utility>

namespace penta {

namespace {

Rational mpfr_to_rational(const mpfr_t x) {
  Integer mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  Rational q(mant);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

void check_precision(long p) {
  if (p < MPFR_PREC_MIN || p > 1L << 24) throw DomainError("interval precision out of range");
}

}  // namespace

Interval::Interval(long precision) : precision_(precision) {
  check_precision(precision);
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : precision_(other.precision_) {
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : precision_(other.precision_) {
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    precision_ = other.precision_;
    mpfr_set_prec(lo_, precision_);
    mpfr_set_prec(hi_, precision_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    std::swap(precision_, other.precision_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact(const Rational& q, long precision) {
  Interval out(precision);
  mpfr_set_q(out.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, q.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::exact(const Integer& z, long precision) {
  Interval out(precision);
  mpfr_set_z(out.lo_, z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(out.hi_, z.get_mpz_t(), MPFR_RNDU);
  return out;
}

Interval Interval::hull(const Rational& lo, const Rational& hi, long precision) {
  if (hi < lo) throw DomainError("interval hull with lo > hi");
  Interval out(precision);
  mpfr_set_q(out.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return out;
}

Rational Interval::lower() const { return mpfr_to_rational(lo_); }
Rational Interval::upper() const { return mpfr_to_rational(hi_); }

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::subset_of(const Interval& other) const {
  return mpfr_greaterequal_p(lo_, other.lo_) && mpfr_lessequal_p(hi_, other.hi_);
}

std::string Interval::to_string(int digits) const {
  auto render = [digits](const mpfr_t x, mpfr_rnd_t rnd) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, rnd == MPFR_RNDD ? "%.*RDg" : "%.*RUg", digits, x);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  };
  return "[" + render(lo_, MPFR_RNDD) + ", " + render(hi_, MPFR_RNDU) + "]";
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out(std::max(a.precision_, b.precision_));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out(std::max(a.precision_, b.precision_));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a) {
  Interval out(a.precision_);
  mpfr_neg(out.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, a.lo_, MPFR_RNDU);
  return out;
}

namespace {

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Min/max over the four endpoint combinations, each rounded in the outward direction.
void corner_hull(mpfr_t lo, mpfr_t hi, long prec, BinaryOp op, const mpfr_t alo, const mpfr_t ahi,
                 const mpfr_t blo, const mpfr_t bhi) {
  mpfr_t t;
  mpfr_init2(t, prec);
  const mpfr_srcptr as[2] = {alo, ahi};
  const mpfr_srcptr bs[2] = {blo, bhi};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      op(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, lo)) mpfr_set(lo, t, MPFR_RNDD);
      op(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, hi)) mpfr_set(hi, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
}

}  // namespace

Interval operator*(const Interval& a, const Interval& b) {
  Interval out(std::max(a.precision_, b.precision_));
  corner_hull(out.lo_, out.hi_, out.precision_, mpfr_mul, a.lo_, a.hi_, b.lo_, b.hi_);
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
    throw DomainError("interval division by an interval containing zero");
  }
  Interval out(std::max(a.precision_, b.precision_));
  corner_hull(out.lo_, out.hi_, out.precision_, mpfr_div, a.lo_, a.hi_, b.lo_, b.hi_);
  return out;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo_) < 0) throw DomainError("interval_sqrt of an interval with negative part");
  Interval out(x.precision_);
  mpfr_sqrt(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw DomainError("interval_log of a nonpositive interval");
  Interval out(x.precision_);
  mpfr_log(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval exp(const Interval& x) {
  Interval out(x.precision_);
  mpfr_exp(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval pow(const Interval& x, const Rational& p) {
  const Integer& num = p.get_num();
  const Integer& den = p.get_den();
  if (den == 1 && num >= 0) {
    // Square-and-multiply on intervals handles bases of any sign.
    Interval result = Interval::exact(Integer(1), x.precision_);
    Interval base = x;
    Integer e = num;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }
  if (mpfr_sgn(x.lo_) <= 0) throw DomainError("interval_pow with non-integer or negative exponent needs x > 0");
  if (num < 0) {
    Interval positive = pow(x, -p);
    return Interval::exact(Integer(1), x.precision_) / positive;
  }
  if (!den.fits_ulong_p()) throw DomainError("interval_pow exponent denominator too large");
  unsigned long root = den.get_ui();
  Interval out(x.precision_);
  mpfr_rootn_ui(out.lo_, x.lo_, root, MPFR_RNDD);
  mpfr_rootn_ui(out.hi_, x.hi_, root, MPFR_RNDU);
  mpfr_pow_z(out.lo_, out.lo_, num.get_mpz_t(), MPFR_RNDD);
  mpfr_pow_z(out.hi_, out.hi_, num.get_mpz_t(), MPFR_RNDU);
  return out;
}

bool strictly_below(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi_, b.lo_); }
bool below(const Interval& a, const Interval& b) { return mpfr_lessequal_p(a.hi_, b.lo_); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "VERIFIED";
    case Verdict::refuted: return "FAILED";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Verdict less(const Interval& a, const Interval& b) {
  if (strictly_below(a, b)) return Verdict::verified;
  if (below(b, a)) return Verdict::refuted;
  return Verdict::inconclusive;
}

Verdict less_equal(const Interval& a, const Interval& b) {
  if (below(a, b)) return Verdict::verified;
  if (strictly_below(b, a)) return Verdict::refuted;
  return Verdict::inconclusive;
}

Certificate certify(const std::function<Verdict(long)>& at_precision, long start, long cap) {
  Certificate cert;
  for (long prec = start; prec <= cap; prec *= 2) {
    cert.precision = prec;
    cert.verdict = at_precision(prec);
    if (cert.verdict != Verdict::inconclusive) break;
  }
  return cert;
}

}  // namespace penta
