#include "penta/upoly.hpp"

#include "penta/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace penta {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::linear(const Rational& a) { return RatPoly({a, Rational(1)}); }

RatPoly RatPoly::binomial(const Integer& a, unsigned n) {
  RatPoly out = constant(1);
  Integer fact = 1;
  for (unsigned i = 0; i < n; ++i) {
    out = out * linear(Rational(a - i));
    fact *= i + 1;
  }
  return out * Rational(Integer(1), fact);
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::shifted(const Integer& a) const {
  // Horner in the variable (t + a).
  std::vector<Rational> out;
  const Rational ra(a);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    out.push_back(0);
    for (std::size_t k = out.size() - 1; k > 0; --k) out[k] = out[k - 1] + ra * out[k];
    out[0] = ra * out[0] + *it;
  }
  return RatPoly(std::move(out));
}

RatPoly RatPoly::forward_difference() const { return shifted(1) - *this; }

std::vector<Rational> RatPoly::newton_coefficients(const Integer& a) const {
  if (c_.empty()) return {};
  std::vector<Rational> vals;
  for (std::size_t k = 0; k < c_.size(); ++k) vals.push_back((*this)(Integer(a + k)));
  std::vector<Rational> out;
  for (std::size_t n = 0; n < c_.size(); ++n) {
    out.push_back(vals[0]);
    for (std::size_t k = 0; k + 1 < vals.size(); ++k) vals[k] = vals[k + 1] - vals[k];
    vals.pop_back();
  }
  return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(out));
}

void RatPoly::divide(const RatPoly& num, const RatPoly& den, RatPoly& quot, RatPoly& rem) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r = num.c_;
  const int dd = den.degree();
  std::vector<Rational> q(num.degree() >= dd ? num.degree() - dd + 1 : 0);
  const Rational lead = den.leading();
  for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
    if (r[k] == 0) continue;
    Rational f = r[k] / lead;
    q[k - dd] = f;
    for (int i = 0; i <= dd; ++i) r[k - dd + i] -= f * den.c_[i];
  }
  quot = RatPoly(std::move(q));
  rem = RatPoly(std::move(r));
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly q, r;
    divide(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= Rational(1) / a.leading();
  return a;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + penta::to_string(c_[k]) + ")";
    if (k >= 1) out += "*" + var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

std::vector<Integer> primitive_integer(const RatPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (g > 1) {
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

int sign_of(const std::vector<Integer>& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return sgn(acc);
}

}  // namespace

SturmChain::SturmChain(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  RatPoly q, r;
  RatPoly g = RatPoly::gcd(p, p.derivative());
  RatPoly sqf;
  RatPoly::divide(p, g, sqf, r);
  RatPoly a = sqf;
  RatPoly b = sqf.derivative();
  chain_.push_back(primitive_integer(a));
  while (!b.is_zero()) {
    chain_.push_back(primitive_integer(b));
    RatPoly::divide(a, b, q, r);
    a = std::move(b);
    b = RatPoly() - r;
  }
}

int SturmChain::variations(const Integer& x) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sign_of(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmChain::roots_in(const Integer& a, const Integer& b) const {
  if (b <= a) return 0;
  return variations(a) - variations(b);
}

int SturmChain::sign_at(const Integer& x) const { return sign_of(chain_.front(), x); }

namespace {

void isolate(const SturmChain& chain, Integer a, const Integer& b, const Integer& lo, const Integer& hi,
             std::set<Integer>& candidates) {
  auto add_around = [&](const Integer& k) {
    for (int d = -1; d <= 2; ++d) {
      Integer c = k + d;
      if (c >= lo && c <= hi) candidates.insert(c);
    }
  };
  while (a <= b && chain.sign_at(a) == 0) {
    add_around(a);
    a += 1;
  }
  if (a > b) return;
  if (chain.roots_in(a, b) == 0) return;
  if (b - a <= 2) {
    for (Integer k = a; k <= b; k += 1) add_around(k);
    return;
  }
  Integer mid = a + (b - a) / 2;
  isolate(chain, a, mid, lo, hi, candidates);
  isolate(chain, mid, b, lo, hi, candidates);
}

}  // namespace

IntegerExtrema integer_extrema(const std::function<Rational(const Integer&)>& value,
                               const RatPoly& step_sign, const Integer& lo, const Integer& hi) {
  if (hi < lo) throw DomainError("integer_extrema on an empty range");
  std::set<Integer> candidates{lo, hi};
  if (lo < hi && !step_sign.is_zero() && step_sign.degree() >= 1) {
    auto newton = step_sign.newton_coefficients(lo);
    bool nonneg = std::all_of(newton.begin(), newton.end(), [](const Rational& c) { return c >= 0; });
    bool nonpos = std::all_of(newton.begin(), newton.end(), [](const Rational& c) { return c <= 0; });
    if (!nonneg && !nonpos) {
      SturmChain chain(step_sign);
      isolate(chain, lo, hi - 1, lo, hi, candidates);
    }
  }
  IntegerExtrema out;
  bool first = true;
  for (const auto& k : candidates) {
    Rational v = value(k);
    ++out.evaluations;
    if (first || v < out.min) {
      out.min = v;
      out.argmin = k;
    }
    if (first || v > out.max) {
      out.max = v;
      out.argmax = k;
    }
    first = false;
  }
  return out;
}

IntegerExtrema integer_extrema(const RatPoly& p, const Integer& lo, const Integer& hi) {
  return integer_extrema([&p](const Integer& k) { return p(k); }, p.forward_difference(), lo, hi);
}

}  // namespace penta
