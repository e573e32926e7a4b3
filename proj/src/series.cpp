#include "penta/series.hpp"

#include "penta/errors.hpp"

#include <algorithm>
#include <utility>

namespace penta {

TruncatedSeries::TruncatedSeries(std::size_t order) : c_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw DomainError("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s.c_[0] = 1;
  return s;
}

const Rational& TruncatedSeries::operator[](std::size_t k) const {
  if (k >= c_.size()) throw TruncationError("coefficient x^" + std::to_string(k) + " is past the truncation order");
  return c_[k];
}

Rational& TruncatedSeries::operator[](std::size_t k) {
  if (k >= c_.size()) throw TruncationError("coefficient x^" + std::to_string(k) + " is past the truncation order");
  return c_[k];
}

namespace {

void require_order(const TruncatedSeries& f, unsigned i) {
  if (f.order() < static_cast<std::size_t>(i) + 1) {
    throw TruncationError("series of order " + std::to_string(f.order()) + " is too short for level " +
                          std::to_string(i));
  }
}

}  // namespace

TruncatedSeries delta(const TruncatedSeries& f, unsigned i) {
  require_order(f, i);
  TruncatedSeries out(f.order());
  Rational run = 0;
  for (std::size_t k = 0; k <= f.order(); ++k) {
    run += f[k];
    out[k] = run;
  }
  out[i] -= 1;
  out[i + 1] -= 1;
  return out;
}

TruncatedSeries iterate_delta(const TruncatedSeries& f, unsigned i, const Integer& m) {
  if (m < 0) throw DomainError("negative number of applications");
  TruncatedSeries out = f;
  for (Integer k = 0; k < m; k += 1) out = delta(out, i);
  return out;
}

TruncatedSeries advance(const TruncatedSeries& f, unsigned i, const Integer& m, Exec exec) {
  require_order(f, i);
  if (m < 0) throw DomainError("negative number of applications");
  const std::size_t order = f.order();
  // rising[n] = [x^n] (1 - x)^{-m};  tail[n] = [x^n] ((1 - x)^{-m} - 1) / x
  std::vector<Integer> rising(order + 1), tail(order + 1);
  rising[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    rising[n] = rising[n - 1] * (m + (n - 1));
    mpz_divexact_ui(rising[n].get_mpz_t(), rising[n].get_mpz_t(), n);
  }
  for (std::size_t n = 0; n <= order; ++n) tail[n] = binomial(m + n, n + 1);
  TruncatedSeries out(order);
  const long last = static_cast<long>(order);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long nn = 0; nn <= last; ++nn) {
    const std::size_t n = static_cast<std::size_t>(nn);
    Rational acc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      if (f[k] != 0) acc += Rational(rising[n - k]) * f[k];
    }
    if (n >= i + 2) acc += Rational(tail[n - i - 2]);
    if (n >= i) acc -= Rational(tail[n - i]);
    out[n] = std::move(acc);
  }
  return out;
}

std::vector<SeriesLevel> generate(unsigned i_max, std::size_t order, Exec exec) {
  if (order < static_cast<std::size_t>(i_max) + 1) {
    throw TruncationError("order " + std::to_string(order) + " is too small for i_max = " + std::to_string(i_max));
  }
  std::vector<SeriesLevel> out;
  TruncatedSeries f = TruncatedSeries::one(order);
  for (unsigned i = 0; i <= i_max; ++i) {
    SeriesLevel level;
    level.i = i;
    for (std::size_t k = i; k <= order; ++k) {
      level.row.push_back(to_integer(f[k], "series coefficient"));
    }
    level.f = f;
    if (i < i_max) f = advance(f, i, level.row[0], exec);
    out.push_back(std::move(level));
  }
  return out;
}

MTable series_table(unsigned i_max, unsigned j_max, Exec exec) {
  MTable table;
  table.source = MTable::Source::series;
  for (auto& level : generate(i_max, static_cast<std::size_t>(i_max) + j_max + 2, exec)) {
    level.row.resize(j_max + 1);
    table.rows.push_back(std::move(level.row));
  }
  return table;
}

Integer BasisDecomposition::sum() const {
  Integer s = 0;
  for (const auto& x : a) s += x;
  return s;
}

TruncatedSeries BasisDecomposition::expand(std::size_t order) const {
  TruncatedSeries out(order);
  for (std::size_t n = i; n <= order; ++n) {
    const Integer t = static_cast<unsigned long>(n - i);
    Rational acc = n == i ? Rational(constant_term) : Rational(0);
    Integer b = 1;  // C(t + k - 1, k - 1)
    for (std::size_t k = 1; k <= a.size(); ++k) {
      if (k > 1) {
        b *= t + (k - 1);
        mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k - 1);
      }
      acc += Rational(a[k - 1] * b);
    }
    out[n] = acc;
  }
  return out;
}

BasisDecomposition basis_decomposition(unsigned i, std::size_t max_terms) {
  if (i < 3) throw DomainError("the basis decomposition needs i >= 3");
  const std::vector<Integer> m = m_sequence(i - 1, Exec::serial);
  Integer terms = 0;
  for (const auto& x : m) terms += x;
  if (terms > Integer(static_cast<unsigned long>(max_terms))) {
    throw ResourceError("decomposition of level " + std::to_string(i) + " has " + terms.get_str() + " terms");
  }
  // F_l = x^l (-1 + P_l(w)) with w = (1 - x)^{-1}; P_0 = 2.
  std::vector<Integer> p{Integer(2)};
  for (unsigned l = 0; l < i; ++l) {
    const std::size_t ml = m[l].get_ui();
    // t = w^{m+1} (P - 1) - (2w - 1)(1 + w + ... + w^{m-1})
    std::vector<Integer> t(p.size() + ml + 1, Integer(0));
    for (std::size_t k = 0; k < p.size(); ++k) t[k + ml + 1] = p[k];
    t[ml + 1] -= 1;
    if (ml >= 1) {
      t[0] += 1;
      for (std::size_t k = 1; k < ml; ++k) t[k] -= 1;
      t[ml] -= 2;
    }
    // P_{l+1} = 1 + t / (w - 1)
    std::vector<Integer> q(t.size() - 1);
    Integer carry = 0;
    for (std::size_t k = t.size() - 1; k >= 1; --k) {
      carry += t[k];
      q[k - 1] = carry;
    }
    if (carry + t[0] != 0) throw VerificationFailure("inexact division in the basis recursion");
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    q[0] += 1;
    p = std::move(q);
  }
  if (p[0] != 0) {
    throw VerificationFailure("level " + std::to_string(i) + " has constant basis term " + p[0].get_str());
  }
  BasisDecomposition out;
  out.i = i;
  out.a.assign(p.begin() + 1, p.end());
  out.a.resize(terms.get_ui(), Integer(0));
  for (std::size_t k = 0; k < out.a.size(); ++k) {
    if (out.a[k] < 0) {
      throw VerificationFailure("negative basis coefficient a_" + std::to_string(k + 1) + " = " +
                                out.a[k].get_str() + " at level " + std::to_string(i));
    }
  }
  return out;
}

InterpolatingPolynomial::InterpolatingPolynomial(BasisDecomposition decomposition) : d_(std::move(decomposition)) {}

Integer InterpolatingPolynomial::operator()(const Integer& t) const {
  Integer acc = 0;
  Integer b = 1;
  for (std::size_t k = 1; k <= d_.a.size(); ++k) {
    if (k > 1) {
      b *= t + (k - 1);
      mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k - 1);
    }
    acc += d_.a[k - 1] * b;
  }
  return acc;
}

Integer InterpolatingPolynomial::shifted_index_value(const Integer& t) const {
  Integer acc = 0;
  Integer b = t;  // C(t + k - 1, k)
  for (std::size_t k = 1; k <= d_.a.size(); ++k) {
    if (k > 1) {
      b *= t + (k - 1);
      mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k);
    }
    acc += d_.a[k - 1] * b;
  }
  return acc;
}

RatPoly InterpolatingPolynomial::to_monomial(std::size_t max_degree) const {
  if (degree_bound() > max_degree) {
    throw ResourceError("interpolating polynomial of degree " + std::to_string(degree_bound()) + " exceeds " +
                        std::to_string(max_degree));
  }
  RatPoly out;
  for (std::size_t k = 1; k <= d_.a.size(); ++k) {
    if (d_.a[k - 1] == 0) continue;
    out += RatPoly::binomial(Integer(static_cast<unsigned long>(k - 1)), static_cast<unsigned>(k - 1)) *
           Rational(d_.a[k - 1]);
  }
  return out;
}

InterpolatingPolynomial interpolating_polynomial(unsigned i) { return InterpolatingPolynomial(basis_decomposition(i)); }

}  // namespace penta
