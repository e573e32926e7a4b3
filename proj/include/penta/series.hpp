#pragma once

#include "penta/bounds.hpp"
#include "penta/exec.hpp"
#include "penta/integer.hpp"
#include "penta/upoly.hpp"

#include <vector>

namespace penta {

// Power series in x known up to x^order. Coefficients past the order are unknown, not zero.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order = 0);
  explicit TruncatedSeries(std::vector<Rational> coeffs);
  static TruncatedSeries one(std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  // Throws TruncationError past the order.
  const Rational& operator[](std::size_t k) const;
  Rational& operator[](std::size_t k);
  const std::vector<Rational>& coefficients() const { return c_; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

// (1 - x)^{-1} F - x^i - x^{i+1}. Requires F.order() >= i + 1.
TruncatedSeries delta(const TruncatedSeries& f, unsigned i);

// m literal applications of delta; meant for small m.
TruncatedSeries iterate_delta(const TruncatedSeries& f, unsigned i, const Integer& m);

// The same result as iterate_delta in one pass:
// (1 - x)^{-m} F + ((1 - x)^{-m} - 1)(x^{i+1} - x^{i-1}).
TruncatedSeries advance(const TruncatedSeries& f, unsigned i, const Integer& m,
                        Exec exec = Exec::parallel);

struct SeriesLevel {
  unsigned i = 0;
  TruncatedSeries f;
  std::vector<Integer> row;  // row[j] = [x^{i+j}] F_i while i + j <= order
};

// F_0 = 1 and F_{i+1} = advance(F_i, i, [x^i] F_i), up to i_max.
std::vector<SeriesLevel> generate(unsigned i_max, std::size_t order, Exec exec = Exec::parallel);

// The m-table read off the series, truncated at order i_max + j_max + 2.
MTable series_table(unsigned i_max, unsigned j_max, Exec exec = Exec::parallel);

// F_i = x^i (-1 + sum_k a_k (1 - x)^{-k}), k = 1 .. m_0 + ... + m_{i-1}.
struct BasisDecomposition {
  unsigned i = 0;
  std::vector<Integer> a;  // a[k - 1] = a_k
  Integer constant_term = -1;

  Integer sum() const;
  // Re-expansion of the right-hand side up to x^order.
  TruncatedSeries expand(std::size_t order) const;
};

// Requires i >= 3. Throws VerificationFailure on a negative coefficient and ResourceError when
// the index set would exceed max_terms.
BasisDecomposition basis_decomposition(unsigned i, std::size_t max_terms = 1'000'000);

// f_i(t) = sum_k a_k C(t + k - 1, k - 1), so f_i(j) = m_{i,j} for j >= 1 and f_i(0) = m_i + 1.
class InterpolatingPolynomial {
 public:
  explicit InterpolatingPolynomial(BasisDecomposition decomposition);

  unsigned level() const { return d_.i; }
  std::size_t degree_bound() const { return d_.a.empty() ? 0 : d_.a.size() - 1; }
  Integer operator()(const Integer& t) const;
  // sum_k a_k C(t + k - 1, k), the variant with the lower index shifted by one.
  Integer shifted_index_value(const Integer& t) const;
  // Monomial coefficients. Throws ResourceError past max_degree.
  RatPoly to_monomial(std::size_t max_degree = 400) const;

 private:
  BasisDecomposition d_;
};

InterpolatingPolynomial interpolating_polynomial(unsigned i);

}  // namespace penta
