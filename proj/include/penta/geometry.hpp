#pragma once

#include "penta/integer.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace penta::geometry {

class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(long v) const { return v; }
  Element parse(const std::string& text) const;
  std::string format(const Element& a) const;

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const { return sgn(a) == 0; }

  // Small integers in [-9, 9].
  Element random(std::mt19937_64& rng) const;
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const { return true; }
};

class PrimeField {
 public:
  using Element = std::uint64_t;

  // p must be a prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(long v) const;
  // Integers and fractions with a unit denominator, reduced mod p.
  Element parse(const std::string& text) const;
  std::string format(const Element& a) const { return std::to_string(a); }

  Element add(Element a, Element b) const { return (a + b) % p_; }
  Element sub(Element a, Element b) const { return (a + p_ - b) % p_; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return a * b % p_; }
  Element inv(Element a) const;
  bool is_zero(Element a) const { return a == 0; }

  Element random(std::mt19937_64& rng) const;
  std::string name() const { return "F_" + std::to_string(p_); }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

template <typename Field>
using Vector = std::vector<typename Field::Element>;

template <typename Field>
using Matrix = std::vector<Vector<Field>>;

using Exponents = std::vector<unsigned>;

// Dense size limit C(n + d, d) for any polynomial built here.
constexpr std::uint64_t kMaxMonomials = 1'000'000;

template <typename Field>
class HomogeneousPolynomial {
 public:
  using Element = typename Field::Element;

  HomogeneousPolynomial(Field field, unsigned num_variables, unsigned degree);

  static HomogeneousPolynomial random(Field field, unsigned num_variables, unsigned degree, std::mt19937_64& rng);
  // The linear form sum c_i x_i.
  static HomogeneousPolynomial linear_form(Field field, const Vector<Field>& c);

  // Adds c x^e to the polynomial; e must have num_variables entries summing to degree.
  void add_term(const Exponents& e, const Element& c);

  const Field& field() const { return field_; }
  unsigned num_variables() const { return num_variables_; }
  unsigned degree() const { return degree_; }
  const std::map<Exponents, Element>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Element operator()(const Vector<Field>& x) const;
  HomogeneousPolynomial operator*(const HomogeneousPolynomial& other) const;
  HomogeneousPolynomial operator+(const HomogeneousPolynomial& other) const;
  bool operator==(const HomogeneousPolynomial& other) const;

  // x -> f(M x).
  HomogeneousPolynomial substitute(const Matrix<Field>& m) const;
  // Coefficients c_0..c_d of f(a + t b) in t.
  Vector<Field> along_line(const Vector<Field>& a, const Vector<Field>& b) const;

  std::string to_string() const;

 private:
  Field field_;
  unsigned num_variables_;
  unsigned degree_;
  std::map<Exponents, Element> terms_;
};

template <typename Field>
class ProjectivePoint {
 public:
  using Element = typename Field::Element;

  // Throws PreconditionError for the zero vector.
  ProjectivePoint(Field field, Vector<Field> coordinates);

  const Vector<Field>& coordinates() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  // Scaled so the first nonzero coordinate is 1.
  Vector<Field> normalized() const;
  bool operator==(const ProjectivePoint& other) const;
  std::string to_string() const;

 private:
  Field field_;
  Vector<Field> coords_;
};

// f(C x') = sum_i f_i(x'_0, ..., x'_{n-1}) x'_n^{d-i}, where C sends (0:...:0:1) to z.
template <typename Field>
struct GradedExpansion {
  Field field;
  unsigned degree = 0;
  std::vector<HomogeneousPolynomial<Field>> components;  // f_1 .. f_d
  Matrix<Field> change;                                  // C, original = C * new

  unsigned num_variables() const { return static_cast<unsigned>(change.size()); }
  const HomogeneousPolynomial<Field>& component(unsigned i) const { return components.at(i - 1); }
  // sum f_i x_n^{d-i}, in the new coordinates.
  HomogeneousPolynomial<Field> reassemble() const;
  Vector<Field> to_original(const Vector<Field>& x) const;
};

template <typename Field>
GradedExpansion<Field> expand_at_point(const HomogeneousPolynomial<Field>& f, const ProjectivePoint<Field>& z);

// (f_1(y), ..., f_d(y)): the coefficients of f on the line through z in direction y.
template <typename Field>
Vector<Field> restrict_to_line(const GradedExpansion<Field>& exp, const Vector<Field>& y);

// Smallest i with f_i(y) != 0; nullopt when the line lies in the hypersurface.
template <typename Field>
std::optional<unsigned> tangency_order(const GradedExpansion<Field>& exp, const Vector<Field>& y);

// (f_1, ..., f_{k-1}); k = d - 1 gives the penultimate tangent equations.
template <typename Field>
std::vector<HomogeneousPolynomial<Field>> tangency_locus_equations(const GradedExpansion<Field>& exp, unsigned k);

// (y f_{d-1}(y) : -f_d(y)) in the new coordinates.
template <typename Field>
ProjectivePoint<Field> residual_point(const GradedExpansion<Field>& exp, const Vector<Field>& y);

// Order of vanishing at s = 0 of f(base + s direction), from values at s = 0..d and interpolation.
// nullopt when f vanishes on the whole line. Needs more than d field elements.
template <typename Field>
std::optional<unsigned> vanishing_order(const HomogeneousPolynomial<Field>& f, const Vector<Field>& base,
                                        const Vector<Field>& direction);

// Random points with f_1 = ... = f_{d-2} = 0: random lines inside {f_1 = 0}, restricted equations,
// common roots by gcd and scan. budget is the number of lines tried.
std::vector<ProjectivePoint<PrimeField>> sample_penta_points(const GradedExpansion<PrimeField>& exp,
                                                             std::size_t budget, std::mt19937_64& rng,
                                                             std::size_t max_points = 1,
                                                             std::size_t* lines_tried = nullptr);

// A point of V(f) found by scanning random lines; nullopt if none in budget.
std::optional<ProjectivePoint<PrimeField>> random_point_on(const HomogeneousPolynomial<PrimeField>& f,
                                                           std::size_t budget, std::mt19937_64& rng);

// Distinct roots in F_p of the polynomial with coefficients c (c_k multiplies t^k).
std::vector<std::uint64_t> roots_mod_p(const PrimeField& field, const Vector<PrimeField>& c);

extern template class HomogeneousPolynomial<RationalField>;
extern template class HomogeneousPolynomial<PrimeField>;
extern template class ProjectivePoint<RationalField>;
extern template class ProjectivePoint<PrimeField>;
extern template struct GradedExpansion<RationalField>;
extern template struct GradedExpansion<PrimeField>;

}  // namespace penta::geometry
