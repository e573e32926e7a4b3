#include "penta/geometry.hpp"

#include "penta/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace penta::geometry {

Rational RationalField::parse(const std::string& text) const { return parse_rational(text); }

std::string RationalField::format(const Rational& a) const { return penta::to_string(a); }

Rational RationalField::inv(const Rational& a) const {
  if (sgn(a) == 0) throw DomainError("division by zero in Q");
  return 1 / a;
}

Rational RationalField::random(std::mt19937_64& rng) const {
  return std::uniform_int_distribution<long>(-9, 9)(rng);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (1ULL << 31)) throw PreconditionError("field characteristic must be a prime below 2^31");
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) throw PreconditionError(std::to_string(p) + " is not prime");
  }
}

std::uint64_t PrimeField::from_integer(long v) const {
  const long p = static_cast<long>(p_);
  return static_cast<std::uint64_t>(((v % p) + p) % p);
}

std::uint64_t PrimeField::parse(const std::string& text) const {
  const Rational q = parse_rational(text);
  Integer num = q.get_num() % p_, den = q.get_den() % p_;
  if (num < 0) num += p_;
  if (den == 0) throw ParseError("denominator of '" + text + "' vanishes mod " + std::to_string(p_));
  return mul(num.get_ui(), inv(den.get_ui()));
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw DomainError("division by zero in " + name());
  std::uint64_t result = 1, base = a % p_, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::random(std::mt19937_64& rng) const {
  return std::uniform_int_distribution<std::uint64_t>(0, p_ - 1)(rng);
}

namespace {

void for_each_exponent(unsigned num_variables, unsigned degree, const std::function<void(const Exponents&)>& visit) {
  Exponents e(num_variables, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned remaining) {
    if (pos + 1 == num_variables) {
      e[pos] = remaining;
      visit(e);
      return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
      e[pos] = k;
      rec(pos + 1, remaining - k);
    }
    e[pos] = 0;
  };
  rec(0, degree);
}

template <typename Field>
Vector<Field> poly_mul(const Field& F, const Vector<Field>& a, const Vector<Field>& b) {
  Vector<Field> out(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  return out;
}

template <typename Field>
void trim(const Field& F, Vector<Field>& a) {
  while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

std::size_t pivot_index(const RationalField&, const Vector<RationalField>& z) {
  std::size_t best = z.size();
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (sgn(z[i]) != 0 && (best == z.size() || abs(z[i]) >= abs(z[best]))) best = i;
  }
  return best;
}

std::size_t pivot_index(const PrimeField&, const Vector<PrimeField>& z) {
  for (std::size_t i = z.size(); i-- > 0;) {
    if (z[i] != 0) return i;
  }
  return z.size();
}

}  // namespace

template <typename Field>
HomogeneousPolynomial<Field>::HomogeneousPolynomial(Field field, unsigned num_variables, unsigned degree)
    : field_(std::move(field)), num_variables_(num_variables), degree_(degree) {
  if (num_variables == 0) throw PreconditionError("a polynomial needs at least one variable");
  if (binomial(Integer(num_variables - 1 + degree), degree) > Integer(static_cast<unsigned long>(kMaxMonomials))) {
    throw ResourceError("degree " + std::to_string(degree) + " in " + std::to_string(num_variables) +
                        " variables exceeds the dense size limit");
  }
}

template <typename Field>
HomogeneousPolynomial<Field> HomogeneousPolynomial<Field>::random(Field field, unsigned num_variables, unsigned degree,
                                                                  std::mt19937_64& rng) {
  HomogeneousPolynomial f(field, num_variables, degree);
  for_each_exponent(num_variables, degree, [&](const Exponents& e) { f.add_term(e, field.random(rng)); });
  return f;
}

template <typename Field>
HomogeneousPolynomial<Field> HomogeneousPolynomial<Field>::linear_form(Field field, const Vector<Field>& c) {
  HomogeneousPolynomial f(field, static_cast<unsigned>(c.size()), 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Exponents e(c.size(), 0);
    e[i] = 1;
    f.add_term(e, c[i]);
  }
  return f;
}

template <typename Field>
void HomogeneousPolynomial<Field>::add_term(const Exponents& e, const Element& c) {
  if (e.size() != num_variables_) throw PreconditionError("exponent vector has the wrong number of variables");
  unsigned sum = 0;
  for (unsigned v : e) sum += v;
  if (sum != degree_) {
    throw PreconditionError("exponents sum to " + std::to_string(sum) + ", expected degree " + std::to_string(degree_));
  }
  if (field_.is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second = field_.add(it->second, c);
  if (field_.is_zero(it->second)) terms_.erase(it);
}

template <typename Field>
typename Field::Element HomogeneousPolynomial<Field>::operator()(const Vector<Field>& x) const {
  if (x.size() != num_variables_) throw PreconditionError("point has the wrong number of coordinates");
  std::vector<Vector<Field>> powers(num_variables_, Vector<Field>{field_.one()});
  for (unsigned i = 0; i < num_variables_; ++i) {
    for (unsigned k = 1; k <= degree_; ++k) powers[i].push_back(field_.mul(powers[i].back(), x[i]));
  }
  Element sum = field_.zero();
  for (const auto& [e, c] : terms_) {
    Element term = c;
    for (unsigned i = 0; i < num_variables_; ++i) {
      if (e[i] != 0) term = field_.mul(term, powers[i][e[i]]);
    }
    sum = field_.add(sum, term);
  }
  return sum;
}

template <typename Field>
HomogeneousPolynomial<Field> HomogeneousPolynomial<Field>::operator*(const HomogeneousPolynomial& other) const {
  if (other.num_variables_ != num_variables_) throw PreconditionError("product of polynomials in different rings");
  HomogeneousPolynomial out(field_, num_variables_, degree_ + other.degree_);
  Exponents e(num_variables_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      for (unsigned i = 0; i < num_variables_; ++i) e[i] = a[i] + b[i];
      out.add_term(e, field_.mul(ca, cb));
    }
  }
  return out;
}

template <typename Field>
HomogeneousPolynomial<Field> HomogeneousPolynomial<Field>::operator+(const HomogeneousPolynomial& other) const {
  if (other.num_variables_ != num_variables_ || other.degree_ != degree_) {
    throw PreconditionError("sum of polynomials of different shape");
  }
  HomogeneousPolynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

template <typename Field>
bool HomogeneousPolynomial<Field>::operator==(const HomogeneousPolynomial& other) const {
  return num_variables_ == other.num_variables_ && degree_ == other.degree_ && terms_ == other.terms_;
}

template <typename Field>
HomogeneousPolynomial<Field> HomogeneousPolynomial<Field>::substitute(const Matrix<Field>& m) const {
  if (m.size() != num_variables_) throw PreconditionError("substitution matrix has the wrong size");
  HomogeneousPolynomial unit(field_, num_variables_, 0);
  unit.add_term(Exponents(num_variables_, 0), field_.one());
  // powers[i][k] = (row i of m applied to x)^k
  std::vector<std::vector<HomogeneousPolynomial>> powers(num_variables_, std::vector<HomogeneousPolynomial>{unit});
  for (unsigned i = 0; i < num_variables_; ++i) {
    if (m[i].size() != num_variables_) throw PreconditionError("substitution matrix is not square");
    const HomogeneousPolynomial row = linear_form(field_, m[i]);
    for (unsigned k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * row);
  }
  HomogeneousPolynomial out(field_, num_variables_, degree_);
  for (const auto& [e, c] : terms_) {
    HomogeneousPolynomial term = unit;
    for (unsigned i = 0; i < num_variables_; ++i) {
      if (e[i] != 0) term = term * powers[i][e[i]];
    }
    for (const auto& [te, tc] : term.terms_) out.add_term(te, field_.mul(c, tc));
  }
  return out;
}

template <typename Field>
Vector<Field> HomogeneousPolynomial<Field>::along_line(const Vector<Field>& a, const Vector<Field>& b) const {
  if (a.size() != num_variables_ || b.size() != num_variables_) {
    throw PreconditionError("line points have the wrong number of coordinates");
  }
  std::vector<std::vector<Vector<Field>>> powers(num_variables_, {Vector<Field>{field_.one()}});
  for (unsigned i = 0; i < num_variables_; ++i) {
    const Vector<Field> linear{a[i], b[i]};
    for (unsigned k = 1; k <= degree_; ++k) powers[i].push_back(poly_mul(field_, powers[i].back(), linear));
  }
  Vector<Field> out(degree_ + 1, field_.zero());
  for (const auto& [e, c] : terms_) {
    Vector<Field> term{c};
    for (unsigned i = 0; i < num_variables_; ++i) {
      if (e[i] != 0) term = poly_mul(field_, term, powers[i][e[i]]);
    }
    for (std::size_t k = 0; k < term.size(); ++k) out[k] = field_.add(out[k], term[k]);
  }
  return out;
}

template <typename Field>
std::string HomogeneousPolynomial<Field>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << field_.format(c);
    for (unsigned i = 0; i < num_variables_; ++i) {
      if (e[i] == 0) continue;
      os << "*x" << i;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

template <typename Field>
ProjectivePoint<Field>::ProjectivePoint(Field field, Vector<Field> coordinates)
    : field_(std::move(field)), coords_(std::move(coordinates)) {
  if (std::all_of(coords_.begin(), coords_.end(), [&](const Element& c) { return field_.is_zero(c); })) {
    throw PreconditionError("invalid point: all coordinates are zero");
  }
}

template <typename Field>
Vector<Field> ProjectivePoint<Field>::normalized() const {
  Vector<Field> out = coords_;
  for (const auto& c : coords_) {
    if (field_.is_zero(c)) continue;
    const Element s = field_.inv(c);
    for (auto& v : out) v = field_.mul(v, s);
    break;
  }
  return out;
}

template <typename Field>
bool ProjectivePoint<Field>::operator==(const ProjectivePoint& other) const {
  return coords_.size() == other.coords_.size() && normalized() == other.normalized();
}

template <typename Field>
std::string ProjectivePoint<Field>::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ":";
    s += field_.format(coords_[i]);
  }
  return s + ")";
}

template <typename Field>
HomogeneousPolynomial<Field> GradedExpansion<Field>::reassemble() const {
  const unsigned n = num_variables() - 1;
  HomogeneousPolynomial<Field> out(field, n + 1, degree);
  for (unsigned i = 1; i <= degree; ++i) {
    for (const auto& [e, c] : component(i).terms()) {
      Exponents full = e;
      full.push_back(degree - i);
      out.add_term(full, c);
    }
  }
  return out;
}

template <typename Field>
Vector<Field> GradedExpansion<Field>::to_original(const Vector<Field>& x) const {
  if (x.size() != change.size()) throw PreconditionError("point has the wrong number of coordinates");
  Vector<Field> out(x.size(), field.zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out[i] = field.add(out[i], field.mul(change[i][j], x[j]));
  }
  return out;
}

template <typename Field>
GradedExpansion<Field> expand_at_point(const HomogeneousPolynomial<Field>& f, const ProjectivePoint<Field>& z) {
  const Field& F = f.field();
  const unsigned N = f.num_variables();
  if (f.degree() < 2) throw PreconditionError("expansion needs degree >= 2");
  if (N < 2) throw PreconditionError("expansion needs at least two variables");
  if (z.size() != N) throw PreconditionError("point has the wrong number of coordinates");
  if (!F.is_zero(f(z.coordinates()))) throw PreconditionError("the point " + z.to_string() + " is not on V(f)");

  const unsigned n = N - 1;
  const std::size_t c = pivot_index(F, z.coordinates());
  std::vector<std::size_t> perm(N);
  for (std::size_t i = 0; i < N; ++i) perm[i] = i;
  std::swap(perm[c], perm[n]);
  // Shear S: x_i = x'_i + w_i x'_n, with w the swapped point scaled to w_n = 1.
  const typename Field::Element scale = F.inv(z.coordinates()[c]);
  Matrix<Field> shear(N, Vector<Field>(N, F.zero()));
  for (std::size_t i = 0; i < N; ++i) {
    shear[i][i] = F.one();
    if (i < n) shear[i][n] = F.mul(z.coordinates()[perm[i]], scale);
  }

  GradedExpansion<Field> out{F, f.degree(), {}, Matrix<Field>(N)};
  for (std::size_t i = 0; i < N; ++i) out.change[i] = shear[perm[i]];
  const HomogeneousPolynomial<Field> g = f.substitute(out.change);
  for (unsigned i = 1; i <= f.degree(); ++i) out.components.emplace_back(F, n, i);
  for (const auto& [e, coeff] : g.terms()) {
    const unsigned i = f.degree() - e[n];
    if (i == 0) throw VerificationFailure("x_n^d term survived the change of coordinates");
    out.components[i - 1].add_term(Exponents(e.begin(), e.begin() + n), coeff);
  }
  return out;
}

template <typename Field>
Vector<Field> restrict_to_line(const GradedExpansion<Field>& exp, const Vector<Field>& y) {
  if (y.size() + 1 != exp.num_variables()) throw PreconditionError("direction has the wrong number of coordinates");
  Vector<Field> out;
  for (const auto& fi : exp.components) out.push_back(fi(y));
  return out;
}

template <typename Field>
std::optional<unsigned> tangency_order(const GradedExpansion<Field>& exp, const Vector<Field>& y) {
  const Vector<Field> values = restrict_to_line(exp, y);
  for (unsigned i = 0; i < values.size(); ++i) {
    if (!exp.field.is_zero(values[i])) return i + 1;
  }
  return std::nullopt;
}

template <typename Field>
std::vector<HomogeneousPolynomial<Field>> tangency_locus_equations(const GradedExpansion<Field>& exp, unsigned k) {
  if (k < 1 || k > exp.degree + 1) {
    throw PreconditionError("tangency order must lie in [1, " + std::to_string(exp.degree + 1) + "]");
  }
  return {exp.components.begin(), exp.components.begin() + (k - 1)};
}

template <typename Field>
ProjectivePoint<Field> residual_point(const GradedExpansion<Field>& exp, const Vector<Field>& y) {
  const Field& F = exp.field;
  const ProjectivePoint<Field> direction(F, y);
  const Vector<Field> values = restrict_to_line(exp, y);
  const unsigned d = exp.degree;
  for (unsigned i = 1; i + 2 <= d; ++i) {
    if (!F.is_zero(values[i - 1])) {
      throw PreconditionError("direction " + direction.to_string() + " is not a penultimate tangent: f_" +
                              std::to_string(i) + " = " + F.format(values[i - 1]));
    }
  }
  const auto& a = values[d - 2];
  const auto& b = values[d - 1];
  if (F.is_zero(a) && F.is_zero(b)) {
    throw IndeterminacyError("the line in direction " + direction.to_string() + " lies in the hypersurface");
  }
  Vector<Field> out;
  for (const auto& v : y) out.push_back(F.mul(v, a));
  out.push_back(F.neg(b));
  return ProjectivePoint<Field>(F, std::move(out));
}

template <typename Field>
std::optional<unsigned> vanishing_order(const HomogeneousPolynomial<Field>& f, const Vector<Field>& base,
                                        const Vector<Field>& direction) {
  const Field& F = f.field();
  const unsigned d = f.degree();
  const unsigned N = f.num_variables();
  if (base.size() != N || direction.size() != N) throw PreconditionError("line points have the wrong size");
  for (unsigned k = 1; k <= d; ++k) {
    if (F.is_zero(F.from_integer(k))) throw PreconditionError("field too small to interpolate a degree " + std::to_string(d) + " restriction");
  }
  // Newton divided differences over the nodes 0, 1, ..., d.
  Vector<Field> c;
  for (unsigned k = 0; k <= d; ++k) {
    Vector<Field> x(N);
    for (unsigned i = 0; i < N; ++i) x[i] = F.add(base[i], F.mul(F.from_integer(k), direction[i]));
    c.push_back(f(x));
  }
  for (unsigned level = 1; level <= d; ++level) {
    for (unsigned k = d; k >= level; --k) {
      c[k] = F.mul(F.sub(c[k], c[k - 1]), F.inv(F.from_integer(level)));
    }
  }
  // Horner in Newton form: h = c_d; h = h (s - k) + c_k.
  Vector<Field> h{c[d]};
  for (unsigned k = d; k-- > 0;) {
    h = poly_mul(F, h, Vector<Field>{F.neg(F.from_integer(k)), F.one()});
    h[0] = F.add(h[0], c[k]);
  }
  for (unsigned k = 0; k < h.size(); ++k) {
    if (!F.is_zero(h[k])) return k;
  }
  return std::nullopt;
}

namespace {

Vector<PrimeField> poly_mod(const PrimeField& F, Vector<PrimeField> a, const Vector<PrimeField>& b) {
  trim(F, a);
  const std::uint64_t lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const std::uint64_t q = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(q, b[i]));
    trim(F, a);
  }
  return a;
}

Vector<PrimeField> poly_gcd(const PrimeField& F, Vector<PrimeField> a, Vector<PrimeField> b) {
  trim(F, a);
  trim(F, b);
  while (!b.empty()) {
    Vector<PrimeField> r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Vector<PrimeField> random_combination(const PrimeField& F, const std::vector<Vector<PrimeField>>& basis, std::size_t n,
                                      std::mt19937_64& rng) {
  Vector<PrimeField> v(n, 0);
  for (const auto& b : basis) {
    const std::uint64_t c = F.random(rng);
    for (std::size_t i = 0; i < n; ++i) v[i] = F.add(v[i], F.mul(c, b[i]));
  }
  return v;
}

bool is_zero_vector(const Vector<PrimeField>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t c) { return c == 0; });
}

bool proportional(const PrimeField& F, const Vector<PrimeField>& a, const Vector<PrimeField>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (F.mul(a[i], b[j]) != F.mul(a[j], b[i])) return false;
    }
  }
  return true;
}

// Common projective zeros of the given forms on the line through a and b.
std::vector<Vector<PrimeField>> zeros_on_line(const PrimeField& F, const std::vector<HomogeneousPolynomial<PrimeField>>& forms,
                                              const Vector<PrimeField>& a, const Vector<PrimeField>& b) {
  std::vector<Vector<PrimeField>> out;
  Vector<PrimeField> g;
  bool at_infinity = true;
  for (const auto& form : forms) {
    g = poly_gcd(F, g, form.along_line(a, b));
    if (form(b) != 0) at_infinity = false;
  }
  if (g.empty()) {
    out.push_back(a);
    return out;
  }
  for (std::uint64_t t : roots_mod_p(F, g)) {
    Vector<PrimeField> x(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) x[i] = F.add(a[i], F.mul(t, b[i]));
    out.push_back(std::move(x));
  }
  if (at_infinity) out.push_back(b);
  return out;
}

}  // namespace

std::vector<std::uint64_t> roots_mod_p(const PrimeField& F, const Vector<PrimeField>& c) {
  Vector<PrimeField> a = c;
  trim(F, a);
  if (a.empty()) throw PreconditionError("the zero polynomial has every element as a root");
  std::vector<std::uint64_t> out;
  if (a.size() == 1) return out;
  for (std::uint64_t t = 0; t < F.characteristic(); ++t) {
    std::uint64_t v = 0;
    for (std::size_t k = a.size(); k-- > 0;) v = F.add(F.mul(v, t), a[k]);
    if (v == 0) out.push_back(t);
  }
  return out;
}

std::vector<ProjectivePoint<PrimeField>> sample_penta_points(const GradedExpansion<PrimeField>& exp, std::size_t budget,
                                                             std::mt19937_64& rng, std::size_t max_points,
                                                             std::size_t* lines_tried) {
  const PrimeField& F = exp.field;
  const std::size_t n = exp.num_variables() - 1;
  std::vector<ProjectivePoint<PrimeField>> out;
  auto keep = [&](const Vector<PrimeField>& y) {
    if (is_zero_vector(y)) return;
    ProjectivePoint<PrimeField> p(F, y);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  };
  const std::vector<HomogeneousPolynomial<PrimeField>> equations =
      exp.degree >= 2 ? tangency_locus_equations(exp, exp.degree - 1) : std::vector<HomogeneousPolynomial<PrimeField>>{};

  // Basis of {f_1 = 0}.
  std::vector<Vector<PrimeField>> basis;
  Vector<PrimeField> linear(n, 0);
  if (!equations.empty()) {
    for (const auto& [e, c] : equations.front().terms()) {
      for (std::size_t j = 0; j < n; ++j) {
        if (e[j] == 1) linear[j] = c;
      }
    }
  }
  std::size_t pivot = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (linear[j] != 0) pivot = j;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (j == pivot) continue;
    Vector<PrimeField> v(n, 0);
    v[j] = 1;
    if (pivot < n) v[pivot] = F.neg(F.mul(linear[j], F.inv(linear[pivot])));
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return out;

  const std::vector<HomogeneousPolynomial<PrimeField>> rest(equations.size() > 1 ? equations.begin() + 1 : equations.end(),
                                                            equations.end());
  auto on_rest = [&](const Vector<PrimeField>& y) {
    return std::all_of(rest.begin(), rest.end(), [&](const auto& f) { return f(y) == 0; });
  };
  if (basis.size() == 1) {
    if (on_rest(basis.front())) keep(basis.front());
    return out;
  }
  if (basis.size() == 2 && !rest.empty()) {
    // {f_1 = 0} is a single line.
    for (const auto& y : zeros_on_line(F, rest, basis[0], basis[1])) {
      if (out.size() < max_points) keep(y);
    }
    return out;
  }
  std::size_t tries = 0;
  for (; tries < budget && out.size() < max_points; ++tries) {
    const Vector<PrimeField> a = random_combination(F, basis, n, rng);
    if (rest.empty()) {
      keep(a);
      continue;
    }
    const Vector<PrimeField> b = random_combination(F, basis, n, rng);
    if (is_zero_vector(a) || is_zero_vector(b) || proportional(F, a, b)) continue;
    for (const auto& y : zeros_on_line(F, rest, a, b)) {
      if (out.size() < max_points) keep(y);
    }
  }
  if (lines_tried) *lines_tried = tries;
  return out;
}

std::optional<ProjectivePoint<PrimeField>> random_point_on(const HomogeneousPolynomial<PrimeField>& f, std::size_t budget,
                                                           std::mt19937_64& rng) {
  const PrimeField& F = f.field();
  const std::size_t N = f.num_variables();
  for (std::size_t tries = 0; tries < budget; ++tries) {
    Vector<PrimeField> a(N), b(N);
    for (auto& v : a) v = F.random(rng);
    for (auto& v : b) v = F.random(rng);
    if (is_zero_vector(a) || is_zero_vector(b) || proportional(F, a, b)) continue;
    for (const auto& x : zeros_on_line(F, {f}, a, b)) {
      if (!is_zero_vector(x)) return ProjectivePoint<PrimeField>(F, x);
    }
  }
  return std::nullopt;
}

template class HomogeneousPolynomial<RationalField>;
template class HomogeneousPolynomial<PrimeField>;
template class ProjectivePoint<RationalField>;
template class ProjectivePoint<PrimeField>;
template struct GradedExpansion<RationalField>;
template struct GradedExpansion<PrimeField>;

#define PENTA_GEOMETRY_INSTANTIATE(F)                                                                          \
  template GradedExpansion<F> expand_at_point(const HomogeneousPolynomial<F>&, const ProjectivePoint<F>&);     \
  template Vector<F> restrict_to_line(const GradedExpansion<F>&, const Vector<F>&);                             \
  template std::optional<unsigned> tangency_order(const GradedExpansion<F>&, const Vector<F>&);                 \
  template std::vector<HomogeneousPolynomial<F>> tangency_locus_equations(const GradedExpansion<F>&, unsigned); \
  template ProjectivePoint<F> residual_point(const GradedExpansion<F>&, const Vector<F>&);                      \
  template std::optional<unsigned> vanishing_order(const HomogeneousPolynomial<F>&, const Vector<F>&, const Vector<F>&);

PENTA_GEOMETRY_INSTANTIATE(RationalField)
PENTA_GEOMETRY_INSTANTIATE(PrimeField)

}  // namespace penta::geometry
