#include "doctest.h"
#include "geometry_suite.hpp"

#include "penta/errors.hpp"
#include "penta/geometry.hpp"
#include "penta/geometry_json.hpp"
#include "penta/multidegree.hpp"

#include <algorithm>

using namespace penta;
using namespace penta::geometry;

namespace {

using QPoly = HomogeneousPolynomial<RationalField>;
using QPoint = ProjectivePoint<RationalField>;
const RationalField Q;

QPoly conic() {
  QPoly f(Q, 3, 2);
  f.add_term({1, 0, 1}, 1);
  f.add_term({0, 2, 0}, -1);
  return f;
}

// x0 x3^2 + x1 x2 x3 + x1^3: f_1 = x0, f_2 = x1 x2, f_3 = x1^3 at z = (0:0:0:1).
QPoly cubic_with_line() {
  QPoly f(Q, 4, 3);
  f.add_term({1, 0, 0, 2}, 1);
  f.add_term({0, 1, 1, 1}, 1);
  f.add_term({0, 3, 0, 0}, 1);
  return f;
}

Vector<RationalField> q(std::initializer_list<long> v) {
  Vector<RationalField> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// A random form of degree d through z over Q.
QPoly random_through(const Vector<RationalField>& z, unsigned d, std::mt19937_64& rng) {
  QPoly f = QPoly::random(Q, static_cast<unsigned>(z.size()), d, rng);
  const Rational value = f(z);
  std::size_t j = 0;
  while (sgn(z[j]) == 0) ++j;
  Rational power = 1;
  for (unsigned k = 0; k < d; ++k) power *= z[j];
  Exponents e(z.size(), 0);
  e[j] = d;
  f.add_term(e, -value / power);
  return f;
}

}  // namespace

TEST_CASE("conic expansion and parameterization") {
  const QPoly f = conic();
  const QPoint z(Q, q({0, 0, 1}));
  const auto exp = expand_at_point(f, z);
  QPoly f1(Q, 2, 1), f2(Q, 2, 2);
  f1.add_term({1, 0}, 1);
  f2.add_term({0, 2}, -1);
  CHECK(exp.component(1) == f1);
  CHECK(exp.component(2) == f2);
  CHECK(restrict_to_line(exp, q({1, 0})) == q({1, 0}));
  CHECK(tangency_locus_equations(exp, 1).empty());
  CHECK(tangency_locus_equations(exp, 3).size() == 2);
  for (long a = -3; a <= 3; ++a) {
    for (long b = -3; b <= 3; ++b) {
      if (a == 0 && b == 0) continue;
      const QPoint w = residual_point(exp, q({a, b}));
      CHECK(w == QPoint(Q, q({a * a, a * b, b * b})));
      CHECK(f(w.coordinates()) == 0);
    }
  }
  CHECK(residual_point(exp, q({2, 3})).to_string() == "(4:6:9)");
}

TEST_CASE("expansion errors and point validity") {
  const QPoly f = conic();
  CHECK_THROWS_AS(expand_at_point(f, QPoint(Q, q({1, 1, 0}))), PreconditionError);
  CHECK_THROWS_AS(QPoint(Q, q({0, 0, 0})), PreconditionError);
  const auto exp = expand_at_point(f, QPoint(Q, q({0, 0, 1})));
  CHECK_THROWS(tangency_locus_equations(exp, 0));
  CHECK_THROWS(tangency_locus_equations(exp, 4));
  CHECK(QPoint(Q, q({1, 2, 3})) == QPoint(Q, q({-2, -4, -6})));
  CHECK_FALSE(QPoint(Q, q({1, 2, 3})) == QPoint(Q, q({1, 2, 4})));
}

TEST_CASE("residual point cases on a cubic containing lines") {
  const QPoly f = cubic_with_line();
  const auto exp = expand_at_point(f, QPoint(Q, q({0, 0, 0, 1})));
  CHECK_THROWS_AS(residual_point(exp, q({1, 0, 0})), PreconditionError);
  CHECK_THROWS_AS(residual_point(exp, q({0, 0, 1})), IndeterminacyError);
  CHECK_FALSE(tangency_order(exp, q({0, 0, 1})).has_value());
  const QPoint w = residual_point(exp, q({0, 1, 1}));
  CHECK(w == QPoint(Q, q({0, 1, 1, -1})));
  CHECK(f(w.coordinates()) == 0);
  CHECK(tangency_order(exp, q({0, 1, 1})) == 2u);

  // f_3(y) = 0 with f_2(y) != 0 puts the residual point on x_3 = 0.
  QPoly g(Q, 4, 3);
  g.add_term({1, 0, 0, 2}, 1);
  g.add_term({0, 2, 0, 1}, 1);
  g.add_term({0, 0, 3, 0}, 1);
  const auto eg = expand_at_point(g, QPoint(Q, q({0, 0, 0, 1})));
  CHECK(residual_point(eg, q({0, 1, 0})) == QPoint(Q, q({0, 1, 0, 0})));
}

TEST_CASE("penultimate tangent equations have the derived multi-degree") {
  std::mt19937_64 rng(3);
  for (unsigned d = 3; d <= 6; ++d) {
    const auto z = q({1, -2, 0, 3});
    const QPoly f = random_through(z, d, rng);
    REQUIRE(f(z) == 0);
    const auto exp = expand_at_point(f, QPoint(Q, z));
    const auto eqs = tangency_locus_equations(exp, d - 1);
    std::vector<unsigned> degrees;
    for (const auto& e : eqs) degrees.push_back(e.degree());
    std::vector<unsigned> expected;
    for (const auto& e : derived_multidegree(MultiDegree{d}).degrees()) expected.push_back(e);
    std::sort(expected.begin(), expected.end());
    CHECK(degrees == expected);
    CHECK(tangency_locus_equations(exp, d + 1).size() == d);
    CHECK(exp.reassemble() == f.substitute(exp.change));
  }
}

TEST_CASE("cubics over Q: one linear condition, residual points on the surface") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto z = q({2, -1, 1, 3, 1});
    const QPoly f = random_through(z, 3, rng);
    const auto exp = expand_at_point(f, QPoint(Q, z));
    const auto eqs = tangency_locus_equations(exp, 2);
    REQUIRE(eqs.size() == 1);
    const QPoly& linear = eqs[0];
    CHECK(linear.degree() == 1);
    // Project a random direction onto the kernel of the linear form.
    Vector<RationalField> y(4);
    for (auto& c : y) c = Q.random(rng);
    std::size_t j = 0;
    Vector<RationalField> unit(4, Rational(0));
    for (; j < 4; ++j) {
      unit.assign(4, Rational(0));
      unit[j] = 1;
      if (sgn(linear(unit)) != 0) break;
    }
    REQUIRE(j < 4);
    y[j] -= linear(y) / linear(unit);
    if (std::all_of(y.begin(), y.end(), [](const Rational& c) { return sgn(c) == 0; })) continue;
    CHECK(linear(y) == 0);
    const auto values = restrict_to_line(exp, y);
    if (sgn(values[1]) == 0 && sgn(values[2]) == 0) continue;
    const QPoint w = residual_point(exp, y);
    CHECK(f(exp.to_original(w.coordinates())) == 0);
    Vector<RationalField> dir = y;
    dir.push_back(0);
    const auto order = vanishing_order(f, z, exp.to_original(dir));
    CHECK(order == tangency_order(exp, y));
    CHECK(order >= 2u);
  }
}

TEST_CASE("vanishing order oracle agrees with tangency order") {
  std::mt19937_64 rng(9);
  const auto z = q({0, 1, 1, 2});
  const QPoly f = random_through(z, 4, rng);
  const auto exp = expand_at_point(f, QPoint(Q, z));
  for (int trial = 0; trial < 20; ++trial) {
    Vector<RationalField> y(3);
    for (auto& c : y) c = Q.random(rng);
    if (std::all_of(y.begin(), y.end(), [](const Rational& c) { return sgn(c) == 0; })) continue;
    Vector<RationalField> dir = y;
    dir.push_back(0);
    CHECK(vanishing_order(f, z, exp.to_original(dir)) == tangency_order(exp, y));
  }
}

TEST_CASE("prime field basics") {
  CHECK_THROWS(PrimeField(100));
  const PrimeField F(101);
  CHECK(F.mul(F.inv(7), 7) == 1);
  CHECK(F.parse("1/2") == F.inv(2));
  CHECK(F.parse("-1") == 100);
  // (t - 3)(t - 5) = t^2 - 8 t + 15
  auto roots = roots_mod_p(F, {15, F.neg(8), 1});
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<std::uint64_t>{3, 5});
  CHECK(roots_mod_p(F, {1, 0, 1}).size() == 2);  // 10^2 = -1 mod 101
  CHECK(roots_mod_p(PrimeField(103), {1, 0, 1}).empty());
}

TEST_CASE("penultimate tangent sampling") {
  std::mt19937_64 rng(21);
  const PrimeField F(101);
  HomogeneousPolynomial<PrimeField> c(F, 3, 2);
  c.add_term({1, 0, 1}, 1);
  c.add_term({0, 2, 0}, F.neg(1));
  const auto ec = expand_at_point(c, ProjectivePoint<PrimeField>(F, {0, 0, 1}));
  CHECK(sample_penta_points(ec, 50, rng, 5).size() == 5);

  // Cubic surfaces: the tangent conditions cut a curve in the plane of directions.
  std::size_t nonempty = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = HomogeneousPolynomial<PrimeField>::random(F, 4, 3, rng);
    const auto z = random_point_on(f, 1000, rng);
    REQUIRE(z);
    const auto exp = expand_at_point(f, *z);
    const auto ys = sample_penta_points(exp, 1000, rng, 2);
    if (!ys.empty()) ++nonempty;
    for (const auto& y : ys) CHECK(exp.component(1)(y.coordinates()) == 0);
  }
  CHECK(nonempty == 10);

  // Fermat cubic: along a tangent direction f_2 vanishes too and the residual point is z.
  HomogeneousPolynomial<PrimeField> fermat(F, 4, 3);
  for (unsigned i = 0; i < 4; ++i) {
    Exponents e(4, 0);
    e[i] = 3;
    fermat.add_term(e, 1);
  }
  const ProjectivePoint<PrimeField> z(F, {1, F.neg(1), 0, 0});
  const auto ef = expand_at_point(fermat, z);
  for (const auto& y : sample_penta_points(ef, 2000, rng, 4)) {
    const auto values = restrict_to_line(ef, y.coordinates());
    if (values[2] == 0) continue;
    const auto w = residual_point(ef, y.coordinates());
    CHECK(fermat(ef.to_original(w.coordinates())) == 0);
  }
}

TEST_CASE("json round trips") {
  std::mt19937_64 rng(2);
  const QPoly f = QPoly::random(Q, 4, 3, rng);
  CHECK(polynomial_from_json(Q, polynomial_to_json(f)) == f);
  const PrimeField F(10007);
  const auto g = HomogeneousPolynomial<PrimeField>::random(F, 5, 4, rng);
  CHECK(polynomial_from_json(F, polynomial_to_json(g)) == g);
  const auto parsed = polynomial_from_json(Q, nlohmann::json::parse(
      R"([{"exponents": [1, 0, 1], "coefficient": "1"}, {"exponents": [0, 2, 0], "coefficient": -1}])"));
  CHECK(parsed == conic());
  CHECK_THROWS(polynomial_from_json(Q, nlohmann::json::parse(R"([{"exponents": [1, 0], "coefficient": "1"}, {"exponents": [1, 1, 1], "coefficient": "1"}])")));
  CHECK(point_from_text(Q, "1/2:3:-4") == Vector<RationalField>{Rational(1, 2), 3, -4});
  CHECK(point_from_text(Q, "[1, \"2/3\", 0]") == Vector<RationalField>{1, Rational(2, 3), 0});
  CHECK(point_from_text(F, "1,2,3") == Vector<PrimeField>{1, 2, 3});
  const auto j = point_to_json(q({1, 0, -2}), Q);
  CHECK(j.dump() == R"(["1","0","-2"])");
}

TEST_CASE("random instances over prime fields") {
  const suite::GeometryTally t = suite::run_prime_instances(36, 1234);
  for (const auto& f : t.failures) FAIL_CHECK(f);
  CHECK(t.instances == 36);
  CHECK(t.round_trips == 36);
  CHECK(t.residuals > 20);
  MESSAGE("residuals checked: " << t.residuals << ", instances with tangent points: " << t.with_penta_points);
}
