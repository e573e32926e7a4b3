#include "doctest.h"
#include "oracles.hpp"

#include "penta/errors.hpp"
#include "penta/integer.hpp"
#include "penta/interval.hpp"
#include "penta/upoly.hpp"

#include <random>

using namespace penta;

TEST_CASE("binomial agrees with Pascal's triangle") {
  const auto rows = oracle::pascal(64);
  for (unsigned n = 0; n <= 64; ++n) {
    for (unsigned k = 0; k <= n; ++k) CHECK(binomial(Integer(n), k) == rows[n][k]);
    CHECK(binomial(Integer(n), n + 1) == 0);
  }
  CHECK(binomial(Integer(12), 6) == 924);
  CHECK(binomial(Integer(24), 7) == 346104);
  CHECK(binomial(Integer(5), 0) == 1);
}

TEST_CASE("binomial with negative upper index") {
  // C(-n, k) = (-1)^k C(n + k - 1, k)
  const auto rows = oracle::pascal(40);
  for (int n = 1; n <= 20; ++n) {
    for (unsigned k = 0; k <= 20; ++k) {
      const Integer expected = (k % 2 ? -1 : 1) * rows[n + k - 1][k];
      CHECK(binomial(Integer(-n), k) == expected);
    }
  }
  CHECK(binomial(Integer(-1), 3) == -1);
}

TEST_CASE("n(7) from the binomial") {
  Rational tail(binomial(Integer(24), 7) - 1, 17);
  tail.canonicalize();
  const Rational n7 = Rational(17) + tail;
  CHECK(n7 == 20376);
}

TEST_CASE("floor, ceil, powers and parsing") {
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(ceil(Rational(4)) == 4);
  CHECK(pow2(10) == 1024);
  CHECK(ipow(Integer(3), 5) == 243);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(6, 3)) == "2");
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_integer("12x"), ParseError);
  CHECK_THROWS_AS(to_integer(Rational(1, 2)), VerificationFailure);
  CHECK(integer_from_ull(18446744073709551615ULL).get_str() == "18446744073709551615");
}

TEST_CASE("interval enclosures of exact rationals") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a(dist(rng), std::labs(dist(rng)) + 1), b(dist(rng), std::labs(dist(rng)) + 1);
    Rational qa = a, qb = b;
    qa.canonicalize();
    qb.canonicalize();
    const Interval ia = Interval::exact(qa, 64), ib = Interval::exact(qb, 64);
    CHECK(ia.contains(qa));
    CHECK((ia + ib).contains(qa + qb));
    CHECK((ia - ib).contains(qa - qb));
    CHECK((ia * ib).contains(qa * qb));
    if (sgn(qb) != 0) CHECK((ia / ib).contains(qa / qb));
  }
}

TEST_CASE("sqrt, log, exp and pow enclose the true value") {
  const Interval four = Interval::exact(Integer(4));
  CHECK(sqrt(four).contains(Rational(2)));
  CHECK(sqrt(four).width() <= Rational(1, 1) / Rational(pow2(254)));
  const Interval two_root = sqrt(Interval::exact(Integer(2)));
  CHECK(two_root.lower() * two_root.lower() <= 2);
  CHECK(two_root.upper() * two_root.upper() >= 2);
  CHECK(log(Interval::exact(Integer(1))).contains(Rational(0)));
  CHECK(exp(Interval::exact(Integer(0))).contains(Rational(1)));
  // 6359^(3/2) = 507087.888...
  const Interval m7 = pow(Interval::exact(Integer(6359)), Rational(3, 2));
  CHECK(m7.lower() > Rational(507087888, 1000));
  CHECK(m7.upper() < Rational(507087889, 1000));
  const Interval cube_root = pow(Interval::exact(Integer(27)), Rational(1, 3));
  CHECK(cube_root.contains(Rational(3)));
  const Interval inverse = pow(Interval::exact(Integer(16)), Rational(-1, 4));
  CHECK(inverse.contains(Rational(1, 2)));
  // e^(log 10) = 10
  CHECK(exp(log(Interval::exact(Integer(10)))).contains(Rational(10)));
  CHECK_THROWS_AS(sqrt(Interval::exact(Integer(-1))), DomainError);
  CHECK_THROWS_AS(log(Interval::exact(Integer(0))), DomainError);
}

TEST_CASE("higher precision refines the enclosure") {
  Interval previous = log(Interval::exact(Integer(6359), 64));
  for (long p : {128L, 256L, 512L, 1024L}) {
    const Interval next = log(Interval::exact(Integer(6359), p));
    CHECK(next.subset_of(previous));
    CHECK(next.width() < previous.width());
    previous = next;
  }
}

TEST_CASE("three-valued comparisons and certification") {
  const Interval a = Interval::exact(Integer(1)), b = Interval::exact(Integer(2));
  CHECK(less(a, b) == Verdict::verified);
  CHECK(less(b, a) == Verdict::refuted);
  CHECK(less(a, a) == Verdict::refuted);
  CHECK(less_equal(a, a) == Verdict::verified);
  CHECK(less(Interval::hull(0, 2), Interval::exact(Integer(1))) == Verdict::inconclusive);
  // sqrt(2) < 1.41421356237309504880168872420969808 needs about 120 bits.
  const Rational bound = parse_rational("141421356237309504880168872420969808/100000000000000000000000000000000000");
  const Certificate c = certify(
      [&](long p) { return less(sqrt(Interval::exact(Integer(2), p)), Interval::exact(bound, p)); }, 16, 4096);
  CHECK(c.verdict == Verdict::verified);
  CHECK(c.precision >= 128);
  const Certificate never =
      certify([&](long p) { return less(Interval::exact(Integer(1), p), Interval::exact(Integer(1), p)); }, 16, 64);
  CHECK(never.verdict == Verdict::refuted);
  const Certificate stuck =
      certify([&](long p) { return less(Interval::hull(0, 2, p), Interval::exact(Integer(1), p)); }, 16, 64);
  CHECK(stuck.verdict == Verdict::inconclusive);
  CHECK(stuck.precision == 64);
}

TEST_CASE("polynomial arithmetic and binomial basis") {
  const RatPoly p{1, 2, 3};
  CHECK(p(Integer(2)) == 17);
  CHECK(p.shifted(Integer(1)) == RatPoly{6, 8, 3});
  CHECK(p.forward_difference() == RatPoly{5, 6});
  CHECK(RatPoly::linear(3) == RatPoly{3, 1});
  for (int a = -3; a <= 3; ++a) {
    for (unsigned n = 0; n <= 5; ++n) {
      const RatPoly b = RatPoly::binomial(Integer(a), n);
      for (int t = -4; t <= 6; ++t) CHECK(b(Integer(t)) == Rational(oracle::binom(Integer(t + a), n)));
    }
  }
  RatPoly q, r;
  RatPoly::divide(RatPoly{-1, 0, 1}, RatPoly{-1, 1}, q, r);
  CHECK(q == RatPoly{1, 1});
  CHECK(r.is_zero());
  CHECK(RatPoly::gcd(RatPoly{-1, 0, 1}, RatPoly{1, 2, 1}) == RatPoly{1, 1});
  // Newton coefficients reproduce the polynomial.
  const RatPoly cubic{5, -2, 0, 1};
  const auto c = cubic.newton_coefficients(Integer(2));
  for (int t = -3; t <= 8; ++t) {
    Rational v = 0;
    for (std::size_t n = 0; n < c.size(); ++n) v += c[n] * Rational(oracle::binom(Integer(t - 2), n));
    CHECK(v == cubic(Integer(t)));
  }
}

TEST_CASE("Sturm chain counts real roots") {
  // (t - 1)(t - 2)(t - 5)^2
  const RatPoly p = RatPoly{-1, 1} * RatPoly{-2, 1} * RatPoly{-5, 1} * RatPoly{-5, 1};
  const SturmChain s(p);
  CHECK(s.roots_in(Integer(0), Integer(10)) == 3);
  CHECK(s.roots_in(Integer(1), Integer(4)) == 1);
  CHECK(s.roots_in(Integer(6), Integer(100)) == 0);
}

TEST_CASE("integer extrema agree with brute force") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coeff(-20, 20);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> c(1 + trial % 5);
    for (auto& v : c) v = coeff(rng);
    const RatPoly p(c);
    const Integer lo(-30 + trial % 7), hi(25 + trial % 11);
    const IntegerExtrema e = integer_extrema(p, lo, hi);
    Rational mn = p(lo), mx = p(lo);
    for (Integer k = lo; k <= hi; k += 1) {
      mn = std::min(mn, p(k));
      mx = std::max(mx, p(k));
    }
    CHECK(e.min == mn);
    CHECK(e.max == mx);
    CHECK(p(e.argmin) == mn);
    CHECK(p(e.argmax) == mx);
  }
  // A long range is handled without enumerating it.
  const RatPoly wide{0, 1000, -1};
  const IntegerExtrema e = integer_extrema(wide, Integer(0), pow2(80));
  CHECK(e.max == 250000);
  CHECK(e.argmax == 500);
  CHECK(e.evaluations < 2000);
}
