#include "doctest.h"
#include "oracles.hpp"

#include "penta/bounds.hpp"
#include "penta/chain_levels.hpp"
#include "penta/errors.hpp"

#include <functional>

using namespace penta;

namespace {

MultiplicitySequence from_seq(const oracle::Seq& s) {
  std::vector<Integer> z;
  for (long v : s) z.emplace_back(v);
  return MultiplicitySequence(z);
}

void partitions(unsigned max_sum, const std::function<void(const oracle::Seq&)>& visit) {
  oracle::Seq mu;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    oracle::Seq trimmed = mu;
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    visit(trimmed);
    for (unsigned d = std::min(remaining, max_part); d >= 1; --d) {
      if (mu.size() < d) mu.resize(d, 0);
      ++mu[d - 1];
      rec(remaining - d, d);
      --mu[d - 1];
    }
  };
  rec(max_sum, max_sum);
}

const ChainOptions kWalk{ChainLimits{}, ChainMethod::walk};
const ChainOptions kLevels{ChainLimits{}, ChainMethod::levels};

}  // namespace

TEST_CASE("r0 and n0 examples") {
  CHECK(r0(MultiDegree{3}) == 1);
  CHECK(r0(MultiDegree{}) == -1);
  CHECK(r0(MultiDegree{2, 3}) == 2);
  CHECK(n0(MultiDegree{3}, Integer(1)) == 4);
  CHECK(n0(MultiDegree{6}, Integer(6)) == Rational(959, 6));
  CHECK(ceil(n0(MultiDegree{6}, Integer(6))) == 160);
  CHECK(n0(MultiDegree{7}, Integer(17)) == 20376);
  CHECK(n0(MultiDegree{2, 3}, Integer(2)) == 9);
  CHECK_THROWS_AS(n0(MultiDegree{3}, Integer(0)), DomainError);
  CHECK_THROWS_AS(n0(MultiDegree{3}, Integer(-1)), DomainError);
}

TEST_CASE("recursive bounds on small examples") {
  CHECK(r_bound(MultiDegree{}) == -2);
  CHECK(r_bound(MultiDegree{3}) == 1);
  CHECK(r_bound(MultiDegree{2, 3}) == 2);
  CHECK(n_bound(MultiDegree{1, 1, 2}, Integer(1)) == 6);
  CHECK(n_bound(MultiDegree{1, 1, 1}, Integer(5)) == 8);
  CHECK(n_bound(MultiDegree{2, 3}, Integer(2)) == 9);
  CHECK_THROWS_AS(n_bound(MultiDegree{3}, Integer(-2)), DomainError);

  const BoundReport three = n_of_multidegree(MultiDegree{3});
  CHECK(three.r_value == 1);
  CHECK(three.n_value_integer == 4);
  const BoundReport five = n_of_multidegree(MultiDegree{5});
  CHECK(five.r_value == 3);
  CHECK(five.n_value_exact == Rational(64, 3));
  CHECK(five.n_value_integer == 22);
  const BoundReport mixed = n_of_multidegree(MultiDegree{2, 3});
  CHECK(mixed.r_value == 2);
  CHECK(mixed.n_value_integer == 9);
  CHECK(mixed.chain_length == 4);
}

TEST_CASE("r and n agree with the direct recursion on every small multi-degree") {
  std::size_t count = 0;
  partitions(12, [&](const oracle::Seq& s) {
    const auto walked = oracle::chain(s, 7000);
    if (!walked.back().empty()) return;
    ++count;
    const MultiplicitySequence mu = from_seq(s);
    const Integer r = oracle::r(s);
    CHECK(r_bound(mu, kWalk) == r);
    CHECK(r_bound(mu, kLevels) == r);
    CHECK(chain_length(mu) == static_cast<long>(walked.size()));
    if (r < -1) return;
    std::vector<Integer> rs{-1, 0, 1, 2, 3, r - 1, r, r + 1};
    for (const Integer& rr : rs) {
      if (rr < -1) continue;
      const Rational expected = oracle::n(s, rr);
      CHECK(n_bound(mu, rr, kWalk) == expected);
      CHECK(n_bound(mu, rr, kLevels) == expected);
    }
  });
  CHECK(count == 265);
}

TEST_CASE("chain identity and the low top-degree formula") {
  partitions(14, [&](const oracle::Seq& s) {
    if (s.size() < 3) return;
    const MultiplicitySequence mu = from_seq(s);
    CHECK(r_bound(mu) == chain_length(mu) - 2);
  });
  for (long a = 0; a <= 8; ++a) {
    for (long b = 0; b <= 8; ++b) {
      if (a + b == 0) continue;
      CHECK(r_bound(MultiplicitySequence{a, b}) == b - 1);
      CHECK(oracle::r(b == 0 ? oracle::Seq{a} : oracle::Seq{a, b}) == (b == 0 ? -1 : b - 1));
    }
  }
}

TEST_CASE("m table matches the literal operator iteration") {
  const auto expected = oracle::m_rows(8, 6);
  const MTable t = m_table(8, 6);
  const MTable s = m_table(8, 6, Exec::serial);
  for (unsigned i = 0; i <= 8; ++i) {
    for (unsigned j = 0; j <= 6; ++j) {
      CHECK(t.at(i, j) == expected[i][j]);
      CHECK(s.at(i, j) == expected[i][j]);
    }
  }
  CHECK(t.m(4) == 3);
  CHECK(t.m(6) == 103);
  CHECK(t.rows[8][0] == 20700541);
  CHECK(t.at(8, 1) == Integer("88819638509"));
  CHECK(t.at(8, 2) == Integer("214404499562520"));
  CHECK(t.at(8, 3) == Integer("368104651084030885"));
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(0, 3) == 0);
  CHECK(t.m(1) == 0);
}

TEST_CASE("single degree formulas") {
  CHECK(r_of_degree(3) == 1);
  CHECK(r_of_degree(7) == 17);
  CHECK(r_of_degree(8) == 120);
  CHECK(r_of_degree(9) == 6479);
  CHECK(r_of_degree(10) == 20707020);
  CHECK_THROWS_AS(r_of_degree(2), DomainError);
  const char* published[] = {"4", "9", "22", "160", "20376", "11914188890", "8616199237736295920955120",
                             "192884152577980851363553858004926940342106493833715693762179"};
  for (unsigned d = 3; d <= 10; ++d) CHECK(n_of_degree(d).n_value_integer.get_str() == published[d - 3]);
  for (unsigned d = 3; d <= 9; ++d) {
    CHECK(r_of_degree(d) == oracle::r(oracle::single(d)));
    CHECK(n_of_degree(d).n_value_integer == ceil(oracle::n(oracle::single(d), r_of_degree(d))));
    CHECK(n_of_degree(d).n_value_integer == ceil(n_of_multidegree(MultiDegree{d}).n_value_exact));
  }
  // The level engine handles chains far beyond walking.
  for (unsigned d = 10; d <= 13; ++d) {
    const BoundReport rep = n_of_multidegree(MultiDegree{d});
    CHECK(rep.r_value == r_of_degree(d));
    CHECK(rep.n_value_exact == n_of_degree(d).n_value_exact);
  }
}

TEST_CASE("walk respects the chain cap") {
  ChainOptions tight{ChainLimits{1000}, ChainMethod::walk};
  CHECK_THROWS_AS(r_bound(MultiDegree{9}, tight), ResourceError);
  CHECK(r_bound(MultiDegree{9}, ChainOptions{ChainLimits{1000}, ChainMethod::levels}) == 6479);
}

TEST_CASE("bigger-n criteria") {
  const BiggerNCriteria a = bigger_n_criteria(MultiplicitySequence{0, 0, 1}, Integer(10));
  CHECK(a.large_dc);
  CHECK(a.diamond);
  const BiggerNCriteria b = bigger_n_criteria(MultiplicitySequence{5, 5}, Integer(2));
  CHECK_FALSE(b.large_dc);
  CHECK_FALSE(b.small_dc);
  CHECK_THROWS_AS(bigger_n_criteria(MultiplicitySequence{0, 0, 1}, Integer(1)), DomainError);
}

TEST_CASE("stepwise inequality along single-degree chains") {
  for (unsigned d = 3; d <= 9; ++d) {
    const Integer r = r_of_degree(d);
    const StepwiseResult walk = stepwise_check(MultiDegree{d}.multiplicities(), r, kWalk);
    const StepwiseResult levels = stepwise_check(MultiDegree{d}.multiplicities(), r, kLevels);
    CHECK(walk.holds);
    CHECK(levels.holds);
    CHECK(walk.steps == r + 1);
    CHECK(levels.steps == r + 1);
    CHECK(*walk.tightest_margin == *levels.tightest_margin);
  }
  // Direct evaluation of the stepwise values with the oracle for d = 8.
  const auto c = oracle::chain(oracle::single(8));
  const Integer r = r_of_degree(8);
  auto value = [&](std::size_t k) -> Rational {
    const Integer s = r - static_cast<long>(k);
    const oracle::Seq& mu = c[k];
    const bool base = s <= 0 || mu.size() <= 1 || (mu.size() == 2 && mu[1] == 1);
    return base ? oracle::n(mu, s) : oracle::n0(mu, s);
  };
  for (std::size_t k = 0; k + 1 < c.size() && static_cast<long>(k) <= r.get_si(); ++k) {
    CHECK(value(k) - value(k + 1) - 1 >= 0);
  }
}
