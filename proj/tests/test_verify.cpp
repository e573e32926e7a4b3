#include "doctest.h"

#include "penta/bounds.hpp"
#include "penta/errors.hpp"
#include "penta/verify.hpp"

#include <algorithm>

using namespace penta;

namespace {

bool mentions(const CheckReport& r, const std::string& text) {
  return std::any_of(r.witnesses.begin(), r.witnesses.end(),
                     [&](const std::string& w) { return w.find(text) != std::string::npos; });
}

const std::vector<CheckReport>& default_suite() {
  static const std::vector<CheckReport> reports = run_all(VerifyScope{});
  return reports;
}

const CheckReport& report(const std::string& id) {
  for (const auto& r : default_suite())
    if (r.check_id == id) return r;
  throw std::logic_error("missing report " + id);
}

}  // namespace

TEST_CASE("the default suite verifies every check in id order") {
  const auto& reports = default_suite();
  const auto ids = check_ids();
  REQUIRE(reports.size() == ids.size());
  CHECK(ids.size() == 16);
  for (std::size_t k = 0; k < ids.size(); ++k) {
    CAPTURE(ids[k]);
    CHECK(reports[k].check_id == ids[k]);
    CHECK(reports[k].status == Verdict::verified);
    CHECK(reports[k].comparisons > 0);
    CHECK_FALSE(reports[k].scope.empty());
  }
  CHECK_FALSE(any_failed(reports));
}

TEST_CASE("exceptional families of the r0 comparison") {
  // (0,0,1): r0 = 1 and its derived sequence (1) gives 0 < 1.
  const MultiplicitySequence cubic{0, 0, 1};
  CHECK(cubic.derived() == MultiplicitySequence{1});
  CHECK(r0(cubic.derived()) + 1 < r0(cubic));
  // A single quintic: (1,1,1) gives 3, not below 3.
  const MultiplicitySequence quintic{0, 0, 0, 0, 1};
  CHECK(quintic.derived() == MultiplicitySequence{1, 1, 1});
  CHECK_FALSE(r0(quintic.derived()) + 1 < r0(quintic));
  const CheckReport& r = report("bigger_r");
  CHECK(mentions(r, "(a,b,1): 25"));
  CHECK(mentions(r, "(a,b,0,1): 25"));
}

TEST_CASE("rows of the m table appear along the single-degree chain") {
  const MTable t = m_table(4, 4);
  // d = 4, i = 1: after m_0 = 1 step the chain is at (1,1,0) read from the top.
  const MultiplicitySequence step = MultiplicitySequence{0, 0, 0, 1}.derived();
  CHECK(step[3] == t.at(1, 0));
  CHECK(step[2] == t.at(1, 1));
  CHECK(step[1] == t.at(1, 2));
  CHECK(check_mij_and_mu(5).status == Verdict::verified);
}

TEST_CASE("published anchors in the witnesses") {
  CHECK(mentions(report("lower_bound"), "i = 5: 121 < 206"));
  CHECK(mentions(report("bounds_m_and_sum"), "m_0 + ... + m_6 = 120 <= 256"));
  CHECK(mentions(report("stepwise_n"), "d = 8: 121 steps over 122 chain elements"));
  CHECK(mentions(report("stepwise_n"), "d = 9: 6480 steps over 6481 chain elements"));
  CHECK(mentions(report("bounds_mij"), "0.34595533"));
  CHECK(mentions(report("bounds_mij"), "0.13143071"));
  CHECK(mentions(report("bounds_mij"), "0.0016804554"));
  CHECK(mentions(report("bounds_mij"), "0.21743087"));
  CHECK(mentions(report("generic_ci_inequality"), "(1) at r = 2"));
  CHECK(report("bounds_mij").precision_used >= kDefaultPrecision);
  CHECK(report("lower_bound").precision_used == 0);
  // n(10) sits a bit below 2^197.
  const Integer n10 = n_of_degree(10).n_value_integer;
  Integer two197 = 1;
  two197 <<= 197;
  CHECK(n10 < two197);
  CHECK(n10 * 2 > two197);
}

TEST_CASE("checks are deterministic and stable under more precision") {
  const CheckReport a = check_bounds_mij(9, 4);
  const CheckReport b = check_bounds_mij(9, 4);
  CHECK(a.witnesses == b.witnesses);
  CHECK(a.comparisons == b.comparisons);
  const CheckReport fine = check_bounds_mij(9, 4, PrecisionPolicy{1024, 4096});
  CHECK(fine.status == Verdict::verified);
  CHECK(fine.precision_used >= 1024);
  CHECK(check_bounds_m_and_sum(10, PrecisionPolicy{512, 4096}).status == Verdict::verified);
}

TEST_CASE("a tiny precision cap makes analytic checks inconclusive, never failed") {
  const CheckReport r = check_bounds_mij(8, 2, PrecisionPolicy{4, 8});
  CHECK(r.status != Verdict::refuted);
}

TEST_CASE("serial and parallel runs agree") {
  VerifyScope small;
  small.apply("bigger_r.max_dc=4,bigger_n.r_max=8,compute_r.max_sum=10,stepwise_n.degrees=7/8");
  small.apply("stepwise_n_levels.d_max=10,stepwise_n_segments.d_max=10,main_estimate.d_max=10");
  const auto par = run_all(small, Exec::parallel);
  const auto ser = run_all(small, Exec::serial);
  REQUIRE(par.size() == ser.size());
  for (std::size_t k = 0; k < par.size(); ++k) {
    CHECK(par[k].check_id == ser[k].check_id);
    CHECK(par[k].status == ser[k].status);
    CHECK(par[k].witnesses == ser[k].witnesses);
    CHECK(par[k].status == Verdict::verified);
  }
}

TEST_CASE("scope settings") {
  VerifyScope s;
  s.apply("bigger_r.max_parts=3, lower_bound.i_max=9");
  CHECK(s.bigger_r_max_parts == 3);
  CHECK(s.lower_i_max == 9);
  s.apply("stepwise_n.degrees=5/6/7");
  CHECK(s.stepwise_walk_degrees == std::vector<unsigned>{5, 6, 7});
  s.apply("");
  CHECK(s.lower_i_max == 9);
  CHECK_THROWS_AS(s.apply("nonsense=1"), ParseError);
  CHECK_THROWS_AS(s.apply("lower_bound.i_max=abc"), ParseError);
  CHECK_THROWS_AS(s.apply("lower_bound.i_max"), ParseError);
  CHECK_THROWS_AS(s.apply("lower_bound.i_max=-3"), ParseError);
  const auto keys = VerifyScope::keys();
  CHECK(std::find(keys.begin(), keys.end(), "bounds_mij.j_max") != keys.end());
  CHECK_THROWS_AS(run_check("no_such_check", s), PreconditionError);
  CHECK(run_check("lower_bound", s).scope == "i_max=9");
}
