#include "doctest.h"
#include "oracles.hpp"

#include "penta/chain_levels.hpp"
#include "penta/errors.hpp"
#include "penta/multidegree.hpp"

#include <functional>

using namespace penta;

namespace {

MultiplicitySequence from_seq(const oracle::Seq& s) {
  std::vector<Integer> z;
  for (long v : s) z.emplace_back(v);
  return MultiplicitySequence(z);
}

// Every multiplicity sequence with degree sum at most max_sum.
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

}  // namespace

TEST_CASE("multi-degree and multiplicity conversions") {
  const MultiDegree d{2, 3, 3, 5};
  CHECK(d.multiplicities() == MultiplicitySequence{0, 1, 2, 0, 1});
  CHECK(d.to_string() == "[2,3,3,5]");
  CHECK(d.degrees() == std::vector<unsigned>{2, 3, 3, 5});
  CHECK(from_multiplicity(to_multiplicity(d)) == d);
  CHECK(MultiDegree::parse(" [ 5, 2 ,3,3]") == d);
  CHECK(MultiDegree::parse("[1^3,2]") == MultiDegree{1, 1, 1, 2});
  CHECK(MultiDegree::parse("[]").empty());
  CHECK(d.size() == 4);
  CHECK(d.max_degree() == 5);
  CHECK_THROWS_AS(MultiDegree::parse("2,3"), ParseError);
  CHECK_THROWS_AS(MultiDegree::parse("[2,x]"), ParseError);
  CHECK_THROWS_AS(MultiplicitySequence({1, -1}), DomainError);
  CHECK(MultiplicitySequence{0, 1, 0, 0}.top_degree() == 2);
}

TEST_CASE("derived multi-degree on small examples") {
  // (d) -> (d - 2, ..., 1): lines meeting a hypersurface to order d - 1 at a point.
  for (unsigned d = 2; d <= 12; ++d) {
    std::vector<unsigned> expected;
    for (unsigned e = 1; e + 2 <= d; ++e) expected.push_back(e);
    CHECK(derived_multidegree(MultiDegree{d}).degrees() == expected);
  }
  CHECK(derived_multidegree(MultiDegree{2, 3}) == MultiDegree{1, 1, 2});
  CHECK(derived_multidegree(MultiDegree{1, 1, 1}).empty());
  CHECK(derived_multiplicity(MultiplicitySequence{1, 1, 1}) == MultiplicitySequence{3, 1});
  CHECK(derived_multidegree(MultiDegree{1, 1, 2}) == MultiDegree{1, 1});
  CHECK(pointed_lines_multidegree(MultiDegree{2, 3}) == MultiDegree{1, 1, 2, 2, 3});
  CHECK(MultiplicitySequence{0, 1, 2}.pointed_count() == 8);
}

TEST_CASE("derived multiplicities agree with the direct construction") {
  std::size_t seen = 0;
  partitions(20, [&](const oracle::Seq& s) {
    ++seen;
    const MultiplicitySequence mu = from_seq(s);
    CHECK(mu.derived() == from_seq(oracle::derived(s)));
    // On degree lists: drop one copy of d_c and d_c - 1 from the pointed-lines multi-degree.
    if (!s.empty()) {
      const MultiDegree d = from_multiplicity(mu);
      std::vector<unsigned> pointed = pointed_lines_multidegree(d).degrees();
      const unsigned top = d.max_degree();
      for (unsigned drop : {top, top - 1}) {
        auto it = std::find(pointed.begin(), pointed.end(), drop);
        if (drop > 0 && it != pointed.end()) pointed.erase(it);
      }
      if (top <= 1) pointed.clear();
      CHECK(derived_multidegree(d) == MultiDegree(pointed));
    }
  });
  CHECK(seen == 2714);  // partitions of 0..20
}

TEST_CASE("chains end at the empty multi-degree") {
  CHECK(interval_chain(MultiDegree{3}) == std::vector<MultiDegree>{MultiDegree{3}, MultiDegree{1}, MultiDegree{}});
  CHECK(interval_chain(MultiDegree{}).size() == 1);
  const auto c = interval_chain(MultiDegree{4});
  CHECK(c.size() == 4);
  CHECK(c[1] == MultiDegree{1, 2});
  ChainLimits tight;
  tight.max_elements = 10;
  CHECK_THROWS_AS(interval_chain(MultiDegree{7}, tight), ResourceError);
  std::uint64_t visited = walk_chain(MultiDegree{5}.multiplicities(), {}, [](std::uint64_t k, const MultiplicitySequence&) {
    return k < 2;
  });
  CHECK(visited == 3);
}

TEST_CASE("level structure reproduces walked chains") {
  partitions(13, [&](const oracle::Seq& s) {
    const MultiplicitySequence mu = from_seq(s);
    const auto walked = oracle::chain(s, 20000);
    if (!walked.back().empty()) return;
    CHECK(chain_length(mu) == static_cast<long>(walked.size()));
    const ChainStructure structure = chain_structure(mu);
    for (const auto& level : structure.levels) {
      for (Integer k = 0; k < level.length; k += 1) {
        const std::size_t index = Integer(level.offset + k).get_ui();
        CHECK(level.at(k) == from_seq(walked[index]));
        CHECK(walked[index].size() == level.top_degree);
      }
    }
    if (structure.ones) {
      CHECK(walked[structure.ones_offset.get_ui()] == oracle::Seq{structure.ones->get_si()});
    }
  });
}

TEST_CASE("chain of a single degree") {
  // Elements of (9): 6481 in total.
  CHECK(chain_length(MultiDegree{9}.multiplicities()) == 6481);
  CHECK(chain_length(MultiDegree{8}.multiplicities()) == 122);
  CHECK(oracle::chain(oracle::single(8)).size() == 122);
  CHECK(chain_length(MultiDegree{10}.multiplicities()) == 20707022);
}

TEST_CASE("reflection of a polynomial") {
  const RatPoly p{1, -3, 2};
  for (int s = -4; s <= 6; ++s) {
    const RatPoly q = reflect_at(p, Integer(s));
    for (int k = -5; k <= 5; ++k) CHECK(q(Integer(k)) == p(Integer(s - k)));
  }
}
