#pragma once

#include "penta/exec.hpp"
#include "penta/integer.hpp"
#include "penta/multidegree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace penta {

// sum (d - 1) over the entries, minus one; -1 on the empty multi-degree.
Integer r0(const MultiplicitySequence& mu);
Integer r0(const MultiDegree& d);

// r + (1/r) sum [C(d + r, r) - 1]. Throws DomainError for r <= 0.
Rational n0(const MultiplicitySequence& mu, const Integer& r);
Rational n0(const MultiDegree& d, const Integer& r);

// 1^c (including the empty multi-degree) or 1^{c-1}2.
bool is_linear_or_quadric(const MultiplicitySequence& mu);

// Closed-form value of n(mu, r) when (mu, r) is a base case, nullopt otherwise.
// For r >= 1 the all-ones and single-quadric forms apply; r = -1 and r = 0 use the counts.
// Throws DomainError for r < -1.
std::optional<Rational> n_base_case(const MultiplicitySequence& mu, const Integer& r);

enum class ChainMethod {
  automatic,  // levels
  walk,       // element by element, bounded by ChainLimits
  levels,     // polynomial levels with exact integer extrema
};

struct ChainOptions {
  ChainLimits limits;
  ChainMethod method = ChainMethod::automatic;
};

// max over chain positions k of r0(d^(k)) + k, with -2 for the empty element.
Integer r_bound(const MultiplicitySequence& mu, const ChainOptions& options = {});
Integer r_bound(const MultiDegree& d, const ChainOptions& options = {});

// n(d, r) for r >= -1, unrolled along the chain until the first base case.
Rational n_bound(const MultiplicitySequence& mu, const Integer& r, const ChainOptions& options = {});
Rational n_bound(const MultiDegree& d, const Integer& r, const ChainOptions& options = {});

struct BoundReport {
  MultiDegree multidegree;
  Integer r_value;
  Rational n_value_exact;
  Integer n_value_integer;
  Integer chain_length;
  // n0(d, r(d)) when r(d) >= 1; reported alongside the recursion, not assumed equal to it.
  std::optional<Rational> n0_at_r;
};

BoundReport n_of_multidegree(const MultiDegree& d, const ChainOptions& options = {});

// rows[i][j] = m_{i,j} for 0 <= i <= i_max, 0 <= j <= j_max.
struct MTable {
  enum class Source { recursion, series };
  std::vector<std::vector<Integer>> rows;
  Source source = Source::recursion;

  unsigned i_max() const { return rows.empty() ? 0 : static_cast<unsigned>(rows.size() - 1); }
  unsigned j_max() const { return rows.empty() ? 0 : static_cast<unsigned>(rows[0].size() - 1); }
  const Integer& at(unsigned i, unsigned j) const { return rows.at(i).at(j); }
  const Integer& m(unsigned i) const { return rows.at(i).at(0); }
};

MTable m_table(unsigned i_max, unsigned j_max, Exec exec = Exec::parallel);

// m_0, ..., m_{i_max} only.
std::vector<Integer> m_sequence(unsigned i_max, Exec exec = Exec::parallel);

// m_0 + ... + m_{d-2}. Requires d >= 3.
Integer r_of_degree(unsigned d);
// ceil(n0(d, r(d))) with the exact value and chain length filled in.
BoundReport n_of_degree(unsigned d);

struct BiggerNCriteria {
  bool large_dc = false;
  bool small_dc = false;
  bool diamond = false;
};

// Requires r >= 2.
BiggerNCriteria bigger_n_criteria(const MultiplicitySequence& mu, const Integer& r);

// The stepwise inequality V(k+1) + 1 <= V(k) along the chain, where V(k) is n0 of the k-th
// element at r - k, or the base-case value where one applies.
struct StepwiseResult {
  bool holds = true;
  Integer steps;                   // number of consecutive pairs checked
  std::optional<Integer> failure;  // first failing k
  // min of V(k) - V(k+1) - 1 over the steps evaluated one by one
  std::optional<Rational> tightest_margin;
  Integer tightest_at;
  std::size_t explicit_steps = 0;  // steps evaluated one by one
};

// Checks steps k = 0 .. min(length - 2, r). Requires r >= 0.
StepwiseResult stepwise_check(const MultiplicitySequence& mu, const Integer& r,
                              const ChainOptions& options = {});

}  // namespace penta
