#pragma once

#include "penta/bounds.hpp"
#include "penta/exec.hpp"
#include "penta/interval.hpp"

#include <string>
#include <vector>

namespace penta {

struct CheckReport {
  std::string check_id;
  std::string scope;
  Verdict status = Verdict::verified;
  // Counterexamples when FAILED; otherwise the tightest margins and notable values.
  std::vector<std::string> witnesses;
  long precision_used = 0;  // bits; 0 when every comparison was exact
  std::size_t comparisons = 0;
};

struct PrecisionPolicy {
  long start = kDefaultPrecision;
  long cap = kDefaultPrecisionCap;
};

// Parameter ranges of every check; the defaults are the full suite.
struct VerifyScope {
  unsigned bigger_r_max_parts = 4;
  unsigned bigger_r_max_entry = 4;
  unsigned bigger_r_max_dc = 6;
  unsigned compute_r_max_sum = 14;
  unsigned compute_r_max_degree = 14;
  unsigned mij_mu_d_max = 9;
  unsigned rows_i_max = 10;
  unsigned rows_j_max = 6;
  unsigned delta_i_max = 5;
  unsigned lower_i_max = 12;
  unsigned positive_i_max = 8;
  unsigned mij_i_max = 10;
  unsigned mij_j_max = 6;
  unsigned m_i_max = 12;
  unsigned bigger_n_max_parts = 4;
  unsigned bigger_n_max_entry = 4;
  unsigned bigger_n_r_max = 30;
  unsigned generic_ci_max_sum = 12;
  unsigned generic_ci_r_max = 20;
  unsigned overlaps_c_max = 6;
  unsigned overlaps_r_max = 10;
  std::vector<unsigned> stepwise_walk_degrees{8, 9};
  unsigned stepwise_recursion_d_max = 9;
  unsigned stepwise_levels_d_min = 8;
  unsigned stepwise_levels_d_max = 12;
  unsigned segments_d_min = 8;
  unsigned segments_d_max = 12;
  unsigned main_estimate_d_max = 14;
  PrecisionPolicy precision;
  ChainLimits limits;

  // Applies "key=value" settings separated by commas; throws ParseError on unknown keys.
  void apply(const std::string& settings);
  static std::vector<std::string> keys();
};

CheckReport check_bigger_r(unsigned max_parts, unsigned max_entry, unsigned max_dc);
CheckReport check_compute_r(unsigned max_sum, unsigned max_degree, const ChainLimits& limits = {});
CheckReport check_mij_and_mu(unsigned d_max, const ChainLimits& limits = {});
CheckReport check_compute_rij(unsigned i_max, unsigned j_max, Exec exec = Exec::parallel);
CheckReport check_advance_vs_delta(unsigned i_max);
CheckReport check_lower_bound(unsigned i_max);
CheckReport check_positive_expression(unsigned i_max);
CheckReport check_bounds_mij(unsigned i_max, unsigned j_max, const PrecisionPolicy& precision = {});
CheckReport check_bounds_m_and_sum(unsigned i_max, const PrecisionPolicy& precision = {});
CheckReport check_bigger_n(unsigned max_parts, unsigned max_entry, unsigned r_max);
CheckReport check_generic_ci_inequality(unsigned max_sum, unsigned r_max);
CheckReport check_base_case_overlaps(unsigned c_max, unsigned r_max);
// The stepwise inequality along the full chain by walking it, for each listed degree; also
// checks that the recursive n(d, r(d)) equals ceil(n0(d, r(d))) for 3 <= d <= recursion_d_max.
CheckReport check_stepwise_n(const std::vector<unsigned>& degrees, unsigned recursion_d_max,
                             const ChainLimits& limits = {});
// The same inequality via polynomial levels, for chains too long to walk.
CheckReport check_stepwise_n_levels(unsigned d_min, unsigned d_max);
// The intermediate inequalities used to split the chain into three ranges.
CheckReport check_stepwise_n_segments(unsigned d_min, unsigned d_max, const PrecisionPolicy& precision = {});
CheckReport check_main_estimate(unsigned d_max);

std::vector<std::string> check_ids();
// Runs one check by id with the scope's parameters; throws PreconditionError on unknown ids.
CheckReport run_check(const std::string& id, const VerifyScope& scope);
// All checks, ordered by check_ids() regardless of completion order.
std::vector<CheckReport> run_all(const VerifyScope& scope, Exec exec = Exec::parallel);

bool any_failed(const std::vector<CheckReport>& reports);

}  // namespace penta
