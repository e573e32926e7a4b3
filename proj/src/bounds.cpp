#include "penta/bounds.hpp"

#include "penta/chain_levels.hpp"
#include "penta/errors.hpp"
#include "penta/upoly.hpp"

#include <algorithm>

namespace penta {

Integer r0(const MultiplicitySequence& mu) {
  Integer s = -1;
  for (unsigned d = 2; d <= mu.top_degree(); ++d) s += mu[d] * (d - 1);
  return s;
}

Integer r0(const MultiDegree& d) { return r0(d.multiplicities()); }

Rational n0(const MultiplicitySequence& mu, const Integer& r) {
  if (r <= 0) throw DomainError("n0 needs r >= 1, got r = " + r.get_str());
  Integer sum = 0;
  for (unsigned d = 1; d <= mu.top_degree(); ++d) {
    const Integer m = mu[d];
    if (m != 0) sum += m * (binomial(r + d, d) - 1);
  }
  Rational out(sum, r);
  out.canonicalize();
  return out + Rational(r);
}

Rational n0(const MultiDegree& d, const Integer& r) { return n0(d.multiplicities(), r); }

bool is_linear_or_quadric(const MultiplicitySequence& mu) {
  return mu.top_degree() <= 1 || (mu.top_degree() == 2 && mu[2] == 1);
}

std::optional<Rational> n_base_case(const MultiplicitySequence& mu, const Integer& r) {
  if (r < -1) throw DomainError("n(d, r) needs r >= -1, got r = " + r.get_str());
  if (r == -1) return Rational(mu.count() - 1);
  if (r == 0) return Rational(mu.pointed_count());
  if (mu.top_degree() <= 1) return Rational(r + mu.count());
  if (mu.top_degree() == 2 && mu[2] == 1) return Rational(2 * r + mu.count() + 1);
  return std::nullopt;
}

namespace {

bool use_levels(const ChainOptions& options) { return options.method != ChainMethod::walk; }

Integer r_bound_walk(const MultiplicitySequence& mu, const ChainLimits& limits) {
  std::optional<Integer> best;
  walk_chain(mu, limits, [&best](std::uint64_t k, const MultiplicitySequence& cur) {
    Integer v = cur.empty() ? Integer(-2) : r0(cur);
    v += integer_from_ull(k);
    if (!best || v > *best) best = v;
    return true;
  });
  return *best;
}

// r0 of the k-th element of a level, plus its chain index.
RatPoly r_polynomial(const ChainLevel& level) {
  RatPoly p = RatPoly::linear(Rational(level.offset - 1));
  for (unsigned d = 2; d <= level.top_degree; ++d) p += level.entries[d - 1] * Rational(d - 1);
  return p;
}

Integer r_bound_levels(const MultiplicitySequence& mu) {
  const ChainStructure chain = chain_structure(mu);
  Integer best = chain.length - 3;  // the empty element
  if (chain.ones) best = std::max(best, Integer(chain.ones_offset - 1));
  for (const auto& level : chain.levels) {
    const IntegerExtrema e = integer_extrema(r_polynomial(level), 0, level.length - 1);
    best = std::max(best, to_integer(e.max, "r0 along a level"));
  }
  return best;
}

Rational n_bound_walk(const MultiplicitySequence& mu, const Integer& r, const ChainLimits& limits) {
  std::optional<Rational> best;
  walk_chain(mu, limits, [&](std::uint64_t k, const MultiplicitySequence& cur) {
    const Integer kk = integer_from_ull(k);
    const Integer s = r - kk;
    if (auto base = n_base_case(cur, s)) {
      const Rational v = *base + kk;
      if (!best || v > *best) best = v;
      return false;
    }
    const Rational v = n0(cur, s) + kk;
    if (!best || v > *best) best = v;
    return true;
  });
  return *best;
}

// s * n0 of the k-th element of a level at s = s0 - k, as a polynomial in k.
RatPoly scaled_n0_polynomial(const ChainLevel& level, const Integer& s0) {
  const RatPoly s = RatPoly{Rational(s0), Rational(-1)};
  RatPoly out = s * s;
  for (unsigned d = 1; d <= level.top_degree; ++d) {
    if (level.entries[d - 1].is_zero()) continue;
    RatPoly c = reflect_at(RatPoly::binomial(Integer(d), d), s0) - RatPoly::constant(1);
    out += level.entries[d - 1] * c;
  }
  return out;
}

// Last index of the level (relative) whose element is neither a base form nor at s <= 0.
Integer last_generic_index(const ChainLevel& level, const Integer& s0) {
  const Integer lim = level.top_degree == 2 ? level.length - 2 : level.length - 1;
  return std::min<Integer>(lim, s0 - 1);
}

Rational n_bound_levels(const MultiplicitySequence& mu, const Integer& r) {
  const ChainStructure chain = chain_structure(mu);
  std::optional<Rational> best;
  auto consider = [&best](const Rational& v) {
    if (!best || v > *best) best = v;
  };
  for (const auto& level : chain.levels) {
    const Integer s0 = r - level.offset;
    const Integer hi = last_generic_index(level, s0);
    if (hi >= 0) {
      const RatPoly n = scaled_n0_polynomial(level, s0);
      const RatPoly s = RatPoly{Rational(s0), Rational(-1)};
      const RatPoly step = s * n.shifted(1) - (s - RatPoly::constant(1)) * n +
                           s * (s - RatPoly::constant(1));
      auto value = [&](const Integer& k) -> Rational {
        return n(k) / Rational(s0 - k) + Rational(level.offset + k);
      };
      consider(integer_extrema(value, step, 0, hi).max);
    }
    if (hi < level.length - 1) {
      const Integer k = std::max<Integer>(hi + 1, 0);
      consider(*n_base_case(level.at(k), s0 - k) + Rational(level.offset + k));
      return *best;
    }
  }
  const Integer k = chain.ones ? chain.ones_offset : chain.length - 1;
  const MultiplicitySequence last =
      chain.ones ? MultiplicitySequence(std::vector<Integer>{*chain.ones}) : MultiplicitySequence();
  consider(*n_base_case(last, r - k) + Rational(k));
  return *best;
}

}  // namespace

Integer r_bound(const MultiplicitySequence& mu, const ChainOptions& options) {
  return use_levels(options) ? r_bound_levels(mu) : r_bound_walk(mu, options.limits);
}

Integer r_bound(const MultiDegree& d, const ChainOptions& options) {
  return r_bound(d.multiplicities(), options);
}

Rational n_bound(const MultiplicitySequence& mu, const Integer& r, const ChainOptions& options) {
  if (r < -1) throw DomainError("n(d, r) needs r >= -1, got r = " + r.get_str());
  return use_levels(options) ? n_bound_levels(mu, r) : n_bound_walk(mu, r, options.limits);
}

Rational n_bound(const MultiDegree& d, const Integer& r, const ChainOptions& options) {
  return n_bound(d.multiplicities(), r, options);
}

BoundReport n_of_multidegree(const MultiDegree& d, const ChainOptions& options) {
  BoundReport out;
  out.multidegree = d;
  out.r_value = r_bound(d, options);
  out.chain_length = chain_length(d.multiplicities());
  // r(d) >= -2 always; n(d, -2) is undefined, which only happens for the empty multi-degree.
  if (out.r_value < -1) {
    out.n_value_exact = Rational(-1);
  } else {
    out.n_value_exact = n_bound(d, out.r_value, options);
  }
  out.n_value_integer = ceil(out.n_value_exact);
  if (out.r_value >= 1) out.n0_at_r = n0(d, out.r_value);
  return out;
}

MTable m_table(unsigned i_max, unsigned j_max, Exec exec) {
  MTable table;
  const unsigned width = i_max + j_max + 1;
  std::vector<Integer> row(width, Integer(0));
  row[0] = 1;
  table.rows.push_back(std::vector<Integer>(row.begin(), row.begin() + j_max + 1));
  for (unsigned i = 0; i < i_max; ++i) {
    const Integer m = row[0];
    const unsigned cols = width - i - 1;  // columns needed in row i + 1
    // rising[n] = C(m + n - 1, n)
    std::vector<Integer> rising(cols + 1);
    rising[0] = 1;
    for (unsigned n = 1; n <= cols; ++n) {
      rising[n] = rising[n - 1] * (m + n - 1);
      mpz_divexact_ui(rising[n].get_mpz_t(), rising[n].get_mpz_t(), n);
    }
    std::vector<Integer> next(cols);
    bool divisible = true;
    next[0] = (m * m - m) / 2 + row[1];
    const long ncols = static_cast<long>(cols);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel) reduction(&& : divisible)
    for (long jj = 1; jj < ncols; ++jj) {
      const unsigned j = static_cast<unsigned>(jj);
      Integer lead = rising[j] * (m * m + (j - 1) * m + 2);
      if (!mpz_divisible_ui_p(lead.get_mpz_t(), j + 2)) divisible = false;
      mpz_divexact_ui(lead.get_mpz_t(), lead.get_mpz_t(), j + 2);
      for (unsigned k = 0; k <= j; ++k) lead += rising[j - k] * row[k + 1];
      next[j] = std::move(lead);
    }
    if (!divisible) throw VerificationFailure("non-integral term in the m-table recursion");
    row = std::move(next);
    table.rows.push_back(std::vector<Integer>(row.begin(), row.begin() + j_max + 1));
  }
  return table;
}

std::vector<Integer> m_sequence(unsigned i_max, Exec exec) {
  const MTable t = m_table(i_max, 0, exec);
  std::vector<Integer> out;
  for (const auto& row : t.rows) out.push_back(row[0]);
  return out;
}

Integer r_of_degree(unsigned d) {
  if (d < 3) throw DomainError("single-degree formulas need d >= 3");
  Integer s = 0;
  for (const auto& m : m_sequence(d - 2, Exec::serial)) s += m;
  return s;
}

BoundReport n_of_degree(unsigned d) {
  BoundReport out;
  out.multidegree = MultiDegree{d};
  out.r_value = r_of_degree(d);
  out.n_value_exact = n0(out.multidegree, out.r_value);
  out.n_value_integer = ceil(out.n_value_exact);
  out.chain_length = chain_length(out.multidegree.multiplicities());
  out.n0_at_r = out.n_value_exact;
  return out;
}

BiggerNCriteria bigger_n_criteria(const MultiplicitySequence& mu, const Integer& r) {
  if (r < 2) throw DomainError("the criteria need r >= 2");
  if (mu.empty()) throw DomainError("the criteria need a nonempty multiplicity sequence");
  const unsigned dc = mu.top_degree();
  BiggerNCriteria out;
  out.large_dc = mu.max_entry() <= r - 2 * dc - 1;
  if (dc <= 4) {
    const Integer m2 = mu[2], m3 = mu[3], m4 = mu[4];
    const Integer poly = -(12 * m2 + 28 * m3 + 46 * m4) + (12 * m2 + 24 * m3 + 35 * m4) * r +
                         (4 * m3 + 10 * m4) * r * r + m4 * r * r * r;
    Integer fact = 1;
    for (unsigned k = 2; k <= dc; ++k) fact *= k;
    // fact / 24 * poly <= r^dc
    out.small_dc = fact * poly <= 24 * ipow(r, dc);
  }
  Integer lhs = 0;
  for (unsigned d = 1; d <= dc; ++d) lhs += mu[d] * (binomial(r + d, d) - r * d - 1);
  const Integer rhs = r * (binomial(r + dc - 1, dc) + binomial(r + dc - 2, dc - 1) - 2);
  out.diamond = lhs <= rhs;
  return out;
}

namespace {

// Chain elements addressed by index, with V(k) as in StepwiseResult.
class ChainValues {
 public:
  ChainValues(const MultiplicitySequence& mu, const Integer& r) : chain_(chain_structure(mu)), r_(r) {}

  const ChainStructure& chain() const { return chain_; }

  MultiplicitySequence element(const Integer& k) const {
    for (const auto& level : chain_.levels) {
      if (k < level.offset + level.length) return level.at(k - level.offset);
    }
    if (chain_.ones && k == chain_.ones_offset) {
      return MultiplicitySequence(std::vector<Integer>{*chain_.ones});
    }
    return {};
  }

  Rational value(const Integer& k) const {
    const MultiplicitySequence mu = element(k);
    const Integer s = r_ - k;
    if (auto base = n_base_case(mu, s)) return *base;
    return n0(mu, s);
  }

 private:
  ChainStructure chain_;
  Integer r_;
};

void record_margin(StepwiseResult& out, const Integer& k, const Rational& margin, bool counted = true) {
  if (!out.tightest_margin || margin < *out.tightest_margin) {
    out.tightest_margin = margin;
    out.tightest_at = k;
  }
  if (counted) ++out.explicit_steps;
  if (margin < 0 && out.holds) {
    out.holds = false;
    out.failure = k;
  }
}

StepwiseResult stepwise_walk(const MultiplicitySequence& mu, const Integer& r, const ChainLimits& limits) {
  StepwiseResult out;
  std::optional<Rational> prev;
  walk_chain(mu, limits, [&](std::uint64_t k, const MultiplicitySequence& cur) {
    const Integer kk = integer_from_ull(k);
    const Integer s = r - kk;
    if (s < -1) return false;
    const auto base = n_base_case(cur, s);
    const Rational v = base ? *base : n0(cur, s);
    if (prev) {
      record_margin(out, kk - 1, *prev - v - 1);
      out.steps += 1;
    }
    prev = v;
    return true;
  });
  return out;
}

StepwiseResult stepwise_levels(const MultiplicitySequence& mu, const Integer& r) {
  StepwiseResult out;
  const ChainValues values(mu, r);
  const ChainStructure& chain = values.chain();
  const Integer last = std::min<Integer>(chain.length - 1, r + 1);
  Integer k = 0;
  std::size_t level_index = 0;
  while (k < last) {
    while (level_index < chain.levels.size() &&
           k >= chain.levels[level_index].offset + chain.levels[level_index].length) {
      ++level_index;
    }
    if (level_index < chain.levels.size()) {
      const ChainLevel& level = chain.levels[level_index];
      const Integer s0 = r - level.offset;
      const Integer hi = std::min<Integer>(last_generic_index(level, s0), last - level.offset);
      const Integer local = k - level.offset;
      if (local <= hi - 1) {
        // Both ends of every step in [local, hi - 1] are generic: check the cleared form.
        const RatPoly n = scaled_n0_polynomial(level, s0);
        const RatPoly s = RatPoly{Rational(s0), Rational(-1)};
        const RatPoly one = RatPoly::constant(1);
        const RatPoly h = (s - one) * n - s * n.shifted(1) - s * (s - one);
        const IntegerExtrema e = integer_extrema(h, local, hi - 1);
        if (e.min < 0 && out.holds) {
          out.holds = false;
          out.failure = level.offset + e.argmin;
        }
        const Integer at = level.offset + e.argmin;
        record_margin(out, at, values.value(at) - values.value(at + 1) - 1, false);
        out.steps += hi - local;
        k = level.offset + hi;
        continue;
      }
    }
    record_margin(out, k, values.value(k) - values.value(k + 1) - 1);
    out.steps += 1;
    k += 1;
  }
  return out;
}

}  // namespace

StepwiseResult stepwise_check(const MultiplicitySequence& mu, const Integer& r, const ChainOptions& options) {
  if (r < 0) throw DomainError("the stepwise check needs r >= 0");
  return use_levels(options) ? stepwise_levels(mu, r) : stepwise_walk(mu, r, options.limits);
}

}  // namespace penta
