#include "penta/verify.hpp"

#include "penta/chain_levels.hpp"
#include "penta/errors.hpp"
#include "penta/series.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace penta {

namespace {

constexpr std::size_t kMaxWitnesses = 24;

class Tally {
 public:
  Tally(std::string id, std::string scope) {
    report_.check_id = std::move(id);
    report_.scope = std::move(scope);
  }

  bool exact(bool ok, const std::string& what) {
    ++report_.comparisons;
    if (!ok) fail(what);
    return ok;
  }

  Verdict certified(const std::string& what, const std::function<Verdict(long)>& at, const PrecisionPolicy& p) {
    ++report_.comparisons;
    const Certificate c = certify(at, p.start, p.cap);
    report_.precision_used = std::max(report_.precision_used, c.precision);
    if (c.verdict == Verdict::refuted) fail(what);
    if (c.verdict == Verdict::inconclusive) {
      inconclusive_ = true;
      add("INCONCLUSIVE at " + std::to_string(c.precision) + " bits: " + what);
    }
    return c.verdict;
  }

  void note(const std::string& text) { add(text); }

  void fail(const std::string& what) {
    failed_ = true;
    add("counterexample: " + what);
  }

  CheckReport finish() {
    report_.status = failed_ ? Verdict::refuted : inconclusive_ ? Verdict::inconclusive : Verdict::verified;
    if (dropped_ > 0) report_.witnesses.push_back("(" + std::to_string(dropped_) + " further entries omitted)");
    return std::move(report_);
  }

 private:
  void add(const std::string& text) {
    if (report_.witnesses.size() < kMaxWitnesses) {
      report_.witnesses.push_back(text);
    } else {
      ++dropped_;
    }
  }

  CheckReport report_;
  bool failed_ = false;
  bool inconclusive_ = false;
  std::size_t dropped_ = 0;
};

std::string str(const Integer& z) { return z.get_str(); }
std::string str(const Rational& q) { return to_string(q); }
std::string str(unsigned v) { return std::to_string(v); }
template <typename T, typename U>
std::string str(const __gmp_expr<T, U>& e) {
  return str(__gmp_expr<T, T>(e));
}

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::string scope_text(std::initializer_list<std::pair<const char*, std::string>> items) {
  std::string s;
  for (const auto& [k, v] : items) {
    if (!s.empty()) s += ", ";
    s += std::string(k) + "=" + v;
  }
  return s;
}

// Calls visit on every multiplicity sequence with top degree in [1, max_dc], the top entry
// in [1, max_entry], other entries in [0, max_entry], and at most max_parts nonzero entries.
void for_each_bounded_sequence(unsigned max_parts, unsigned max_entry, unsigned max_dc,
                               const std::function<void(const MultiplicitySequence&)>& visit) {
  for (unsigned dc = 1; dc <= max_dc; ++dc) {
    std::vector<unsigned> mu(dc, 0);
    mu[dc - 1] = 1;
    while (true) {
      unsigned parts = 0;
      for (unsigned v : mu) parts += v != 0;
      if (parts <= max_parts) {
        std::vector<Integer> z(mu.begin(), mu.end());
        visit(MultiplicitySequence(std::move(z)));
      }
      unsigned pos = 0;
      while (pos < dc) {
        if (mu[pos] < max_entry) {
          ++mu[pos];
          break;
        }
        mu[pos] = pos == dc - 1 ? 1 : 0;
        ++pos;
      }
      if (pos == dc) break;
    }
  }
}

// Every multi-degree with degree sum at most max_sum, including the empty one.
void for_each_multidegree(unsigned max_sum, const std::function<void(const MultiplicitySequence&)>& visit) {
  std::vector<Integer> mu;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    visit(MultiplicitySequence(mu));
    for (unsigned d = std::min(remaining, max_part); d >= 1; --d) {
      if (mu.size() < d) mu.resize(d);
      mu[d - 1] += 1;
      rec(remaining - d, d);
      mu[d - 1] -= 1;
    }
  };
  rec(max_sum, max_sum);
}

MultiplicitySequence single_degree(unsigned d) {
  std::vector<Integer> mu(d);
  mu[d - 1] = 1;
  return MultiplicitySequence(std::move(mu));
}

Interval iv(const Integer& z, long p) { return Interval::exact(z, p); }
Interval iv(const Rational& q, long p) { return Interval::exact(q, p); }
template <typename T, typename U>
Interval iv(const __gmp_expr<T, U>& e, long p) {
  return iv(__gmp_expr<T, T>(e), p);
}

// C(m + j - 1, j) / m^j
Rational b_coefficient(const Integer& m, unsigned j) {
  Rational q(binomial(m + (j - 1), j), ipow(m, j));
  q.canonicalize();
  return q;
}

}  // namespace

CheckReport check_bigger_r(unsigned max_parts, unsigned max_entry, unsigned max_dc) {
  Tally t("bigger_r", scope_text({{"max_parts", str(max_parts)}, {"max_entry", str(max_entry)}, {"max_dc", str(max_dc)}}));
  unsigned family3 = 0, family4 = 0;
  std::size_t cases = 0;
  for_each_bounded_sequence(max_parts, max_entry, max_dc, [&](const MultiplicitySequence& mu) {
    ++cases;
    const unsigned dc = mu.top_degree();
    const MultiplicitySequence derived = mu.derived();
    const bool grows = r0(derived) + 1 < r0(mu);
    const bool exceptional = (dc == 3 && mu[3] == 1) || (dc == 4 && mu[3] == 0 && mu[4] == 1);
    if (exceptional && dc == 3) ++family3;
    if (exceptional && dc == 4) ++family4;
    t.exact(grows == exceptional, cat(mu.to_string(), ": r0 grows = ", grows, ", exceptional = ", exceptional));
    if (dc >= 2) {
      Integer correction = 0;
      for (unsigned d = 1; d <= dc; ++d) correction += mu[d] * binomial(Integer(d - 1), 2);
      const Integer predicted = r0(mu) + correction - 2 * dc + 3;
      t.exact(r0(derived) == predicted,
              cat(mu.to_string(), ": r0(mu') = ", str(r0(derived)), " but the identity gives ", str(predicted)));
    }
  });
  t.exact(family3 >= 2 && family4 >= 2,
          cat("region holds ", family3, " and ", family4, " members of the two exceptional families"));
  t.note(cat(cases, " sequences; exceptional families (a,b,1): ", family3, ", (a,b,0,1): ", family4));
  t.note("the r0 identity is checked for d_c >= 2; at d_c = 1 the derived sequence is empty by convention");
  return t.finish();
}

CheckReport check_compute_r(unsigned max_sum, unsigned max_degree, const ChainLimits& limits) {
  Tally t("compute_r", scope_text({{"max_sum", str(max_sum)}, {"max_degree", str(max_degree)}}));
  ChainOptions walk;
  walk.method = ChainMethod::walk;
  walk.limits = limits;
  std::size_t count = 0, walked = 0;
  for_each_multidegree(max_sum, [&](const MultiplicitySequence& mu) {
    ++count;
    const Integer r = r_bound(mu);
    const Integer length = chain_length(mu);
    if (length <= 100000) {
      ++walked;
      t.exact(r_bound(mu, walk) == r, cat(mu.to_string(), ": walk and levels disagree on r"));
      Integer walked_length = 0;
      walk_chain(mu, limits, [&](std::uint64_t, const MultiplicitySequence&) {
        walked_length += 1;
        return true;
      });
      t.exact(walked_length == length, cat(mu.to_string(), ": chain length ", str(walked_length), " vs ", str(length)));
    }
    if (mu.top_degree() >= 3) {
      t.exact(r == length - 2, cat(mu.to_string(), ": r = ", str(r), ", chain length = ", str(length)));
    } else if (!mu.empty()) {
      t.exact(r == mu[2] - 1, cat(mu.to_string(), ": r = ", str(r), " but mu_2 - 1 = ", str(mu[2] - 1)));
    }
  });
  for (unsigned a = 0; a <= 8; ++a) {
    for (unsigned b = 0; b <= 8; ++b) {
      if (a == 0 && b == 0) continue;
      const MultiplicitySequence mu{static_cast<long>(a), static_cast<long>(b)};
      const Integer r = r_bound(mu);
      t.exact(r == Integer(b) - 1, cat(mu.to_string(), ": r = ", str(r)));
      t.exact(r_bound(mu, walk) == r, cat(mu.to_string(), ": walk and levels disagree on r"));
    }
  }
  for (unsigned d = 3; d <= max_degree; ++d) {
    const MultiplicitySequence mu = single_degree(d);
    const Integer r = r_bound(mu);
    t.exact(r == r_of_degree(d), cat("d = ", d, ": r from the chain ", str(r), " vs m-sum ", str(r_of_degree(d))));
    if (d <= 9) t.exact(r_bound(mu, walk) == r, cat("d = ", d, ": walk and levels disagree on r"));
  }
  t.note(cat(count, " multi-degrees with degree sum <= ", max_sum, ", ", walked, " also walked element by element"));
  t.note(cat("r(", max_degree, ") = ", str(r_of_degree(max_degree))));
  return t.finish();
}

CheckReport check_mij_and_mu(unsigned d_max, const ChainLimits& limits) {
  Tally t("mij_and_mu", scope_text({{"d_max", str(d_max)}}));
  for (unsigned d = 3; d <= d_max; ++d) {
    const MTable table = m_table(d - 1, d, Exec::serial);
    const MultiplicitySequence start = single_degree(d);
    std::vector<Integer> offsets;  // m_0 + ... + m_{i-1}
    Integer acc = 0;
    for (unsigned i = 0; i < d; ++i) {
      offsets.push_back(acc);
      acc += table.m(i);
    }
    auto expected = [&](unsigned i) {
      std::vector<Integer> mu;
      for (unsigned j = d - i; j-- > 0;) mu.push_back(table.at(i, j));
      return MultiplicitySequence(std::move(mu));
    };
    const Integer length = chain_length(start);
    if (length <= 1000000 && length <= Integer(static_cast<unsigned long>(limits.max_elements))) {
      unsigned next = 0;
      walk_chain(start, limits, [&](std::uint64_t k, const MultiplicitySequence& mu) {
        while (next < d && offsets[next] == Integer(static_cast<unsigned long>(k))) {
          t.exact(mu == expected(next), cat("d = ", d, ", i = ", next, ": ", mu.to_string(), " vs ",
                                            expected(next).to_string()));
          ++next;
        }
        return next < d;
      });
      t.exact(next == d, cat("d = ", d, ": chain ended before all levels were reached"));
    } else {
      const ChainStructure chain = chain_structure(start);
      for (unsigned i = 0; i < d; ++i) {
        MultiplicitySequence mu;
        bool found = false;
        for (const auto& level : chain.levels) {
          if (offsets[i] >= level.offset && offsets[i] < level.offset + level.length) {
            mu = level.at(offsets[i] - level.offset);
            found = true;
          }
        }
        if (!found && chain.ones && offsets[i] == chain.ones_offset) {
          mu = MultiplicitySequence(std::vector<Integer>{*chain.ones});
        }
        t.exact(mu == expected(i), cat("d = ", d, ", i = ", i, ": ", mu.to_string(), " vs ", expected(i).to_string()));
      }
    }
  }
  return t.finish();
}

CheckReport check_compute_rij(unsigned i_max, unsigned j_max, Exec exec) {
  Tally t("compute_rij", scope_text({{"i_max", str(i_max)}, {"j_max", str(j_max)}}));
  const MTable recursion = m_table(i_max, j_max, exec);
  const MTable serial = m_table(i_max, j_max, Exec::serial);
  const MTable series = series_table(i_max, j_max, exec);
  for (unsigned i = 0; i <= i_max; ++i) {
    for (unsigned j = 0; j <= j_max; ++j) {
      t.exact(recursion.at(i, j) == series.at(i, j),
              cat("m_{", i, ",", j, "}: recursion ", str(recursion.at(i, j)), " vs series ", str(series.at(i, j))));
      t.exact(recursion.at(i, j) == serial.at(i, j), cat("m_{", i, ",", j, "}: parallel and serial rows differ"));
    }
  }
  t.note(cat("m_", i_max, " has ", recursion.m(i_max).get_str().size(), " digits"));
  return t.finish();
}

CheckReport check_advance_vs_delta(unsigned i_max) {
  Tally t("advance_vs_delta", scope_text({{"i_max", str(i_max)}}));
  TruncatedSeries f = TruncatedSeries::one(i_max + 12);
  for (unsigned i = 0; i <= i_max; ++i) {
    const Integer m = to_integer(f[i], "m_i");
    const TruncatedSeries closed = advance(f, i, m);
    const TruncatedSeries literal = iterate_delta(f, i, m);
    t.exact(closed == literal, cat("i = ", i, ": advance differs from ", str(m), " applications of delta"));
    t.exact(advance(f, i, m, Exec::serial) == closed, cat("i = ", i, ": parallel and serial advance differ"));
    f = closed;
  }
  return t.finish();
}

CheckReport check_lower_bound(unsigned i_max) {
  Tally t("lower_bound", scope_text({{"i_max", str(i_max)}}));
  const MTable table = m_table(i_max + 1, 1);
  for (unsigned i = 1; i <= i_max; ++i) {
    const Integer& m = table.m(i);
    t.exact(m * m < 2 * table.m(i + 1), cat("i = ", i, ": m_i^2 = ", str(m * m), ", 2 m_{i+1} = ", str(2 * table.m(i + 1))));
    if (i >= 5) {
      t.exact(pow2(1 + (1UL << (i - 4))) < m, cat("i = ", i, ": 2^(1 + 2^(i-4)) >= m_i"));
      t.exact(table.at(i, 1) >= m, cat("i = ", i, ": m_{i,1} < m_i"));
    }
  }
  t.note(cat("i = 5: 121 < ", str(2 * table.m(6))));
  t.note(cat("m_", i_max + 1, " has ", table.m(i_max + 1).get_str().size(), " digits"));
  return t.finish();
}

CheckReport check_positive_expression(unsigned i_max) {
  Tally t("positive_expression", scope_text({{"i_max", str(i_max)}}));
  const MTable table = m_table(i_max, 6);
  for (unsigned i = 3; i <= i_max; ++i) {
    BasisDecomposition dec;
    try {
      dec = basis_decomposition(i);
    } catch (const VerificationFailure& e) {
      t.fail(cat("i = ", i, ": ", e.what()));
      continue;
    }
    Integer terms = 0;
    for (unsigned k = 0; k < i; ++k) terms += table.m(k);
    t.exact(Integer(static_cast<unsigned long>(dec.a.size())) == terms, cat("i = ", i, ": ", dec.a.size(), " coefficients"));
    t.exact(dec.sum() == table.m(i) + 1, cat("i = ", i, ": sum of a = ", str(dec.sum()), ", m_i + 1 = ", str(table.m(i) + 1)));
    const std::size_t order = i + 10;
    const TruncatedSeries direct = generate(i, order).back().f;
    t.exact(dec.expand(order) == direct, cat("i = ", i, ": re-expansion differs from the series"));
    const InterpolatingPolynomial f(dec);
    t.exact(f(Integer(0)) == table.m(i) + 1, cat("i = ", i, ": f(0) = ", str(f(Integer(0)))));
    for (unsigned j = 1; j <= 6; ++j) {
      t.exact(f(Integer(j)) == table.at(i, j), cat("i = ", i, ", j = ", j, ": f = ", str(f(Integer(j))), ", m = ", str(table.at(i, j))));
    }
    if (i == 3) {
      const Integer shifted = f.shifted_index_value(Integer(1));
      t.note(cat("lower index k instead of k-1 gives ", str(shifted), " at i = 3, t = 1 instead of ", str(table.at(3, 1))));
    }
  }
  return t.finish();
}

namespace {

// c_{i,j} for 7 <= i <= i_max, 1 <= j <= j_max + (i_max - i), at one precision.
struct CTable {
  std::vector<std::vector<Interval>> c;  // c[i - 7][j]
  const Interval& at(unsigned i, unsigned j) const { return c.at(i - 7).at(j); }
};

CTable c_table(const MTable& table, unsigned i_max, unsigned j_max, long prec) {
  CTable out;
  const unsigned width7 = j_max + (i_max - 7);
  out.c.emplace_back(width7 + 1, Interval::exact(Integer(1), prec));
  for (unsigned i = 7; i < i_max; ++i) {
    const unsigned width = j_max + (i_max - i - 1);
    const Integer& m = table.m(i);
    const Interval next_m = iv(table.m(i + 1), prec);
    const Interval two_next = iv(Integer(2) * table.m(i + 1), prec);
    std::vector<Interval> row(width + 1, Interval(prec));
    for (unsigned j = 1; j <= width; ++j) {
      Interval lead = iv(b_coefficient(m, j) / Rational(j + 2), prec) *
                      (iv(Integer(1), prec) + iv(Integer(j - 1), prec) * pow(two_next, Rational(-1, 2)) +
                       iv(Integer(1), prec) / next_m);
      for (unsigned k = 0; k <= j; ++k) {
        lead = lead + iv(b_coefficient(m, j - k), prec) * out.at(i, k + 1) *
                          pow(two_next, Rational(-static_cast<long>(k + 1), 4));
      }
      row[j] = pow(iv(Integer(2), prec), Rational(static_cast<long>(j + 2), 2)) * lead;
    }
    out.c.push_back(std::move(row));
  }
  return out;
}

// Left side of the c_{8,j} <= 1 reduction with c_{7,.} = 1.
Interval star_lhs(const MTable& table, unsigned j, long prec) {
  const Integer& m7 = table.m(7);
  const Interval m8 = iv(table.m(8), prec);
  const Interval two_m8 = iv(Integer(2) * table.m(8), prec);
  Interval lhs = iv(b_coefficient(m7, j) / Rational(j + 2), prec) *
                 (iv(Integer(1), prec) + iv(Integer(j - 1), prec) * pow(two_m8, Rational(-1, 2)) +
                  iv(Integer(1), prec) / m8);
  for (unsigned k = 0; k <= j; ++k) {
    lhs = lhs + iv(b_coefficient(m7, j - k), prec) * pow(two_m8, Rational(-static_cast<long>(k + 1), 4));
  }
  return lhs;
}

Rational inverse_power(unsigned base, unsigned e) { return Rational(Integer(1), ipow(Integer(base), e)); }

// The bracket bounding the c_{8,j} reduction for j >= 3.
Rational star_bracket(unsigned j) {
  Rational geometric = 0;
  for (unsigned k = 0; k + 3 <= j; ++k) geometric += inverse_power(4, 2 * k + 3);
  return Rational(1, j + 2) * (1 + Rational(j - 1) * inverse_power(4, 6) + inverse_power(4, 12)) + geometric +
         Rational(2, 3) * inverse_power(4, 2 * j - 1) + inverse_power(4, 2 * j + 2) + inverse_power(4, 2 * j + 5);
}

}  // namespace

CheckReport check_bounds_mij(unsigned i_max, unsigned j_max, const PrecisionPolicy& precision) {
  Tally t("bounds_mij", scope_text({{"i_max", str(i_max)}, {"j_max", str(j_max)}}));
  if (i_max < 8) i_max = 8;
  const MTable table = m_table(i_max, j_max + (i_max - 7) + 1);
  std::map<long, CTable> cache;
  auto c_at = [&](long prec) -> const CTable& {
    auto it = cache.find(prec);
    if (it == cache.end()) it = cache.emplace(prec, c_table(table, i_max, j_max, prec)).first;
    return it->second;
  };
  const Integer& m7 = table.m(7);

  for (unsigned i = 7; i <= i_max; ++i) {
    for (unsigned j = 1; j <= j_max; ++j) {
      t.certified(cat("m_{", i, ",", j, "} <= c_{", i, ",", j, "} m_", i, "^(1+", j, "/2)"), [&, i, j](long p) {
        return less_equal(iv(table.at(i, j), p),
                          c_at(p).at(i, j) * pow(iv(table.m(i), p), Rational(static_cast<long>(j + 2), 2)));
      }, precision);
      t.certified(cat("c_{", i, ",", j, "} <= 1"), [&, i, j](long p) {
        return less_equal(c_at(p).at(i, j), iv(Integer(1), p));
      }, precision);
      if (i < i_max) {
        t.certified(cat("c_{", i + 1, ",", j, "} <= c_{", i, ",", j, "}"), [&, i, j](long p) {
          return less_equal(c_at(p).at(i + 1, j), c_at(p).at(i, j));
        }, precision);
      }
    }
  }
  if (i_max >= 9) t.note(cat("c_{9,1} in ", c_at(precision.start).at(9, 1).to_string(8)));

  t.certified("m_{7,1} < m_7^(3/2)", [&](long p) {
    return less(iv(table.at(7, 1), p), pow(iv(m7, p), Rational(3, 2)));
  }, precision);
  t.note(cat("m_7^(3/2) in ", pow(iv(m7, precision.start), Rational(3, 2)).to_string(12)));
  t.exact(table.at(7, 2) < m7 * m7, cat("m_{7,2} = ", str(table.at(7, 2)), " vs m_7^2 = ", str(m7 * m7)));

  // Number of basis terms of F_7, which bounds the harmonic sum in the growth argument for f_7.
  Integer terms = 0;
  for (unsigned k = 0; k < 7; ++k) terms += table.m(k);
  Rational harmonic = 0;
  for (unsigned long l = 0; Integer(l) < terms; ++l) harmonic += Rational(1, l + 2);
  auto growth = [&](long p) { return log(iv(m7, p)) * iv(Rational(1, 2), p) - iv(harmonic, p); };
  t.certified(cat("(1/2) log m_7 - sum_{l<", str(terms), "} 1/(2+l) > 0"), [&](long p) {
    return less(iv(Integer(0), p), growth(p));
  }, precision);
  t.note(cat("(1/2) log m_7 - H in ", growth(precision.start).to_string(8)));

  for (unsigned j = 1; j <= j_max; ++j) {
    t.certified(cat("c_{8,", j, "} reduction < 2^(-(", j, "+2)/2)"), [&, j](long p) {
      return less(star_lhs(table, j, p), pow(iv(Integer(2), p), Rational(-static_cast<long>(j + 2), 2)));
    }, precision);
  }
  t.note(cat("reduction at j = 1 in ", star_lhs(table, 1, precision.start).to_string(8), ", at j = 2 in ",
             star_lhs(table, 2, precision.start).to_string(8)));

  t.exact(b_coefficient(m7, 0) == 1 && b_coefficient(m7, 1) == 1, "b_{7,0} = b_{7,1} = 1");
  t.exact(b_coefficient(m7, 2) < Rational(2, 3), "b_{7,2} < 2/3");
  t.exact(b_coefficient(m7, 3) < Rational(1, 4), "b_{7,3} < 1/4");
  t.exact(b_coefficient(m7, 4) < Rational(1, 16), "b_{7,4} < 1/16");
  for (unsigned j = 5; j <= 24; ++j) {
    t.exact(b_coefficient(m7, j) < inverse_power(4, j - 2), cat("b_{7,", j, "} < 4^-(", j, "-2)"));
  }
  t.exact(table.m(8) > ipow(Integer(4), 12), "m_8 > 4^12");
  t.exact(inverse_power(4, 3) / (1 - inverse_power(4, 2)) == Rational(1, 60), "geometric tail = 1/60");
  for (unsigned j = 3; j <= 24; ++j) {
    t.exact(star_bracket(j) < Rational(1, 4), cat("bracket at j = ", j, " < 1/4"));
  }
  // Uniform bound: the tail terms decrease in j, the geometric sum is at most 1/60.
  const Rational uniform = Rational(1, 5) * (1 + Rational(2) * inverse_power(4, 6) + inverse_power(4, 12)) +
                           Rational(1, 60) + Rational(2, 3) * inverse_power(4, 5) + inverse_power(4, 8) +
                           inverse_power(4, 11);
  t.exact(uniform < Rational(1, 4), "uniform bracket bound >= 1/4");
  for (unsigned j = 3; j <= 24; ++j) {
    t.exact(star_bracket(j) <= uniform, cat("bracket at j = ", j, " exceeds the uniform bound"));
  }
  t.note(cat("bracket at j = 3 in ", Interval::exact(star_bracket(3), precision.start).to_string(8),
             ", uniform bound in ", Interval::exact(uniform, precision.start).to_string(8)));
  t.note("c_{i+1,j} <= c_{i,j} is checked on the listed instances only; the induction over all i, j is not finite");
  return t.finish();
}

CheckReport check_bounds_m_and_sum(unsigned i_max, const PrecisionPolicy& precision) {
  Tally t("bounds_m_and_sum", scope_text({{"i_max", str(i_max)}}));
  const std::vector<Integer> m = m_sequence(std::max(i_max, 8U));
  for (unsigned i = 7; i < i_max; ++i) {
    t.certified(cat("m_", i + 1, " < (1/2 + m_", i, "^(-1/2)) m_", i, "^2"), [&, i](long p) {
      const Interval mi = iv(m[i], p);
      return less(iv(m[i + 1], p), (iv(Rational(1, 2), p) + pow(mi, Rational(-1, 2))) * mi * mi);
    }, precision);
    t.exact(m[i] > pow2(1UL << (i - 4)), cat("m_", i, " > 2^(2^", i - 4, ")"));
  }
  Integer sum = 0;
  for (unsigned i = 0; i <= i_max; ++i) {
    sum += m[i];
    if (i >= 6) t.exact(sum <= pow2(1UL << (i - 3)), cat("m_0 + ... + m_", i, " = ", str(sum), " > 2^(2^", i - 3, ")"));
  }
  t.exact(m[7] < pow2(13) && pow2(13) < pow2(15), "m_7 < 2^13 < 2^(2^4 - 1)");
  for (unsigned i = 8; i <= i_max; ++i) {
    Rational product = 1;
    for (unsigned j = 1; j <= i - 7; ++j) {
      const Rational factor = Rational(1, 2) + Rational(Integer(1), pow2(1UL << (i - j - 5)));
      Rational power = 1;
      for (unsigned long e = 0; e < (1UL << (j - 1)); ++e) power *= factor;
      product *= power;
    }
    const Rational chained = product * Rational(ipow(m[7], 1UL << (i - 7)));
    t.exact(Rational(m[i]) < chained, cat("m_", i, " below the iterated product bound"));
    t.exact(chained < Rational(pow2((1UL << (i - 3)) - (1UL << (i - 7)))), cat("iterated bound for i = ", i, " exceeds 2^(2^(i-3) - 2^(i-7))"));
    t.exact(m[i] < pow2((1UL << (i - 3)) - (1UL << (i - 7))), cat("m_", i, " >= 2^(2^", i - 3, " - 2^", i - 7, ")"));
  }
  t.note("i = 6: m_0 + ... + m_6 = 120 <= 256");
  return t.finish();
}

CheckReport check_bigger_n(unsigned max_parts, unsigned max_entry, unsigned r_max) {
  Tally t("bigger_n", scope_text({{"max_parts", str(max_parts)}, {"max_entry", str(max_entry)}, {"max_dc", "6"}, {"r_max", str(r_max)}}));
  std::size_t large = 0, small = 0, diamond = 0, cases = 0;
  for_each_bounded_sequence(max_parts, max_entry, 6, [&](const MultiplicitySequence& mu) {
    const MultiplicitySequence derived = mu.derived();
    for (unsigned r = 2; r <= r_max; ++r) {
      ++cases;
      const BiggerNCriteria c = bigger_n_criteria(mu, Integer(r));
      large += c.large_dc;
      small += c.small_dc;
      diamond += c.diamond;
      t.exact(!(c.large_dc || c.small_dc) || c.diamond,
              cat(mu.to_string(), ", r = ", r, ": criterion holds but the inequality fails"));
      const bool direct = n0(derived, Integer(r - 1)) + 1 <= n0(mu, Integer(r));
      t.exact(direct == c.diamond, cat(mu.to_string(), ", r = ", r, ": rearranged form disagrees with n0 directly"));
    }
  });
  t.note(cat(cases, " cases; large-d_c criterion true in ", large, ", small-d_c criterion true in ", small,
             ", inequality true in ", diamond));
  return t.finish();
}

CheckReport check_generic_ci_inequality(unsigned max_sum, unsigned r_max) {
  Tally t("generic_ci_inequality", scope_text({{"max_sum", str(max_sum)}, {"r_max", str(r_max)}}));
  std::size_t cases = 0;
  std::optional<std::string> excluded;
  for_each_multidegree(max_sum, [&](const MultiplicitySequence& mu) {
    const bool recursive = mu.top_degree() >= 3 || (mu.top_degree() == 2 && mu[2] >= 2);
    for (unsigned r = 1; r <= r_max; ++r) {
      const Rational lhs = n0(mu, Integer(r));
      const Rational rhs = Rational(2 * r - 1) + Rational(mu.pointed_count());
      Integer rearranged = -Integer(r) * (r - 1);
      for (unsigned d = 1; d <= mu.top_degree(); ++d) rearranged += mu[d] * (binomial(Integer(r + d), d) - r * d - 1);
      Rational scaled(rearranged, r);
      scaled.canonicalize();
      t.exact(lhs - rhs == scaled, cat(mu.to_string(), ", r = ", r, ": rearrangement identity fails"));
      if (recursive) {
        ++cases;
        t.exact(lhs >= rhs, cat(mu.to_string(), ", r = ", r, ": n0 = ", str(lhs), " < ", str(rhs)));
      } else if (!excluded && lhs < rhs && mu.top_degree() == 1) {
        excluded = cat(mu.to_string(), " at r = ", r, ": n0 = ", str(lhs), " < ", str(rhs));
      }
    }
  });
  t.note(cat(cases, " cases with d_c >= 3 or d_{c-1} >= 2"));
  if (excluded) t.note("all-ones multi-degrees lie outside the statement's domain for r >= 2, e.g. " + *excluded);
  return t.finish();
}

CheckReport check_base_case_overlaps(unsigned c_max, unsigned r_max) {
  Tally t("base_case_overlaps", scope_text({{"c_max", str(c_max)}, {"r_max", str(r_max)}}));
  ChainOptions walk;
  walk.method = ChainMethod::walk;
  for (unsigned c = 0; c <= c_max; ++c) {
    const MultiplicitySequence ones(std::vector<Integer>(c > 0 ? 1 : 0, Integer(c)));
    for (int r = -1; r <= 0; ++r) {
      t.exact(*n_base_case(ones, Integer(r)) == Rational(r + static_cast<int>(c)),
              cat("1^", c, " at r = ", r, ": count rule and closed form disagree"));
    }
    if (c >= 1) {
      const MultiplicitySequence quadric{static_cast<long>(c - 1), 1};
      for (int r = -1; r <= 0; ++r) {
        t.exact(*n_base_case(quadric, Integer(r)) == Rational(2 * r + static_cast<int>(c) + 1),
                cat("1^", c - 1, "2 at r = ", r, ": count rule and closed form disagree"));
      }
    }
    for (int r = -1; r <= static_cast<int>(r_max); ++r) {
      t.exact(n_bound(ones, Integer(r)) == n_bound(ones, Integer(r), walk), cat("1^", c, " at r = ", r));
    }
  }
  return t.finish();
}

CheckReport check_stepwise_n(const std::vector<unsigned>& degrees, unsigned recursion_d_max, const ChainLimits& limits) {
  std::string list;
  for (unsigned d : degrees) list += (list.empty() ? "" : "/") + std::to_string(d);
  Tally t("stepwise_n", scope_text({{"walk_degrees", list}, {"recursion_d_max", str(recursion_d_max)}}));
  ChainOptions walk;
  walk.method = ChainMethod::walk;
  walk.limits = limits;
  for (unsigned d : degrees) {
    const Integer r = r_of_degree(d);
    const StepwiseResult s = stepwise_check(single_degree(d), r, walk);
    t.exact(s.holds, cat("d = ", d, ": fails at step k = ", s.failure ? str(*s.failure) : "?"));
    t.exact(s.steps == r + 1, cat("d = ", d, ": ", str(s.steps), " steps checked, expected ", str(r + 1)));
    t.note(cat("d = ", d, ": ", str(s.steps), " steps over ", str(s.steps + 1), " chain elements, tightest margin ",
               s.tightest_margin ? str(*s.tightest_margin) : "-", " at k = ", str(s.tightest_at)));
  }
  for (unsigned d = 3; d <= recursion_d_max; ++d) {
    const MultiDegree md{d};
    const Integer r = r_of_degree(d);
    const Rational collapsed = n0(md, r);
    const Rational recursive = n_bound(md, r, walk);
    t.exact(recursive == collapsed, cat("d = ", d, ": n(d, r(d)) = ", str(recursive), " but n0(d, r(d)) = ", str(collapsed)));
    t.exact(ceil(recursive) == n_of_degree(d).n_value_integer, cat("d = ", d, ": ceilings differ"));
  }
  return t.finish();
}

CheckReport check_stepwise_n_levels(unsigned d_min, unsigned d_max) {
  Tally t("stepwise_n_levels", scope_text({{"d_min", str(d_min)}, {"d_max", str(d_max)}}));
  for (unsigned d = std::max(d_min, 3U); d <= d_max; ++d) {
    const MultiplicitySequence mu = single_degree(d);
    const Integer r = r_of_degree(d);
    const StepwiseResult s = stepwise_check(mu, r);
    t.exact(s.holds, cat("d = ", d, ": fails at step k = ", s.failure ? str(*s.failure) : "?"));
    t.exact(s.steps == r + 1, cat("d = ", d, ": ", str(s.steps), " steps checked, expected ", str(r + 1)));
    const Rational recursive = n_bound(mu, r);
    t.exact(recursive == n0(mu, r), cat("d = ", d, ": n(d, r(d)) differs from n0(d, r(d))"));
    t.note(cat("d = ", d, ": ", str(s.steps), " steps, ", s.explicit_steps, " evaluated one by one, tightest margin ",
               s.tightest_margin ? str(*s.tightest_margin) : "-"));
  }
  return t.finish();
}

namespace {

// a >= 2 x^(1/q), i.e. (a/2)^q >= x for a >= 0.
bool at_least_twice_root(const Integer& a, const Integer& x, unsigned q) {
  Rational half(a, 2);
  Rational p = 1;
  for (unsigned k = 0; k < q; ++k) p *= half;
  return p >= Rational(x);
}

}  // namespace

CheckReport check_stepwise_n_segments(unsigned d_min, unsigned d_max, const PrecisionPolicy& precision) {
  Tally t("stepwise_n_segments", scope_text({{"d_min", str(d_min)}, {"d_max", str(d_max)}}));
  d_min = std::max(d_min, 8U);
  const MTable table = m_table(std::max(d_max, 8U), 3);
  for (unsigned d = d_min; d <= d_max; ++d) {
    // First range: the large-d_c criterion at the last element of level d - 4.
    const Integer& a = table.m(d - 4);
    const Integer rhs = a + table.m(d - 3) + table.m(d - 2) - 2 * d - 1;
    t.exact(table.at(d - 4, 3) <= rhs, cat("d = ", d, ": m_{d-4,3} = ", str(table.at(d - 4, 3)), " > ", str(rhs)));
    if (d >= 11) {
      const Integer& top = table.m(d - 2);
      t.certified(cat("d = ", d, ": 4 m_{d-2}^(5/8) <= m_{d-4} + m_{d-3} + m_{d-2} - 2d - 1"), [&](long p) {
        return less_equal(iv(Integer(4), p) * pow(iv(top, p), Rational(5, 8)), iv(rhs, p));
      }, precision);
      t.exact(ipow(table.at(d - 4, 3), 2) <= ipow(a, 5), cat("d = ", d, ": m_{d-4,3} > m_{d-4}^(5/2)"));
      t.exact(ipow(a, 20) <= ipow(Integer(4), 8) * ipow(top, 5), cat("d = ", d, ": m_{d-4}^(5/2) > 4 m_{d-2}^(5/8)"));
    }
    // Second range: the small-d_c criterion through root bounds.
    const Integer lhs4 = table.m(d - 3) + table.m(d - 2);
    const Integer& m31 = table.at(d - 3, 1);
    t.exact(lhs4 >= 2 * table.m(d - 4) && at_least_twice_root(lhs4, 14 * table.m(d - 3), 2) &&
                at_least_twice_root(lhs4, 71 * m31, 3) && at_least_twice_root(lhs4, 43 * m31, 4),
            cat("d = ", d, ": d_c = 4 root bound fails"));
    const Integer& top = table.m(d - 2);
    t.exact(top >= 2 * table.m(d - 3) && at_least_twice_root(top, 6 * top, 2) && at_least_twice_root(top, 5 * top, 3),
            cat("d = ", d, ": d_c = 3 root bound fails"));
    if (d >= 10) t.exact(ipow(m31, 2) <= ipow(table.m(d - 3), 3), cat("d = ", d, ": m_{d-3,1}^(1/3) > m_{d-3}^(1/2)"));
    // Third range: inside the level of top degree 2 the margin is constant.
    const ChainStructure chain = chain_structure(single_degree(d));
    const Integer r = r_of_degree(d);
    for (const auto& level : chain.levels) {
      if (level.top_degree != 2) continue;
      const Integer s0 = r - level.offset;
      t.exact(level.entries[1] == RatPoly({Rational(s0), Rational(-1)}),
              cat("d = ", d, ": mu_2 is not r - k along the last level"));
      for (Integer k = 0; k + 3 <= level.length && k < 4; k += 1) {
        const Integer s = s0 - k;
        const Rational diff = n0(level.at(k), s) - 1 - n0(level.at(k + 1), s - 1);
        t.exact(diff == 2, cat("d = ", d, ", k = ", str(level.offset + k), ": difference ", str(diff)));
      }
    }
  }
  t.exact(ipow(Integer(568), 2) < ipow(table.m(7), 3), "2 * 71^(1/3) >= sqrt(m_7)");
  return t.finish();
}

CheckReport check_main_estimate(unsigned d_max) {
  Tally t("main_estimate", scope_text({{"d_max", str(d_max)}}));
  for (unsigned d = 6; d <= d_max; ++d) {
    const BoundReport rep = n_of_degree(d);
    const unsigned long exponent = (d - 1) * (1UL << (d - 5));
    t.exact(rep.n_value_integer <= pow2(exponent), cat("d = ", d, ": n(d) > 2^", exponent));
    if (d >= 8) {
      const Integer& r = rep.r_value;
      t.exact(rep.n_value_exact <= Rational(r) + Rational(ipow(r, d - 1), 2), cat("d = ", d, ": n0 > r + r^(d-1)/2"));
      t.exact(r + ipow(r, d - 1) / 2 <= ipow(r, d - 1), cat("d = ", d, ": r + r^(d-1)/2 > r^(d-1)"));
      t.exact(r <= pow2(1UL << (d - 5)), cat("d = ", d, ": r > 2^(2^(d-5))"));
    }
    if (d == 10) {
      t.exact(rep.n_value_integer < pow2(197), "n(10) >= 2^197");
      t.note(cat("n(10) = ", str(rep.n_value_integer), " (", rep.n_value_integer.get_str().size(), " digits)"));
    }
  }
  return t.finish();
}

std::vector<std::string> check_ids() {
  return {"bigger_r",         "compute_r",          "mij_and_mu",        "compute_rij",
          "advance_vs_delta", "lower_bound",        "positive_expression", "bounds_mij",
          "bounds_m_and_sum", "bigger_n",           "generic_ci_inequality", "base_case_overlaps",
          "stepwise_n",       "stepwise_n_levels",  "stepwise_n_segments", "main_estimate"};
}

CheckReport run_check(const std::string& id, const VerifyScope& s) {
  if (id == "bigger_r") return check_bigger_r(s.bigger_r_max_parts, s.bigger_r_max_entry, s.bigger_r_max_dc);
  if (id == "compute_r") return check_compute_r(s.compute_r_max_sum, s.compute_r_max_degree, s.limits);
  if (id == "mij_and_mu") return check_mij_and_mu(s.mij_mu_d_max, s.limits);
  if (id == "compute_rij") return check_compute_rij(s.rows_i_max, s.rows_j_max);
  if (id == "advance_vs_delta") return check_advance_vs_delta(s.delta_i_max);
  if (id == "lower_bound") return check_lower_bound(s.lower_i_max);
  if (id == "positive_expression") return check_positive_expression(s.positive_i_max);
  if (id == "bounds_mij") return check_bounds_mij(s.mij_i_max, s.mij_j_max, s.precision);
  if (id == "bounds_m_and_sum") return check_bounds_m_and_sum(s.m_i_max, s.precision);
  if (id == "bigger_n") return check_bigger_n(s.bigger_n_max_parts, s.bigger_n_max_entry, s.bigger_n_r_max);
  if (id == "generic_ci_inequality") return check_generic_ci_inequality(s.generic_ci_max_sum, s.generic_ci_r_max);
  if (id == "base_case_overlaps") return check_base_case_overlaps(s.overlaps_c_max, s.overlaps_r_max);
  if (id == "stepwise_n") return check_stepwise_n(s.stepwise_walk_degrees, s.stepwise_recursion_d_max, s.limits);
  if (id == "stepwise_n_levels") return check_stepwise_n_levels(s.stepwise_levels_d_min, s.stepwise_levels_d_max);
  if (id == "stepwise_n_segments") return check_stepwise_n_segments(s.segments_d_min, s.segments_d_max, s.precision);
  if (id == "main_estimate") return check_main_estimate(s.main_estimate_d_max);
  throw PreconditionError("unknown check id '" + id + "'");
}

namespace {

CheckReport guarded(const std::string& id, const VerifyScope& scope) {
  try {
    return run_check(id, scope);
  } catch (const VerificationFailure& e) {
    CheckReport r;
    r.check_id = id;
    r.status = Verdict::refuted;
    r.witnesses.push_back(std::string("counterexample: ") + e.what());
    return r;
  } catch (const ResourceError& e) {
    CheckReport r;
    r.check_id = id;
    r.status = Verdict::inconclusive;
    r.witnesses.push_back(std::string("resource limit: ") + e.what());
    return r;
  }
}

}  // namespace

std::vector<CheckReport> run_all(const VerifyScope& scope, Exec exec) {
  const std::vector<std::string> ids = check_ids();
  std::vector<CheckReport> out(ids.size());
  const long n = static_cast<long>(ids.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long k = 0; k < n; ++k) out[k] = guarded(ids[k], scope);
  return out;
}

bool any_failed(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == Verdict::refuted; });
}

namespace {

unsigned parse_unsigned(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(value, &used);
    if (used != value.size() || v > 1000000) throw ParseError("");
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw ParseError("scope value for '" + key + "' must be a nonnegative integer, got '" + value + "'");
  }
}

struct ScopeField {
  const char* key;
  unsigned VerifyScope::*field;
};

const ScopeField kScopeFields[] = {
    {"bigger_r.max_parts", &VerifyScope::bigger_r_max_parts},
    {"bigger_r.max_entry", &VerifyScope::bigger_r_max_entry},
    {"bigger_r.max_dc", &VerifyScope::bigger_r_max_dc},
    {"compute_r.max_sum", &VerifyScope::compute_r_max_sum},
    {"compute_r.max_degree", &VerifyScope::compute_r_max_degree},
    {"mij_and_mu.d_max", &VerifyScope::mij_mu_d_max},
    {"compute_rij.i_max", &VerifyScope::rows_i_max},
    {"compute_rij.j_max", &VerifyScope::rows_j_max},
    {"advance_vs_delta.i_max", &VerifyScope::delta_i_max},
    {"lower_bound.i_max", &VerifyScope::lower_i_max},
    {"positive_expression.i_max", &VerifyScope::positive_i_max},
    {"bounds_mij.i_max", &VerifyScope::mij_i_max},
    {"bounds_mij.j_max", &VerifyScope::mij_j_max},
    {"bounds_m_and_sum.i_max", &VerifyScope::m_i_max},
    {"bigger_n.max_parts", &VerifyScope::bigger_n_max_parts},
    {"bigger_n.max_entry", &VerifyScope::bigger_n_max_entry},
    {"bigger_n.r_max", &VerifyScope::bigger_n_r_max},
    {"generic_ci_inequality.max_sum", &VerifyScope::generic_ci_max_sum},
    {"generic_ci_inequality.r_max", &VerifyScope::generic_ci_r_max},
    {"base_case_overlaps.c_max", &VerifyScope::overlaps_c_max},
    {"base_case_overlaps.r_max", &VerifyScope::overlaps_r_max},
    {"stepwise_n.recursion_d_max", &VerifyScope::stepwise_recursion_d_max},
    {"stepwise_n_levels.d_min", &VerifyScope::stepwise_levels_d_min},
    {"stepwise_n_levels.d_max", &VerifyScope::stepwise_levels_d_max},
    {"stepwise_n_segments.d_min", &VerifyScope::segments_d_min},
    {"stepwise_n_segments.d_max", &VerifyScope::segments_d_max},
    {"main_estimate.d_max", &VerifyScope::main_estimate_d_max},
};

}  // namespace

std::vector<std::string> VerifyScope::keys() {
  std::vector<std::string> out;
  for (const auto& f : kScopeFields) out.push_back(f.key);
  out.push_back("stepwise_n.degrees");
  return out;
}

namespace {

std::string trimmed(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

}  // namespace

void VerifyScope::apply(const std::string& settings) {
  std::size_t pos = 0;
  while (pos < settings.size()) {
    std::size_t comma = settings.find(',', pos);
    if (comma == std::string::npos) comma = settings.size();
    const std::string item = trimmed(settings.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("scope entries look like key=value, got '" + item + "'");
    const std::string key = trimmed(item.substr(0, eq)), value = trimmed(item.substr(eq + 1));
    if (key == "stepwise_n.degrees") {
      stepwise_walk_degrees.clear();
      std::size_t p = 0;
      while (p <= value.size()) {
        std::size_t slash = value.find('/', p);
        if (slash == std::string::npos) slash = value.size();
        const unsigned d = parse_unsigned(key, value.substr(p, slash - p));
        if (d < 3) throw ParseError("stepwise_n.degrees entries must be >= 3");
        stepwise_walk_degrees.push_back(d);
        p = slash + 1;
      }
      continue;
    }
    bool known = false;
    for (const auto& f : kScopeFields) {
      if (key == f.key) {
        this->*(f.field) = parse_unsigned(key, value);
        known = true;
      }
    }
    if (!known) throw ParseError("unknown scope key '" + key + "'");
  }
}

}  // namespace penta
