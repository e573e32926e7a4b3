#include "penta/chain_levels.hpp"

#include "penta/errors.hpp"

namespace penta {

namespace {

// Amount subtracted from the entry j places below the top after k steps.
RatPoly subtracted(long n) {
  if (n < 0) return {};
  if (n == 0) return RatPoly::linear(0);
  return RatPoly::binomial(Integer(n - 1), static_cast<unsigned>(n + 1));
}

ChainLevel make_level(const MultiplicitySequence& mu, const Integer& offset) {
  ChainLevel level;
  level.top_degree = mu.top_degree();
  level.offset = offset;
  level.length = mu[level.top_degree];
  level.start = mu;
  const unsigned top = level.top_degree;
  level.entries.resize(top);
  for (unsigned j = 0; j < top; ++j) {
    RatPoly p = subtracted(j) + subtracted(static_cast<long>(j) - 1);
    p *= Rational(-1);
    for (unsigned t = 0; t <= j; ++t) {
      const Integer m = mu[top - t];
      if (m == 0) continue;
      p += RatPoly::binomial(Integer(static_cast<long>(j - t) - 1), j - t) * Rational(m);
    }
    level.entries[top - 1 - j] = std::move(p);
  }
  return level;
}

}  // namespace

MultiplicitySequence ChainLevel::at(const Integer& k) const {
  if (k < 0 || k > length) throw DomainError("level index out of range");
  std::vector<Integer> mu(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    mu[i] = to_integer(entries[i](k), "chain multiplicity");
  }
  return MultiplicitySequence(std::move(mu));
}

ChainStructure chain_structure(const MultiplicitySequence& mu) {
  ChainStructure out;
  MultiplicitySequence cur = mu;
  Integer offset = 0;
  while (cur.top_degree() >= 2) {
    ChainLevel level = make_level(cur, offset);
    offset += level.length;
    cur = level.at(level.length);
    out.levels.push_back(std::move(level));
  }
  if (cur.top_degree() == 1) {
    out.ones = cur[1];
    out.ones_offset = offset;
    offset += 1;
  }
  out.length = offset + 1;
  return out;
}

Integer chain_length(const MultiplicitySequence& mu) { return chain_structure(mu).length; }

RatPoly reflect_at(const RatPoly& p, const Integer& s) {
  std::vector<Rational> c = p.coefficients();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return RatPoly(std::move(c)).shifted(-s);
}

}  // namespace penta
