#pragma once

#include "penta/multidegree.hpp"
#include "penta/upoly.hpp"

#include <optional>
#include <vector>

namespace penta {

// Within a stretch of the chain where the top degree D stays fixed, the multiplicities after
// k transforms are polynomials in k (k from 0 up to and including mu_D). A chain therefore
// splits into at most d_c such levels, then possibly one all-ones element, then the empty
// multi-degree; this lets chains with astronomically many elements be handled exactly.
struct ChainLevel {
  unsigned top_degree = 0;
  Integer offset;  // chain index of the first element
  Integer length;  // number of elements, equal to mu_D of the first element
  MultiplicitySequence start;
  // entries[d - 1](k) is mu_d after k transforms, valid for 0 <= k <= length.
  std::vector<RatPoly> entries;

  MultiplicitySequence at(const Integer& k) const;
};

struct ChainStructure {
  std::vector<ChainLevel> levels;  // top degree >= 2, in chain order
  std::optional<Integer> ones;     // c when the element 1^c occurs
  Integer ones_offset;             // its index, if present
  Integer length;                  // total number of elements, including the empty one
};

ChainStructure chain_structure(const MultiplicitySequence& mu);
Integer chain_length(const MultiplicitySequence& mu);

// Polynomial in k with p(S - k) for a polynomial p.
RatPoly reflect_at(const RatPoly& p, const Integer& s);

}  // namespace penta
