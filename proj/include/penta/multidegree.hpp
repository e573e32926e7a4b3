#pragma once

#include "penta/integer.hpp"

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace penta {

// mu_d = number of entries of degree d, stored for d = 1..d_c with trailing zeros trimmed.
// Chains reach multi-degrees with ~10^11 entries, so this is the working representation.
class MultiplicitySequence {
 public:
  MultiplicitySequence() = default;
  explicit MultiplicitySequence(std::vector<Integer> mu);
  MultiplicitySequence(std::initializer_list<long> mu);

  bool empty() const { return mu_.empty(); }
  // d_c; zero for the empty sequence.
  unsigned top_degree() const { return static_cast<unsigned>(mu_.size()); }
  // mu_d for d >= 1; zero past d_c.
  Integer operator[](unsigned d) const;
  const std::vector<Integer>& entries() const { return mu_; }

  Integer count() const;          // #d
  Integer pointed_count() const;  // #d_1 = sum d * mu_d
  Integer max_entry() const;

  // The penultimate-tangent transform mu -> mu'.
  MultiplicitySequence derived() const;
  void derive_in_place();

  friend bool operator==(const MultiplicitySequence& a, const MultiplicitySequence& b) {
    return a.mu_ == b.mu_;
  }
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> mu_;
};

// A finite multiset of positive degrees d_1 <= ... <= d_c; the empty multiset is valid.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<unsigned> degrees);
  MultiDegree(std::initializer_list<unsigned> degrees) : MultiDegree(std::vector<unsigned>(degrees)) {}
  static MultiDegree from_multiplicities(MultiplicitySequence mu);

  const MultiplicitySequence& multiplicities() const { return mu_; }
  bool empty() const { return mu_.empty(); }
  unsigned max_degree() const { return mu_.top_degree(); }
  Integer size() const { return mu_.count(); }
  // Sorted degree list. Throws ResourceError past `limit` entries.
  std::vector<unsigned> degrees(std::size_t limit = std::size_t{1} << 20) const;

  // "[2,3]", "[]"; runs longer than 8 are written as "d^k".
  std::string to_string() const;
  // Inverse of to_string; also accepts plain lists in any order.
  static MultiDegree parse(std::string_view text);

  friend bool operator==(const MultiDegree& a, const MultiDegree& b) { return a.mu_ == b.mu_; }

 private:
  MultiplicitySequence mu_;
};

MultiplicitySequence to_multiplicity(const MultiDegree& d);
MultiDegree from_multiplicity(const MultiplicitySequence& mu);

// (d' : 0 < d' <= d for d in d)
MultiDegree pointed_lines_multidegree(const MultiDegree& d);
// d_1 minus (d_c, d_c - 1); empty when d_c <= 1.
MultiDegree derived_multidegree(const MultiDegree& d);
MultiplicitySequence derived_multiplicity(const MultiplicitySequence& mu);

struct ChainLimits {
  std::uint64_t max_elements = 100'000'000;
};

// [empty, d] from d downwards. Throws ResourceError if it has more than max_elements elements.
std::vector<MultiDegree> interval_chain(const MultiDegree& d, const ChainLimits& limits = {});

// Visits chain elements in order without storing them; `visit(index, mu)` returns false to stop.
// Returns the number of elements visited. Throws ResourceError past the cap.
std::uint64_t walk_chain(const MultiplicitySequence& start, const ChainLimits& limits,
                         const std::function<bool(std::uint64_t, const MultiplicitySequence&)>& visit);

}  // namespace penta
