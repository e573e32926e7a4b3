#include "penta/multidegree.hpp"

#include "penta/errors.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace penta {

MultiplicitySequence::MultiplicitySequence(std::vector<Integer> mu) : mu_(std::move(mu)) {
  for (const auto& m : mu_) {
    if (m < 0) throw DomainError("negative multiplicity");
  }
  trim();
}

MultiplicitySequence::MultiplicitySequence(std::initializer_list<long> mu) {
  for (long m : mu) {
    if (m < 0) throw DomainError("negative multiplicity");
    mu_.emplace_back(m);
  }
  trim();
}

void MultiplicitySequence::trim() {
  while (!mu_.empty() && mu_.back() == 0) mu_.pop_back();
}

Integer MultiplicitySequence::operator[](unsigned d) const {
  if (d == 0 || d > mu_.size()) return 0;
  return mu_[d - 1];
}

Integer MultiplicitySequence::count() const {
  Integer s = 0;
  for (const auto& m : mu_) s += m;
  return s;
}

Integer MultiplicitySequence::pointed_count() const {
  Integer s = 0;
  for (std::size_t d = 1; d <= mu_.size(); ++d) s += mu_[d - 1] * static_cast<unsigned long>(d);
  return s;
}

Integer MultiplicitySequence::max_entry() const {
  Integer m = 0;
  for (const auto& x : mu_) m = std::max(m, x);
  return m;
}

void MultiplicitySequence::derive_in_place() {
  const std::size_t top = mu_.size();
  if (top <= 1) {
    mu_.clear();
    return;
  }
  for (std::size_t i = top - 1; i-- > 0;) mu_[i] += mu_[i + 1];
  mu_[top - 1] -= 1;
  mu_[top - 2] -= 1;
  trim();
}

MultiplicitySequence MultiplicitySequence::derived() const {
  MultiplicitySequence out = *this;
  out.derive_in_place();
  return out;
}

std::string MultiplicitySequence::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < mu_.size(); ++i) {
    if (i) s += ",";
    s += mu_[i].get_str();
  }
  return s + ")";
}

MultiDegree::MultiDegree(std::vector<unsigned> degrees) {
  unsigned top = 0;
  for (unsigned d : degrees) {
    if (d == 0) throw DomainError("degrees must be positive");
    top = std::max(top, d);
  }
  std::vector<Integer> mu(top);
  for (unsigned d : degrees) mu[d - 1] += 1;
  mu_ = MultiplicitySequence(std::move(mu));
}

MultiDegree MultiDegree::from_multiplicities(MultiplicitySequence mu) {
  MultiDegree out;
  out.mu_ = std::move(mu);
  return out;
}

std::vector<unsigned> MultiDegree::degrees(std::size_t limit) const {
  if (mu_.count() > Integer(static_cast<unsigned long>(limit))) {
    throw ResourceError("multi-degree has " + mu_.count().get_str() + " entries, too many to list");
  }
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= mu_.top_degree(); ++d) {
    out.insert(out.end(), mu_[d].get_ui(), d);
  }
  return out;
}

std::string MultiDegree::to_string() const {
  std::string s = "[";
  bool first = true;
  for (unsigned d = 1; d <= mu_.top_degree(); ++d) {
    const Integer m = mu_[d];
    if (m == 0) continue;
    if (m > 8) {
      if (!first) s += ",";
      s += std::to_string(d) + "^" + m.get_str();
      first = false;
      continue;
    }
    for (unsigned long k = 0; k < m.get_ui(); ++k) {
      if (!first) s += ",";
      s += std::to_string(d);
      first = false;
    }
  }
  return s + "]";
}

MultiDegree MultiDegree::parse(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw ParseError("multi-degree must look like [d1,d2,...], got '" + std::string(text) + "'");
  }
  t = t.substr(1, t.size() - 2);
  std::vector<Integer> mu;
  if (t.empty()) return {};
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t comma = t.find(',', pos);
    if (comma == std::string::npos) comma = t.size();
    std::string item = t.substr(pos, comma - pos);
    std::size_t caret = item.find('^');
    Integer deg = parse_integer(item.substr(0, caret));
    Integer times = caret == std::string::npos ? Integer(1) : parse_integer(item.substr(caret + 1));
    if (deg <= 0 || deg > 1000000) throw ParseError("degree out of range in '" + std::string(text) + "'");
    if (times < 0) throw ParseError("negative repeat count in '" + std::string(text) + "'");
    unsigned long d = deg.get_ui();
    if (mu.size() < d) mu.resize(d);
    mu[d - 1] += times;
    pos = comma + 1;
  }
  return from_multiplicities(MultiplicitySequence(std::move(mu)));
}

MultiplicitySequence to_multiplicity(const MultiDegree& d) { return d.multiplicities(); }

MultiDegree from_multiplicity(const MultiplicitySequence& mu) { return MultiDegree::from_multiplicities(mu); }

MultiDegree pointed_lines_multidegree(const MultiDegree& d) {
  // Each degree e contributes one entry of every degree 1..e, so mu_1,k is a suffix sum.
  std::vector<Integer> mu = d.multiplicities().entries();
  for (std::size_t i = mu.size(); i-- > 1;) mu[i - 1] += mu[i];
  return MultiDegree::from_multiplicities(MultiplicitySequence(std::move(mu)));
}

MultiplicitySequence derived_multiplicity(const MultiplicitySequence& mu) { return mu.derived(); }

MultiDegree derived_multidegree(const MultiDegree& d) {
  return MultiDegree::from_multiplicities(d.multiplicities().derived());
}

std::uint64_t walk_chain(const MultiplicitySequence& start, const ChainLimits& limits,
                         const std::function<bool(std::uint64_t, const MultiplicitySequence&)>& visit) {
  MultiplicitySequence mu = start;
  std::uint64_t index = 0;
  while (true) {
    if (index >= limits.max_elements) {
      throw ResourceError("chain exceeds the cap of " + std::to_string(limits.max_elements) + " elements");
    }
    if (!visit(index, mu)) return index + 1;
    ++index;
    if (mu.empty()) return index;
    mu.derive_in_place();
  }
}

std::vector<MultiDegree> interval_chain(const MultiDegree& d, const ChainLimits& limits) {
  std::vector<MultiDegree> out;
  walk_chain(d.multiplicities(), limits, [&out](std::uint64_t, const MultiplicitySequence& mu) {
    out.push_back(MultiDegree::from_multiplicities(mu));
    return true;
  });
  return out;
}

}  // namespace penta
