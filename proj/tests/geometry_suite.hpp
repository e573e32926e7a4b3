#pragma once

// Seeded random hypersurfaces over prime fields: expansion round trip, penultimate tangent
// sampling, and residual points checked against a direct vanishing-order computation.

#include "penta/errors.hpp"
#include "penta/geometry.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace suite {

using namespace penta::geometry;

struct GeometryTally {
  std::size_t instances = 0;
  std::size_t round_trips = 0;
  std::size_t with_penta_points = 0;
  std::size_t residuals = 0;
  std::size_t residuals_on_hyperplane = 0;  // f_d(y) = 0: last coordinate vanishes
  std::size_t indeterminate = 0;
  std::size_t lines_tried = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

struct InstanceShape {
  std::uint64_t p;
  unsigned degree;
  unsigned variables;
};

// Cycles through p in {101, 10007}, degree 3..5 and 4..6 variables.
inline InstanceShape shape_of(std::size_t k) {
  static const std::uint64_t primes[] = {101, 10007};
  return {primes[k % 2], 3 + static_cast<unsigned>((k / 2) % 3), 4 + static_cast<unsigned>((k / 6) % 3)};
}

inline void fail(GeometryTally& t, std::size_t k, const std::string& what) {
  std::ostringstream os;
  os << "instance " << k << ": " << what;
  t.failures.push_back(os.str());
}

inline GeometryTally run_prime_instances(std::size_t count, std::uint64_t seed, std::size_t points_per_instance = 3) {
  GeometryTally t;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    const InstanceShape s = shape_of(k);
    const PrimeField field(s.p);
    const unsigned d = s.degree;
    ++t.instances;
    const auto f = HomogeneousPolynomial<PrimeField>::random(field, s.variables, d, rng);
    const auto z = random_point_on(f, 2000, rng);
    if (!z) {
      fail(t, k, "no point found on the hypersurface");
      continue;
    }
    const auto exp = expand_at_point(f, *z);
    if (exp.reassemble() == f.substitute(exp.change)) ++t.round_trips;
    else fail(t, k, "expansion does not reassemble");
    for (unsigned i = 1; i <= d; ++i)
      if (exp.component(i).degree() != i) fail(t, k, "component of the wrong degree");

    std::size_t tried = 0;
    const auto ys = sample_penta_points(exp, 20000, rng, points_per_instance, &tried);
    t.lines_tried += tried;
    if (!ys.empty()) ++t.with_penta_points;
    for (const auto& y : ys) {
      const auto values = restrict_to_line(exp, y.coordinates());
      for (unsigned i = 1; i + 2 <= d; ++i)
        if (values[i - 1] != 0) fail(t, k, "sampled direction is not a penultimate tangent");
      if (values[d - 2] == 0 && values[d - 1] == 0) {
        ++t.indeterminate;
        try {
          residual_point(exp, y.coordinates());
          fail(t, k, "line in the hypersurface did not raise");
        } catch (const penta::IndeterminacyError&) {
        }
        continue;
      }
      const auto w = residual_point(exp, y.coordinates());
      ++t.residuals;
      const auto w_original = exp.to_original(w.coordinates());
      if (f(w_original) != 0) fail(t, k, "residual point is off the hypersurface");
      if (values[d - 1] == 0) {
        ++t.residuals_on_hyperplane;
        if (w.coordinates().back() != 0) fail(t, k, "residual point should lie on x_n = 0");
      }
      Vector<PrimeField> y_chart = y.coordinates();
      y_chart.push_back(0);
      const auto direction = exp.to_original(y_chart);
      const auto order = vanishing_order(f, z->coordinates(), direction);
      const auto expected = tangency_order(exp, y.coordinates());
      if (order != expected) fail(t, k, "tangency order disagrees with the direct computation");
      if (order && *order < d - 1) fail(t, k, "line meets z with multiplicity below d - 1");
      if (values[d - 2] != 0 && order != d - 1) fail(t, k, "multiplicity should be exactly d - 1");
      // The line through z and the residual point, when they differ, is the same tangent line.
      if (!(ProjectivePoint<PrimeField>(field, w_original) == *z)) {
        const auto through_w = vanishing_order(f, z->coordinates(), w_original);
        if (!through_w || *through_w < d - 1) fail(t, k, "line through z and the residual point has low order");
        if (values[d - 2] == 0) fail(t, k, "f_{d-1}(y) = 0 should give the residual point z");
      }
    }
  }
  return t;
}

}  // namespace suite
