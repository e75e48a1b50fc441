#pragma once

#include <optional>
#include <vector>

#include "powsum/concerted.hpp"

namespace powsum {

struct ParametrizedSolution {
  unsigned n = 0;
  std::vector<CycInt> xs;  // one per matrix; the Cramer minors, undivided
  CycInt y;                // the system determinant
  std::vector<CycInt> deltas;
  CycInt delta;
};

// Does sum(xs_i^n) equal y^n, exactly.
bool power_identity_holds(const ParametrizedSolution& s);

// Cramer route: for a certified square set (dim == k) and a not-all-zero
// parameter vector Psi, solve (sum x_i A_i) Psi = y Psi by taking
// y = det M and x_i = det of M with column i replaced by Psi, where M's
// columns are A_i Psi. Everything stays in the ring: no division, the
// (delta_i, delta) normalization is the output. The power identity is
// re-checked on the result and a failure throws, since certification
// guarantees it.
ParametrizedSolution cramer_parametrize(const ConcertedSet& set,
                                        const std::vector<CycInt>& psi);

// Closed-form cubic route over Z[zeta_3], evaluated directly from the
// published polynomial formulas in three parameters. The caller decides
// what to do when the power identity fails; use power_identity_holds.
ParametrizedSolution closed_form_n3(const std::vector<CycInt>& psi);

// Componentwise ratio closed/cramer on the same Psi. `factor` is set when
// one exact unit relates every component (expected: -1).
struct RouteComparison {
  ParametrizedSolution cramer;
  ParametrizedSolution closed;
  bool proportional = false;
  std::optional<CycInt> factor;
};
RouteComparison compare_n3_routes(const std::vector<CycInt>& psi);

// Integer shadow of an exact solution: defined when every component is
// rational; `nonrational` lists the offenders otherwise.
struct RationalSlice {
  bool rational = false;
  std::vector<BigInt> xs;
  BigInt y;
  std::vector<std::size_t> nonrational;  // k = y slot is index xs.size()
};
RationalSlice rational_slice(const ParametrizedSolution& s);
RationalSlice reduce_by_gcd(RationalSlice s);

}  // namespace powsum
