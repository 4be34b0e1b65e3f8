#pragma once

#include <cstddef>
#include <vector>

#include "baf/weyl.hpp"

namespace baf {

/// Outcome of the line bundle cohomology computation for L_lambda on the
/// flag variety. When nonzero, exactly one degree survives: H^degree is the
/// dual of the irreducible module with highest weight mu, and lambda is the
/// dot twist of mu by the witness, lambda = witness . mu with
/// length(witness) = degree.
struct BWBResult {
  bool vanishes;
  int degree;
  Weight mu;
  WeylElement witness;
};

BWBResult line_bundle_cohomology(const RootSystem& rs, const Weight& lambda);

struct XCohomologyClass {
  WeylElement w;
  Weight e_weight;
};

/// Degree-i piece of the cohomology of the structure sheaf on G/U: one class
/// per Weyl element of length i, carrying the Cartan weight of its generator.
struct XCohomologyReport {
  int degree;
  std::vector<XCohomologyClass> classes;
  std::size_t multiplicity;  // = |W(i)|
};

XCohomologyReport x_cohomology(const RootSystem& rs, int degree, std::size_t cap = 1000000);

// weight of the generating class attached to w, computed two ways
// (w0 w w0 (rho) - rho and star of the dot image of zero) and cross-checked
Weight ew_weight(const RootSystem& rs, const WeylElement& w);

// multiplicity of V(lambda) in degree i, computed by enumerating the dot
// orbit of lambda* over W(i) and round-tripping each twist through
// line_bundle_cohomology; independent of the Poincare coefficients
std::size_t x_multiplicity(const RootSystem& rs, int degree, const Weight& dominant_lam,
                           std::size_t cap = 1000000);

}  // namespace baf
