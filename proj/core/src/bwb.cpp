#include "baf/bwb.hpp"

#include <set>
#include <stdexcept>

namespace baf {

BWBResult line_bundle_cohomology(const RootSystem& rs, const Weight& lambda) {
  Weight shifted = lambda;
  for (auto& v : shifted) v += 1;  // lambda + rho
  StraightenResult sr = straighten(rs, shifted);
  if (sr.singular) return {true, -1, Weight(), WeylElement::identity(rs)};

  Weight mu = sr.dominant;
  for (auto& v : mu) v -= 1;
  WeylElement witness = sr.w.inverse();
  if (dot(rs, witness, mu) != lambda)
    throw std::logic_error("line_bundle_cohomology: witness does not recover lambda");
  return {false, static_cast<int>(sr.steps), std::move(mu), std::move(witness)};
}

Weight ew_weight(const RootSystem& rs, const WeylElement& w) {
  WeylElement w0 = longest_element(rs);
  Weight via_conjugate = compose(compose(w0, w), w0).apply(rs.rho());
  for (auto& v : via_conjugate) v -= 1;  // w0 w w0 (rho) - rho

  Weight via_dot = rs.star(dot(rs, w, Weight(rs.rank(), 0)));

  if (via_conjugate != via_dot)
    throw std::logic_error("ew_weight: the two defining formulas disagree");
  return via_conjugate;
}

XCohomologyReport x_cohomology(const RootSystem& rs, int degree, std::size_t cap) {
  const auto num_positive = rs.positive_roots().size();
  if (degree < 0 || static_cast<std::size_t>(degree) > num_positive)
    throw std::domain_error("x_cohomology: degree out of range [0, #positive roots]");

  XCohomologyReport report;
  report.degree = degree;
  for (const auto& w : enumerate_weyl(rs, cap)) {
    if (w.word().size() != static_cast<std::size_t>(degree)) continue;
    report.classes.push_back({w, ew_weight(rs, w)});
  }
  report.multiplicity = report.classes.size();

  std::set<Weight> distinct;
  for (const auto& cls : report.classes) distinct.insert(cls.e_weight);
  if (distinct.size() != report.multiplicity)
    throw std::logic_error("x_cohomology: class weights are not pairwise distinct");
  return report;
}

std::size_t x_multiplicity(const RootSystem& rs, int degree, const Weight& dominant_lam,
                           std::size_t cap) {
  if (!rs.is_dominant(dominant_lam)) throw std::domain_error("x_multiplicity: weight not dominant");
  const auto num_positive = rs.positive_roots().size();
  if (degree < 0 || static_cast<std::size_t>(degree) > num_positive)
    throw std::domain_error("x_multiplicity: degree out of range");

  const Weight lam_star = rs.star(dominant_lam);
  std::set<Weight> twists;
  for (const auto& w : enumerate_weyl(rs, cap)) {
    if (w.word().size() != static_cast<std::size_t>(degree)) continue;
    Weight nu = dot(rs, w, lam_star);
    if (!twists.insert(nu).second)
      throw std::logic_error("x_multiplicity: dot twists are not distinct");
    BWBResult r = line_bundle_cohomology(rs, nu);
    if (r.vanishes || r.degree != degree || r.mu != lam_star)
      throw std::logic_error("x_multiplicity: twist does not round-trip");
  }
  return twists.size();
}

}  // namespace baf
