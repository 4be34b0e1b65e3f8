#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "baf/intmatrix.hpp"
#include "baf/rootsystem.hpp"

namespace baf {

/// Structure of the diagonalizable group attached to a generator monoid:
/// a torus of the stated rank times one finite cyclic factor per nontrivial
/// invariant factor of the weight lattice modulo the generator lattice.
struct QGammaDescription {
  std::size_t torus_rank = 0;
  std::vector<Int> cyclic_orders;

  bool trivial() const { return torus_rank == 0 && cyclic_orders.empty(); }
  std::string to_string() const;
};

struct GammaMonoid {
  std::vector<Weight> generators;      // dominant, nonzero, distinct
  IntMatrix lattice_basis;             // HNF basis of the generated lattice, one row per basis vector
  std::size_t lattice_rank = 0;
  std::vector<Int> invariant_factors;  // of Lambda / (generator lattice)
  QGammaDescription q_gamma;
};

GammaMonoid gamma_lattice(const RootSystem& rs, const std::vector<Weight>& gens);

struct MembershipCertificate {
  bool member;
  std::vector<long long> coefficients;  // mu = sum coefficients[j] * gens[j] when member
};

// decides mu in the monoid N gens by exhaustive search; the pairing against
// 2 rho^vee is an exact budget since it is positive on every generator
MembershipCertificate monoid_membership(const RootSystem& rs, const std::vector<Weight>& gens,
                                        const Weight& mu);

enum class SaturationStatus { Holds, Fails, Inconclusive };

/// Verdict on saturation of the generator monoid: whether the monoid equals
/// all dominant points of the lattice it spans. A failure carries a
/// certified witness (a dominant lattice point outside the monoid).
struct SaturationVerdict {
  SaturationStatus status = SaturationStatus::Inconclusive;
  std::optional<Weight> witness;
  std::vector<Weight> hilbert_basis;  // minimal generators of lattice-cap-dominant examined
  long long level_bound = 0;          // certified level bound for the Hilbert basis
  long long levels_examined = 0;
};

SaturationVerdict check_saturation(const RootSystem& rs, const std::vector<Weight>& gens,
                       long long level_cap = 64, long long point_cap = 2000000);

// mu in the lattice spanned by the starred generators (the degree lattice of
// invariant operators)
bool grading_lattice_membership(const RootSystem& rs, const std::vector<Weight>& gens,
                                const Weight& mu);

struct DualBasis {
  std::vector<std::size_t> generator_order;  // indices of the rank-many spanning generators used
  std::vector<CorootVector> x;               // <gens[order[i]]*, x[j]> = delta_ij
};

DualBasis dual_basis(const RootSystem& rs, const std::vector<Weight>& gens);

}  // namespace baf
