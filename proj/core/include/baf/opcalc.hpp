#pragma once

#include <map>
#include <string>
#include <vector>

#include "baf/exact.hpp"
#include "baf/svariety.hpp"
#include "baf/weyl.hpp"

namespace baf {

/// Sparse multivariate polynomial with exact rational coefficients in the
/// coroot coordinates h_1..h_rank of the Cartan subalgebra. Also used for
/// polynomials in the grading variables y_1..y_r after substitution.
class UhPolynomial {
 public:
  using ExponentVec = std::vector<unsigned>;

  explicit UhPolynomial(int rank) : rank_(rank) {}

  static UhPolynomial zero(int rank) { return UhPolynomial(rank); }
  static UhPolynomial constant(int rank, Rat c);
  static UhPolynomial variable(int rank, int j);  // h_j, 1-based
  static UhPolynomial linear(int rank, const CorootVector& coeffs, Rat constant);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  // total degree; -1 for the zero polynomial
  long long degree() const;
  Rat constant_term() const;
  Rat coefficient(const ExponentVec& e) const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExponentVec, Rat>& terms() const { return terms_; }

  UhPolynomial operator-() const;
  UhPolynomial operator+(const UhPolynomial& o) const;
  UhPolynomial operator-(const UhPolynomial& o) const;
  UhPolynomial operator*(const UhPolynomial& o) const;
  UhPolynomial& operator+=(const UhPolynomial& o);
  UhPolynomial& operator*=(const UhPolynomial& o);
  bool operator==(const UhPolynomial& o) const = default;

  void add_term(ExponentVec e, Rat c);

  // ring homomorphism h_j -> images[j-1]; all images must share a rank,
  // which becomes the rank of the result
  UhPolynomial substitute(const std::vector<UhPolynomial>& images) const;

  // canonical rendering: terms by (total degree desc, exponents lex desc)
  std::string to_string(const std::string& var = "h") const;

 private:
  int rank_;
  std::map<ExponentVec, Rat> terms_;  // no zero coefficients stored
};

// k(lambda) = <lambda, 2 rho^vee>; for dominant lambda this equals twice the
// sum of the simple-root coordinates, and both evaluations are compared
Int k_value(const RootSystem& rs, const Weight& lam);

// the affine-linear factors of the invariant operator attached to eta:
// one factor (alpha^vee + <alpha^vee, rho> - i) per positive coroot and
// 1 <= i <= <eta, alpha^vee>
std::vector<UhPolynomial> p_eta_factors(const RootSystem& rs, const Weight& eta);

// product of the factors; total degree equals k_value(eta)
UhPolynomial p_eta(const RootSystem& rs, const Weight& eta);

// the twist on the Cartan: F_w(h) = w(h) + <w(h) - h, rho>
UhPolynomial fw_on_h(const RootSystem& rs, const WeylElement& w, const CorootVector& h);

// the algebra endomorphism substituting h_j -> F_w(h_j)
UhPolynomial fw_on_poly(const RootSystem& rs, const WeylElement& w, const UhPolynomial& p);

// constant term of the longest twist of p_eta(gamma), computed both by
// expansion and by the closed-form product, cross-checked; always nonzero
Rat fw0_p_constant(const RootSystem& rs, const Weight& gamma);

// order bookkeeping of a twist: ord F_w(d) = ord d + <mu - w(mu), rho^vee>
// for an operator of degree mu
Int order_twist(const RootSystem& rs, const Weight& mu, const Int& order, const WeylElement& w);

// substitution h -> sum_j <gens[order_j]*, h> y_j onto the grading variables;
// kills the annihilator of the starred generators
UhPolynomial psi_gamma(const RootSystem& rs, const UhPolynomial& p, const GammaMonoid& monoid);

/// Invariant data of the degree -1 operator module on the orbit closure of a
/// highest weight vector: order k(gamma) and module dimension dim V(gamma).
struct ExoticOrderReport {
  Int k;
  int degree = -1;
  Int module_dim;
};

ExoticOrderReport exotic_order_report(const RootSystem& rs, const Weight& gamma,
                                      const GammaMonoid& monoid);

enum class Surjectivity { Surjective, NotSurjective, CriterionNotApplicable };

std::string to_string(Surjectivity s);

/// Minimal nilpotent orbit summary for a simple type: k of the highest root,
/// the Coxeter number h, the identity k = 2(h-1), and whether restriction of
/// invariant operators onto the orbit closure is surjective (settled for the
/// classical families only).
struct MinOrbitReport {
  ComponentSpec component;
  Weight highest_root;
  Int k;
  long long coxeter_h;
  long long two_h_minus_2;
  Surjectivity surjectivity;
};

MinOrbitReport min_orbit_report(const ComponentSpec& component);

// no common zero of the family { F_w(P_eta) : w in W }: every choice of one
// affine-linear factor per group element is an inconsistent linear system
bool nullstellensatz_check(const RootSystem& rs, const Weight& eta, const Int& cap,
                           std::size_t weyl_cap = 1000000);

}  // namespace baf
