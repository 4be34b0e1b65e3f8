#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "baf/exact.hpp"
#include "baf/intmatrix.hpp"

namespace baf {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct ComponentSpec {
  Family family;
  int rank;

  bool operator==(const ComponentSpec&) const = default;
};

std::string to_string(const ComponentSpec& c);

// "A2", "b3", "A1xA1" -- case-insensitive, 'x' separates product factors
std::vector<ComponentSpec> parse_type_spec(std::string_view spec);

/// A weight in fundamental-weight coordinates: lambda = sum n_i w_i.
/// Dominant iff all coordinates are >= 0.
using Weight = std::vector<long long>;

/// An element of the Cartan subalgebra in simple-coroot coordinates.
using CorootVector = std::vector<Rat>;

struct PositiveRoot {
  std::vector<long long> simple_coords;  // as a sum of simple roots
  Weight fund_coords;                    // the same root as a weight
  std::vector<long long> coroot_coords;  // its coroot in simple coroots
  long long height;                      // sum of simple_coords
  int component;

  CorootVector coroot() const {
    CorootVector cv;
    cv.reserve(coroot_coords.size());
    for (long long c : coroot_coords) cv.push_back(to_rat(c));
    return cv;
  }
};

/// Immutable Cartan datum for a product of simple types. All data is exact;
/// coordinates follow one convention throughout: weights in fundamental
/// coordinates, Cartan entry (i, j) = <alpha_j, alpha_i^vee>, so column j of
/// the Cartan matrix is alpha_j written as a weight.
class RootSystem {
 public:
  static RootSystem build(const std::vector<ComponentSpec>& components);
  static RootSystem build(std::string_view type_spec);

  int rank() const { return rank_; }
  const std::vector<ComponentSpec>& components() const { return components_; }
  std::string type_string() const;

  long long cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i) * rank_ + j]; }

  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }

  Weight rho() const { return Weight(rank_, 1); }
  CorootVector rho_check() const;
  const std::vector<long long>& two_rho_check() const { return two_rho_check_; }

  const std::vector<Weight>& highest_roots() const { return highest_roots_; }
  long long coxeter_number(int component) const;

  // exponent multiset (sorted ascending), derived from the height distribution
  const std::vector<long long>& exponents() const { return exponents_; }
  std::vector<long long> degrees() const;  // m_i + 1
  Int weyl_order() const;                  // product of the degrees

  Weight simple_root(int i) const;  // 1-based
  bool is_dominant(const Weight& lam) const;

  Rat pairing(const Weight& lam, const CorootVector& cv) const;
  // fast path for integral coroot coordinates
  long long pairing_int(const Weight& lam, const std::vector<long long>& coroot) const;

  // s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i, 1-based index
  Weight apply_simple_reflection(int i, const Weight& lam) const;

  // lambda* = -w0(lambda); permutes the fundamental weights
  Weight star(const Weight& lam) const;

  // dim V(lambda) by the product formula over positive coroots; exact
  Int weyl_dimension(const Weight& dominant_lam) const;

  // simple-root coordinates of a weight (rational in general)
  std::vector<Rat> simple_root_coords(const Weight& lam) const;

 private:
  RootSystem() = default;
  void generate_positive_roots(const std::vector<long long>& norms);
  void compute_exponents();
  void compute_star_permutation();
  void check_rank(const Weight& lam, const char* where) const;

  std::vector<ComponentSpec> components_;
  int rank_ = 0;
  std::vector<long long> cartan_;  // rank x rank, row-major
  std::vector<int> component_of_node_;
  std::vector<PositiveRoot> positive_roots_;
  std::vector<long long> two_rho_check_;
  std::vector<Weight> highest_roots_;
  std::vector<long long> exponents_;
  std::vector<long long> coxeter_numbers_;  // per component
  std::vector<int> star_perm_;              // star(w_i) = w_{star_perm_[i]}
};

}  // namespace baf
