#pragma once

#include <cstddef>
#include <vector>

#include "baf/rootsystem.hpp"

namespace baf {

class WeylElement;
struct StraightenResult;

/// An element of the Weyl group: a reduced word in the simple reflections
/// (1-based indices, leftmost factor applied last) together with the matrix
/// of its action on fundamental-weight coordinates. Elements compare by
/// matrix; words are canonical but not part of the identity of an element.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simple(const RootSystem& rs, int i);
  static WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

  int rank() const { return rank_; }
  const std::vector<int>& word() const { return word_; }
  const std::vector<long long>& matrix() const { return mat_; }
  bool is_identity() const { return word_.empty(); }

  Weight apply(const Weight& lam) const;
  Weight apply_inverse(const Weight& lam) const;
  // dual action on the Cartan: <lambda, w(h)> = <w^{-1}(lambda), h>
  CorootVector apply_coroot(const CorootVector& h) const;

  WeylElement inverse() const;

  bool operator==(const WeylElement& other) const { return mat_ == other.mat_; }
  bool operator!=(const WeylElement& other) const { return !(*this == other); }

  const RootSystem& root_system() const { return *rs_; }

 private:
  friend WeylElement compose(const WeylElement& v, const WeylElement& w);
  friend StraightenResult straighten(const RootSystem& rs, const Weight& xi);
  friend std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::size_t cap);

  WeylElement(const RootSystem& rs, std::vector<long long> mat, std::vector<long long> inv,
              std::vector<int> word)
      : rs_(&rs), rank_(rs.rank()), mat_(std::move(mat)), inv_(std::move(inv)),
        word_(std::move(word)) {}

  const RootSystem* rs_;
  int rank_;
  std::vector<long long> mat_;  // rank x rank, row-major
  std::vector<long long> inv_;
  std::vector<int> word_;
};

// v followed by w on the right: (v w)(x) = v(w(x)); the stored word is
// recomputed in canonical reduced form
WeylElement compose(const WeylElement& v, const WeylElement& w);

Weight reflect(const RootSystem& rs, int i, const Weight& lam);

// inversion count #{alpha > 0 : w(alpha) < 0}; equals w.word().size()
std::size_t length(const RootSystem& rs, const WeylElement& w);

WeylElement longest_element(const RootSystem& rs);

// dot action w . xi = w(xi + rho) - rho
Weight dot(const RootSystem& rs, const WeylElement& w, const Weight& xi);

struct StraightenResult {
  bool singular;    // xi pairs to zero with some positive coroot
  Weight dominant;  // the unique dominant W-conjugate of xi
  WeylElement w;    // w(xi) = dominant, reduced word from smallest-index descents
  std::size_t steps;  // reflections performed = #{alpha^vee > 0 : <xi, alpha^vee> < 0}
};

StraightenResult straighten(const RootSystem& rs, const Weight& xi);

// coefficients of prod_i (1 + q + ... + q^(d_i - 1)); entry i is |W(i)|
std::vector<Int> poincare_coefficients(const RootSystem& rs);

// all elements, sorted by (length, word); refuses when |W| > cap
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::size_t cap = 1000000);

}  // namespace baf
