#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "baf/exact.hpp"

namespace baf {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Int>& entries() const { return entries_; }

  void swap_rows(std::size_t a, std::size_t b);
  // row a -= q * row b
  void sub_row(std::size_t a, std::size_t b, const Int& q);
  void negate_row(std::size_t a);

  std::vector<Int> row(std::size_t i) const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> entries_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// Bareiss fraction-free determinant; matrix must be square.
Int determinant(const IntMatrix& m);

struct HnfResult {
  IntMatrix h;  // row Hermite normal form, same shape as input
  IntMatrix u;  // unimodular, h = u * m
};

// Row echelon with positive pivots and entries above each pivot reduced into
// [0, pivot). The form is canonical, so two matrices span the same row
// lattice iff their HNFs agree.
HnfResult hermite_normal_form(const IntMatrix& m);

struct SnfResult {
  std::vector<Int> invariant_factors;  // d1 | d2 | ... , all positive
  std::size_t rank = 0;
};

// Invariant factors of m: the cokernel of m (columns as relations) is
// (+) Z/d_i  (+)  Z^(rows - rank).
SnfResult smith_normal_form(const IntMatrix& m);

// Any exact solution x of a*x = b over the rationals, or nullopt when the
// system is inconsistent. Free variables are set to zero.
std::optional<std::vector<Rat>> solve_rational(const std::vector<std::vector<Rat>>& a,
                                               const std::vector<Rat>& b);

}  // namespace baf
