#include "baf/intmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace baf {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::sub_row(std::size_t a, std::size_t b, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) -= q * at(b, j);
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return std::vector<Int>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return Int(1);
  IntMatrix a = m;
  int sign = 1;
  Int prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return Int(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

HnfResult hermite_normal_form(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    throw std::invalid_argument("hermite_normal_form: empty matrix");
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  const std::size_t rows = m.rows(), cols = m.cols();

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // gcd elimination below the pivot
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = pivot_row; i < rows; ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == rows || cmp(abs(h.at(i, col)), abs(h.at(best, col))) < 0) best = i;
      }
      if (best == rows) break;  // column is zero below pivot_row
      h.swap_rows(pivot_row, best);
      u.swap_rows(pivot_row, best);
      bool cleared = true;
      for (std::size_t i = pivot_row + 1; i < rows; ++i) {
        if (h.at(i, col) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(pivot_row, col).get_mpz_t());
        h.sub_row(i, pivot_row, q);
        u.sub_row(i, pivot_row, q);
        if (h.at(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h.at(pivot_row, col) == 0) continue;
    if (h.at(pivot_row, col) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(pivot_row, col).get_mpz_t());
      h.sub_row(i, pivot_row, q);
      u.sub_row(i, pivot_row, q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

SnfResult smith_normal_form(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    throw std::invalid_argument("smith_normal_form: empty matrix");
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();

  auto sub_col = [&](std::size_t c1, std::size_t c2, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows; ++i) a.at(i, c1) -= q * a.at(i, c2);
  };
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a.at(i, c1), a.at(i, c2));
  };

  std::vector<Int> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // locate a smallest nonzero entry in the trailing submatrix
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a.at(i, j) == 0) continue;
        if (pi == rows || cmp(abs(a.at(i, j)), abs(a.at(pi, pj))) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;  // trailing submatrix is zero
    a.swap_rows(t, pi);
    swap_cols(t, pj);

    bool done = false;
    while (!done) {
      done = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = a.at(i, t) / a.at(t, t);
        a.sub_row(i, t, q);
        if (a.at(i, t) != 0) {
          a.swap_rows(t, i);
          done = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = a.at(t, j) / a.at(t, t);
        sub_col(j, t, q);
        if (a.at(t, j) != 0) {
          swap_cols(t, j);
          done = false;
        }
      }
    }
    diag.push_back(abs(a.at(t, t)));
    ++t;
  }

  // normalize the diagonal into a divisibility chain: diag(a, b) is
  // equivalent to diag(gcd(a, b), lcm(a, b))
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] == 0) continue;
      Int g = gcd(diag[i], diag[j]);
      Int l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }

  SnfResult out;
  out.rank = diag.size();
  out.invariant_factors = std::move(diag);
  return out;
}

std::optional<std::vector<Rat>> solve_rational(const std::vector<std::vector<Rat>>& a,
                                               const std::vector<Rat>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_rational: rhs size mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& r : a)
    if (r.size() != cols) throw std::invalid_argument("solve_rational: ragged matrix");

  std::vector<std::vector<Rat>> w(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    w[i] = a[i];
    w[i].push_back(b[i]);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && w[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(w[r], w[p]);
    Rat inv = w[r][c];
    for (std::size_t j = c; j <= cols; ++j) w[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || w[i][c] == 0) continue;
      Rat f = w[i][c];
      for (std::size_t j = c; j <= cols; ++j) w[i][j] -= f * w[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (w[i][cols] != 0) return std::nullopt;

  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = w[i][cols];
  return x;
}

}  // namespace baf
