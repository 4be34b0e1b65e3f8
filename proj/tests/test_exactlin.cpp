#include <doctest.h>

#include <random>

#include "baf/intmatrix.hpp"

using namespace baf;

namespace {

// independent oracle for the 1-column gcd case
long long euclid_gcd(long long a, long long b) {
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

IntMatrix from_ll(std::size_t rows, std::size_t cols, const std::vector<long long>& vals) {
  std::vector<Int> entries;
  entries.reserve(vals.size());
  for (long long v : vals) entries.push_back(to_int(v));
  return IntMatrix(rows, cols, std::move(entries));
}

bool is_row_hnf(const IntMatrix& h) {
  long long prev_pivot = -1;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && h.at(i, p) == 0) ++p;
    if (p == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;  // nonzero row after a zero row
    if (static_cast<long long>(p) <= prev_pivot) return false;
    prev_pivot = static_cast<long long>(p);
    if (h.at(i, p) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h.at(k, p) < 0 || h.at(k, p) >= h.at(i, p)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hnf 1x1") {
  auto [h, u] = hermite_normal_form(from_ll(1, 1, {2}));
  CHECK(h.at(0, 0) == 2);
  CHECK(u.at(0, 0) == 1);
}

TEST_CASE("hnf already reduced row") {
  auto [h, u] = hermite_normal_form(from_ll(1, 2, {1, 1}));
  CHECK(h.at(0, 0) == 1);
  CHECK(h.at(0, 1) == 1);
}

TEST_CASE("hnf gcd collapse") {
  // rows (2,0) and (3,0) span gcd(2,3) Z x 0
  CHECK(euclid_gcd(2, 3) == 1);
  auto [h, u] = hermite_normal_form(from_ll(2, 2, {2, 0, 3, 0}));
  CHECK(h.at(0, 0) == 1);
  CHECK(h.at(0, 1) == 0);
  CHECK(h.at(1, 0) == 0);
  CHECK(h.at(1, 1) == 0);
  CHECK(abs(determinant(u)) == 1);
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long long> dist(-9, 9);
  std::uniform_int_distribution<std::size_t> shape(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = shape(rng), c = shape(rng);
    std::vector<long long> vals(r * c);
    for (auto& v : vals) v = dist(rng);
    IntMatrix m = from_ll(r, c, vals);
    auto [h, u] = hermite_normal_form(m);
    CHECK(abs(determinant(u)) == 1);
    CHECK(mat_mul(u, m) == h);
    CHECK(is_row_hnf(h));
  }
}

TEST_CASE("snf examples") {
  SUBCASE("single 2 gives Z/2") {
    auto snf = smith_normal_form(from_ll(1, 1, {2}));
    REQUIRE(snf.rank == 1);
    CHECK(snf.invariant_factors[0] == 2);
  }
  SUBCASE("column (1,1) in Z^2 gives free cokernel") {
    auto snf = smith_normal_form(from_ll(2, 1, {1, 1}));
    REQUIRE(snf.rank == 1);
    CHECK(snf.invariant_factors[0] == 1);
  }
  SUBCASE("identity") {
    auto snf = smith_normal_form(IntMatrix::identity(2));
    REQUIRE(snf.rank == 2);
    CHECK(snf.invariant_factors[0] == 1);
    CHECK(snf.invariant_factors[1] == 1);
  }
}

TEST_CASE("snf divisibility chain holds on random matrices") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long long> dist(-12, 12);
  std::uniform_int_distribution<std::size_t> shape(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = shape(rng), c = shape(rng);
    std::vector<long long> vals(r * c);
    for (auto& v : vals) v = dist(rng);
    auto snf = smith_normal_form(from_ll(r, c, vals));
    for (std::size_t i = 0; i + 1 < snf.invariant_factors.size(); ++i) {
      CHECK(snf.invariant_factors[i] > 0);
      CHECK(snf.invariant_factors[i + 1] % snf.invariant_factors[i] == 0);
    }
  }
}

TEST_CASE("snf of a diagonal with reversed divisibility") {
  auto snf = smith_normal_form(from_ll(2, 2, {4, 0, 0, 6}));
  REQUIRE(snf.rank == 2);
  CHECK(snf.invariant_factors[0] == 2);
  CHECK(snf.invariant_factors[1] == 12);
}

TEST_CASE("solve_rational") {
  SUBCASE("1x1") {
    auto x = solve_rational({{Rat(1)}}, {Rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
  }
  SUBCASE("underdetermined, any solution accepted") {
    auto x = solve_rational({{Rat(1), Rat(1)}}, {Rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] + (*x)[1] == 1);
  }
  SUBCASE("inconsistent") {
    auto x = solve_rational({{Rat(1)}, {Rat(1)}}, {Rat(1), Rat(2)});
    CHECK(!x.has_value());
  }
}

TEST_CASE("solve_rational residual is exactly zero on random systems") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long long> dist(-6, 6);
  std::uniform_int_distribution<std::size_t> shape(1, 4);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t r = shape(rng), c = shape(rng);
    std::vector<std::vector<Rat>> a(r, std::vector<Rat>(c));
    for (auto& row : a)
      for (auto& v : row) v = to_rat(dist(rng));
    // build a guaranteed-consistent rhs from a random solution
    std::vector<Rat> x0(c);
    for (auto& v : x0) v = make_rat(to_int(dist(rng)), Int(2));
    std::vector<Rat> b(r, Rat(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) b[i] += a[i][j] * x0[j];
    auto x = solve_rational(a, b);
    REQUIRE(x.has_value());
    for (std::size_t i = 0; i < r; ++i) {
      Rat acc(0);
      for (std::size_t j = 0; j < c; ++j) acc += a[i][j] * (*x)[j];
      CHECK(acc == b[i]);
    }
  }
}
