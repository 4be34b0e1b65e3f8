#include <doctest.h>

#include <random>

#include "baf/svariety.hpp"

using namespace baf;

TEST_CASE("gamma_lattice examples") {
  SUBCASE("A1 with generator 2: Z/2 quotient") {
    auto rs = RootSystem::build("A1");
    auto mono = gamma_lattice(rs, {Weight{2}});
    CHECK(mono.lattice_rank == 1);
    REQUIRE(mono.invariant_factors.size() == 1);
    CHECK(mono.invariant_factors[0] == 2);
    CHECK(mono.q_gamma.torus_rank == 0);
    REQUIRE(mono.q_gamma.cyclic_orders.size() == 1);
    CHECK(mono.q_gamma.cyclic_orders[0] == 2);
    CHECK(mono.q_gamma.to_string() == "Z/2");
  }
  SUBCASE("A2 with the highest root: one torus factor") {
    auto rs = RootSystem::build("A2");
    auto mono = gamma_lattice(rs, {Weight{1, 1}});
    CHECK(mono.lattice_rank == 1);
    REQUIRE(mono.invariant_factors.size() == 1);
    CHECK(mono.invariant_factors[0] == 1);
    CHECK(mono.q_gamma.torus_rank == 1);
    CHECK(mono.q_gamma.cyclic_orders.empty());
    CHECK(mono.q_gamma.to_string() == "(C*)");
  }
  SUBCASE("A2 with both fundamental weights: trivial quotient") {
    auto rs = RootSystem::build("A2");
    auto mono = gamma_lattice(rs, {Weight{1, 0}, Weight{0, 1}});
    CHECK(mono.lattice_rank == 2);
    CHECK(mono.q_gamma.trivial());
  }
  SUBCASE("rejects bad generators") {
    auto rs = RootSystem::build("A2");
    CHECK_THROWS_AS(gamma_lattice(rs, {Weight{-1, 0}}), std::domain_error);
    CHECK_THROWS_AS(gamma_lattice(rs, {Weight{0, 0}}), std::domain_error);
    CHECK_THROWS_AS(gamma_lattice(rs, {Weight{1, 0}, Weight{1, 0}}), std::domain_error);
  }
}

TEST_CASE("full-rank generator matrix: invariant factors multiply to |det|") {
  auto rs = RootSystem::build("A2");
  auto mono = gamma_lattice(rs, {Weight{1, 2}, Weight{2, 1}});
  REQUIRE(mono.lattice_rank == 2);
  Int prod(1);
  for (const auto& d : mono.invariant_factors) prod *= d;
  // |det [[1,2],[2,1]]| = 3
  CHECK(prod == 3);
  CHECK(mono.q_gamma.to_string() == "Z/3");
}

TEST_CASE("monoid membership") {
  auto rs = RootSystem::build("A1");
  std::vector<Weight> gens{Weight{2}, Weight{3}};
  SUBCASE("zero is a member with zero coefficients") {
    auto cert = monoid_membership(rs, gens, Weight{0});
    REQUIRE(cert.member);
    CHECK(cert.coefficients == std::vector<long long>{0, 0});
  }
  SUBCASE("7 = 2 + 2 + 3") {
    auto cert = monoid_membership(rs, gens, Weight{7});
    REQUIRE(cert.member);
    CHECK(cert.coefficients[0] * 2 + cert.coefficients[1] * 3 == 7);
  }
  SUBCASE("1 is out of budget") {
    CHECK(!monoid_membership(rs, gens, Weight{1}).member);
  }
  SUBCASE("every generator is a member by a unit vector") {
    auto rs2 = RootSystem::build("B2");
    std::vector<Weight> g2{Weight{1, 0}, Weight{0, 2}, Weight{2, 1}};
    for (std::size_t j = 0; j < g2.size(); ++j) {
      auto cert = monoid_membership(rs2, g2, g2[j]);
      REQUIRE(cert.member);
      Weight sum(rs2.rank(), 0);
      for (std::size_t k = 0; k < g2.size(); ++k)
        for (int c = 0; c < rs2.rank(); ++c) sum[c] += cert.coefficients[k] * g2[k][c];
      CHECK(sum == g2[j]);
    }
  }
}

TEST_CASE("check_saturation verdicts") {
  SUBCASE("A1 single generator 2 holds with Hilbert basis {2}") {
    auto rs = RootSystem::build("A1");
    auto verdict = check_saturation(rs, {Weight{2}});
    CHECK(verdict.status == SaturationStatus::Holds);
    REQUIRE(verdict.hilbert_basis.size() == 1);
    CHECK(verdict.hilbert_basis[0] == Weight{2});
  }
  SUBCASE("A1 generators 2 and 3 fail with witness 1") {
    auto rs = RootSystem::build("A1");
    auto verdict = check_saturation(rs, {Weight{2}, Weight{3}});
    CHECK(verdict.status == SaturationStatus::Fails);
    REQUIRE(verdict.witness.has_value());
    CHECK(*verdict.witness == Weight{1});
    // witness certificate
    CHECK(rs.is_dominant(*verdict.witness));
    CHECK(!monoid_membership(rs, {Weight{2}, Weight{3}}, *verdict.witness).member);
  }
  SUBCASE("A2 skew pair fails") {
    // lattice of (1,2) and (2,1) contains (3,0), the monoid does not
    auto rs = RootSystem::build("A2");
    auto verdict = check_saturation(rs, {Weight{1, 2}, Weight{2, 1}});
    CHECK(verdict.status == SaturationStatus::Fails);
    REQUIRE(verdict.witness.has_value());
    CHECK(!monoid_membership(rs, {Weight{1, 2}, Weight{2, 1}}, *verdict.witness).member);
  }
  SUBCASE("tiny cap turns the verdict inconclusive") {
    auto rs = RootSystem::build("A2");
    auto verdict = check_saturation(rs, {Weight{1, 1}}, /*level_cap=*/1);
    CHECK(verdict.status == SaturationStatus::Inconclusive);
  }
}

TEST_CASE("single dominant generators always hold") {
  std::mt19937 rng(61);
  for (const char* type : {"A1", "A2", "B2", "A3", "B3", "A4", "D4"}) {
    auto rs = RootSystem::build(type);
    std::uniform_int_distribution<long long> dist(0, rs.rank() >= 4 ? 1 : 3);
    for (int t = 0; t < 12; ++t) {
      Weight g(rs.rank());
      bool nonzero = false;
      for (auto& v : g) {
        v = dist(rng);
        nonzero |= v != 0;
      }
      if (!nonzero) g[0] = 1;
      auto verdict = check_saturation(rs, {g}, /*level_cap=*/128);
      CHECK(verdict.status == SaturationStatus::Holds);
    }
  }
}

TEST_CASE("grading lattice membership") {
  auto rs = RootSystem::build("A2");
  std::vector<Weight> gens{Weight{1, 1}};
  SUBCASE("negated starred generator is in the lattice") {
    CHECK(grading_lattice_membership(rs, gens, Weight{-1, -1}));
  }
  SUBCASE("a fundamental weight is not") {
    CHECK(!grading_lattice_membership(rs, gens, Weight{1, 0}));
  }
  SUBCASE("twice the starred generator is") {
    CHECK(grading_lattice_membership(rs, gens, Weight{2, 2}));
  }
  SUBCASE("asymmetric generator uses the starred lattice") {
    // star of (2,0) in A2 is (0,2)
    std::vector<Weight> skew{Weight{2, 0}};
    CHECK(grading_lattice_membership(rs, skew, Weight{0, 2}));
    CHECK(grading_lattice_membership(rs, skew, Weight{0, -4}));
    CHECK(!grading_lattice_membership(rs, skew, Weight{2, 0}));
  }
}

TEST_CASE("dual basis") {
  SUBCASE("A2 highest root") {
    auto rs = RootSystem::build("A2");
    auto db = dual_basis(rs, {Weight{1, 1}});
    REQUIRE(db.x.size() == 1);
    CHECK(rs.pairing(rs.star(Weight{1, 1}), db.x[0]) == 1);
  }
  SUBCASE("A1 generator 2 needs a half coroot") {
    auto rs = RootSystem::build("A1");
    auto db = dual_basis(rs, {Weight{2}});
    REQUIRE(db.x.size() == 1);
    CHECK(db.x[0][0] == make_rat(Int(1), Int(2)));
  }
  SUBCASE("full rank pair in A2") {
    auto rs = RootSystem::build("A2");
    auto db = dual_basis(rs, {Weight{1, 0}, Weight{0, 1}});
    REQUIRE(db.x.size() == 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        Rat want = i == j ? Rat(1) : Rat(0);
        CHECK(rs.pairing(rs.star(db.generator_order[i] == 0 ? Weight{1, 0} : Weight{0, 1}),
                         db.x[j]) == want);
      }
  }
  SUBCASE("dependent generators are skipped in the spanning order") {
    auto rs = RootSystem::build("A2");
    auto db = dual_basis(rs, {Weight{1, 1}, Weight{2, 2}, Weight{1, 0}});
    REQUIRE(db.generator_order.size() == 2);
    CHECK(db.generator_order[0] == 0);
    CHECK(db.generator_order[1] == 2);
  }
}
