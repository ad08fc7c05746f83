#include <catch2/catch_amalgamated.hpp>

#include "geolie/lie_algebra.hpp"
#include "geolie/random_alg.hpp"
#include "geolie/rng.hpp"
#include "support/matchers.hpp"

using namespace geolie;

namespace {

LieAlgebra heisenberg3() {
  LieAlgebra alg = detail::blank_algebra(3);
  alg.structure[{0, 1}] = RatVec{Rat(0), Rat(0), Rat(1)};
  return alg;
}

LieAlgebra solvable2() {
  LieAlgebra alg = detail::blank_algebra(2);
  alg.structure[{0, 1}] = RatVec{Rat(0), Rat(1)};
  return alg;
}

}  // namespace

TEST_CASE("basis brackets are antisymmetric with zero diagonal") {
  auto alg = heisenberg3();
  CHECK(alg.bracket_basis(0, 1) == RatVec{Rat(0), Rat(0), Rat(1)});
  CHECK(alg.bracket_basis(1, 0) == RatVec{Rat(0), Rat(0), Rat(-1)});
  CHECK(is_zero_vec(alg.bracket_basis(1, 1)));
  CHECK(is_zero_vec(alg.bracket_basis(0, 2)));
}

TEST_CASE("the bracket is bilinear") {
  auto alg = detail::filiform(5);
  Rng rng(0xC4D5E6F708192A3Bull);
  for (int trial = 0; trial < 25; ++trial) {
    RatVec x, y, z;
    for (int i = 0; i < 5; ++i) {
      x.push_back(rng.next_rational(3, 2));
      y.push_back(rng.next_rational(3, 2));
      z.push_back(rng.next_rational(3, 2));
    }
    const Rat c = rng.next_rational(3, 2);
    auto lhs = alg.bracket(add_vec(x, scale_vec(c, y)), z);
    auto rhs = add_vec(alg.bracket(x, z), scale_vec(c, alg.bracket(y, z)));
    REQUIRE(lhs == rhs);
    REQUIRE(alg.bracket(z, x) == scale_vec(Rat(-1), alg.bracket(x, z)));
  }
}

TEST_CASE("structure validation accepts the classical examples") {
  CHECK_NOTHROW(heisenberg3().validate());
  CHECK_NOTHROW(detail::filiform(7).validate());
  CHECK_NOTHROW(solvable2().validate());
}

TEST_CASE("a broken Jacobi identity is reported with the offending triple") {
  LieAlgebra alg = detail::blank_algebra(3);
  alg.basis_labels = {"A", "B", "C"};
  alg.structure[{0, 1}] = RatVec{Rat(0), Rat(0), Rat(1)};
  alg.structure[{0, 2}] = RatVec{Rat(1), Rat(0), Rat(0)};
  try {
    alg.validate();
    FAIL("expected a Jacobi failure");
  } catch (const Error& e) {
    CHECK(e.code() == Err::JacobiViolation);
    CHECK(std::string(e.what()).find("(A, B, C)") != std::string::npos);
  }
}

TEST_CASE("lower central series ranks and nilpotency step") {
  auto series = lower_central_series(heisenberg3());
  REQUIRE(series.size() == 3);
  CHECK(series[0].rank() == 3);
  CHECK(series[1].rank() == 1);
  CHECK(series[2].rank() == 0);
  CHECK(nilpotency_step(heisenberg3()) == 2);

  auto fil = lower_central_series(detail::filiform(5));
  std::vector<int> ranks;
  for (const auto& s : fil) ranks.push_back(s.rank());
  CHECK(ranks == std::vector<int>{5, 3, 2, 1, 0});
  CHECK(nilpotency_step(detail::filiform(5)) == 4);

  CHECK(nilpotency_step(detail::blank_algebra(3)) == 1);
}

TEST_CASE("solvable but non-nilpotent algebras are detected") {
  auto alg = solvable2();
  CHECK_FALSE(is_nilpotent(alg));
  CHECK_THROWS_MATCHES(nilpotency_step(alg), Error, ErrorCodeIs(Err::NotNilpotent));
  CHECK(is_nilpotent(heisenberg3()));
  CHECK(is_nilpotent(detail::blank_algebra(1)));
}

TEST_CASE("bracket generation depends on the chosen polarization") {
  auto alg = heisenberg3();
  auto xy = make_subspace(3, {alg.basis_vector(0), alg.basis_vector(1)});
  auto xz = make_subspace(3, {alg.basis_vector(0), alg.basis_vector(2)});
  CHECK(is_bracket_generating(alg, xy));
  CHECK_FALSE(is_bracket_generating(alg, xz));
  CHECK(is_bracket_generating(alg, full_subspace(3)));

  auto flag = polarization_flag(alg, xy);
  REQUIRE(flag.size() == 2);
  CHECK(flag[0].rank() == 2);
  CHECK(flag[1].rank() == 3);
}

TEST_CASE("unimodularity via exact adjoint traces") {
  CHECK(is_unimodular(heisenberg3()));
  CHECK(is_unimodular(detail::filiform(6)));
  CHECK_FALSE(is_unimodular(solvable2()));
}

TEST_CASE("center computation") {
  auto z = center(heisenberg3());
  CHECK(z.rank() == 1);
  CHECK(contains(z, heisenberg3().basis_vector(2)));
  CHECK(center(detail::blank_algebra(4)).rank() == 4);
  CHECK(center(detail::filiform(5)).rank() == 1);
}

TEST_CASE("group specifications validate their lattice rank") {
  GroupSpec spec;
  spec.algebra = heisenberg3();
  spec.polarization = full_subspace(3);
  spec.lattice_rank = 1;
  CHECK_NOTHROW(spec.validate());
  spec.lattice_rank = 2;
  CHECK_THROWS_MATCHES(spec.validate(), Error, ErrorCodeIs(Err::MalformedSpec));
  spec.lattice_rank = -1;
  CHECK_THROWS_MATCHES(spec.validate(), Error, ErrorCodeIs(Err::MalformedSpec));
}

TEST_CASE("random nilpotent algebras satisfy the axioms") {
  Rng rng(0x3E8F1A2B4C5D6E7Full);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = rng.next_int(3, 7);
    auto alg = random_nilpotent_algebra(rng, dim);
    REQUIRE(alg.dim == dim);
    REQUIRE_NOTHROW(alg.validate());
    REQUIRE(is_nilpotent(alg));
    auto delta = random_bracket_generating_polarization(rng, alg);
    REQUIRE(is_bracket_generating(alg, delta));
  }
}

TEST_CASE("base change preserves the axioms and the invariants") {
  Rng rng(0x91A2B3C4D5E6F700ull);
  auto alg = detail::filiform(4);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = random_unimodular_matrix(rng, 4, 6);
    auto moved = transform_algebra(alg, p);
    REQUIRE_NOTHROW(moved.validate());
    CHECK(nilpotency_step(moved) == nilpotency_step(alg));
    CHECK(is_unimodular(moved));
  }
}
