#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvl/errors.hpp"
#include "mvl/fuzzy.hpp"
#include "support.hpp"

using namespace mvl;

namespace {
ASet vec(std::initializer_list<Value> xs) {
  ASet f(static_cast<Index>(xs.size()));
  Index i = 0;
  for (Value x : xs) f(i++) = x;
  return f;
}
}  // namespace

TEST_CASE("subsethood") {
  const auto L = luk_chain(11);
  const ASet f = vec({7, 2}), g = vec({5, 9});
  CHECK(subsethood(L, f, f) == 10);
  CHECK(subsethood(L, f, g) == 8);
  CHECK(subsethood(L, vec({1, 2}), vec({3, 2})) == 10);
  CHECK_THROWS_AS(subsethood(L, f, vec({1, 2, 3})), DomainMismatch);
}

TEST_CASE("singletons and decomposition") {
  const auto L = luk_chain(11);
  CHECK((singleton(L, 10, 0, 2) == vec({10, 0})).all());
  CHECK((singleton(L, 0, 0, 2) == vec({0, 0})).all());

  gen::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = gen::size(rng, 1, 5);
    const ASet f = gen::set(L, n, rng);
    CHECK((join_of_singletons(L, decompose(L, f), n) == f).all());
  }
}

TEST_CASE("relation liftings") {
  const auto L = luk_chain(11);
  ARelation ones = ARelation::Constant(2, 3, 10);
  gen::Rng rng(3);
  const ASet u = gen::set(L, 3, rng);
  CHECK((r0(L, ones, u) == 10).all());
  CHECK((r0(L, gen::relation(L, 2, 3, rng), ASet::Zero(3)) == 10).all());

  ARelation delta = ARelation::Zero(2, 2);
  delta(0, 0) = delta(1, 1) = 10;
  CHECK((r0(L, delta, vec({10, 5})) == vec({5, 0})).all());

  const oracle::Luk A(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Index r = gen::size(rng, 1, 4), c = gen::size(rng, 1, 4);
    const ARelation R = gen::relation(L, r, c, rng);
    const ASet uw = gen::set(L, c, rng), fu = gen::set(L, r, rng);
    CHECK((r0(L, R, uw) == oracle::r0(A, R, uw)).all());
    CHECK((r1(L, R, fu) == oracle::r1(A, R, fu)).all());
  }
}

TEST_CASE("lift_I and lift_J") {
  const auto L = luk_chain(11);
  ARelation R(1, 2);
  R << 10, 0;
  const ARelation I = lift_I(L, R);
  REQUIRE(I.rows() == 11);
  CHECK(I(3, 0) == 3);   // 1 -> 0.3
  CHECK(I(3, 1) == 10);  // 0 -> 0.3
  CHECK(I(10, 0) == 10);
  const ARelation J = lift_J(L, R);
  REQUIRE(J.cols() == 22);
  CHECK(J(0, product_index(3, 0, 2)) == 3);
  CHECK(J(0, product_index(3, 1, 2)) == 10);
}

TEST_CASE("reflexivity and carrier checks") {
  const auto L = luk_chain(3);
  ARelation E = ARelation::Constant(2, 2, 1);
  CHECK_FALSE(is_reflexive(L, E));
  E(0, 0) = E(1, 1) = 2;
  CHECK(is_reflexive(L, E));
  E(0, 1) = 3;
  CHECK_THROWS_AS(check_values(L, E), DomainError);
}
