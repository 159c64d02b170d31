#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvl/algebra.hpp"
#include "mvl/errors.hpp"

#include <random>

using namespace mvl;
using namespace mvl::algebra;

namespace {
Map identity(int n) {
  Map m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  return m;
}

// Every pair checked directly, without is_normal.
bool joins_preserved(const Map& op, const FiniteLattice& s, const FiniteLattice& d) {
  if (op[static_cast<std::size_t>(s.bottom())] != d.bottom()) return false;
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (op[static_cast<std::size_t>(s.join(a, b))] != d.join(op[static_cast<std::size_t>(a)], op[static_cast<std::size_t>(b)]))
        return false;
  return true;
}
}  // namespace

TEST_CASE("lattice catalogue") {
  // Lattices up to isomorphism: 1, 1, 1, 2, 5, 15 for sizes 1..6.
  CHECK(all_lattices(4).size() == 5);
  CHECK(all_lattices(5).size() == 10);
  CHECK(all_lattices(6).size() == 25);
  CHECK(FiniteLattice::boolean(2).is_distributive());
  CHECK(FiniteLattice::chain(5).is_distributive());
  CHECK_FALSE(FiniteLattice::pentagon().is_distributive());
  CHECK_FALSE(FiniteLattice::diamond(3).is_distributive());

  BoolTable antichain(2, 2);
  antichain << true, false, false, true;
  CHECK_THROWS_AS(FiniteLattice::from_order(antichain), InvalidLattice);
}

TEST_CASE("normal maps") {
  for (const auto& l : all_lattices(4)) CHECK(is_normal(identity(l.size()), l, l));
  const auto two = FiniteLattice::chain(2);
  CHECK_FALSE(is_normal(Map{1, 1}, two, two));

  const auto m2 = FiniteLattice::diamond(2);  // 0, a, b, 1
  const Map atoms_up = {m2.bottom(), m2.top(), m2.top(), m2.top()};
  const bool verdict = joins_preserved(atoms_up, m2, m2);
  CHECK(is_normal(atoms_up, m2, m2) == verdict);
  MESSAGE("atoms -> top on M2 normal: " << verdict);
}

TEST_CASE("A-filters and ideal complements") {
  const auto A2 = luk_chain(2), A3 = luk_chain(3);
  const auto c4 = FiniteLattice::chain(4);
  for (int a = 0; a < c4.size(); ++a) {
    AMap up(4);
    for (int x = 0; x < 4; ++x) up[static_cast<std::size_t>(x)] = c4.leq(a, x) ? 1 : 0;
    CHECK(is_afilter(up, c4, A2));
  }
  const AMap one(4, 1);
  CHECK(is_afilter(one, c4, A2));
  CHECK_FALSE(is_proper_afilter(one, c4, A2));

  // Crisp filters of a finite lattice are the principal ones.
  for (const auto& l : all_lattices(4)) {
    if (l.size() != 4) continue;
    CHECK(afilters(l, A2, false).size() == 4);
  }
  for (const auto& u : ideal_complements(c4, A3, true)) CHECK(is_proper_ideal_complement(u, c4, A3));
}

TEST_CASE("minus transforms") {
  const auto A3 = luk_chain(3);
  const auto c3 = FiniteLattice::chain(3);
  const HetAlgebra id{c3, c3, identity(3), identity(3)};
  for (const auto& k : all_amaps(c3, A3)) {
    const AMap m = minus_dmd(k, id, A3);
    for (int s = 0; s < 3; ++s) {
      Value want = 0;
      for (int p = 0; p <= s; ++p) want = std::max(want, k[static_cast<std::size_t>(p)]);
      CHECK(m[static_cast<std::size_t>(s)] == want);
    }
  }
  CHECK(minus_dmd(AMap(3, 0), id, A3) == AMap(3, 0));

  // k(p) <= k^{-dmd}(dmd p) on every algebra over small lattices.
  for (const auto& ls : all_lattices(4))
    for (const auto& lp : all_lattices(4))
      for (const auto& h : all_het_algebras(ls, lp)) {
        if (h.dmd.empty()) continue;
        for (const auto& k : all_amaps(lp, A3)) {
          const AMap m = minus_dmd(k, h, A3);
          for (int p = 0; p < lp.size(); ++p)
            CHECK(A3.leq(k[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(h.dmd[static_cast<std::size_t>(p)])]));
        }
        break;  // one algebra per lattice pair keeps this quick
      }
}

TEST_CASE("filter closure lemma") {
  const auto A2 = luk_chain(2), A3 = luk_chain(3);
  const auto two = FiniteLattice::chain(2);
  for (const auto& h : all_het_algebras(two, two)) CHECK(verify_lemma_filter_closure(h, A2).ok());

  std::size_t algebras = 0;
  for (const auto& l : {FiniteLattice::chain(4), FiniteLattice::boolean(2)})
    for (const auto& h : all_het_algebras(l, l)) {
      const auto r = verify_lemma_filter_closure(h, A3);
      CHECK(r.ok());
      CHECK(r.checked > 0);
      ++algebras;
    }
  CHECK(algebras > 0);

  // A monotone dmd that breaks join preservation; the outcome is recorded.
  const auto m2 = FiniteLattice::diamond(2);
  const auto c4 = FiniteLattice::chain(4);
  HetAlgebra planted{c4, m2, Map(4, m2.bottom()), Map{0, 1, 1, 3}};
  CHECK_FALSE(is_het_algebra(planted).ok);
  const auto r = verify_lemma_filter_closure(planted, A3);
  CHECK(r.checked > 0);
  MESSAGE("planted non-normal dmd: " << r.failures.size() << " filter-closure failures");
}

TEST_CASE("swap lemma") {
  const auto A2 = luk_chain(2), A3 = luk_chain(3);
  const auto two = FiniteLattice::chain(2);
  for (const auto& h : all_het_algebras(two, two)) CHECK(verify_lemma_swap(h, A2).ok());

  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    const auto l = FiniteLattice::boolean(2);
    const auto algs = all_het_algebras(l, l);
    const auto& h = algs[std::uniform_int_distribution<std::size_t>(0, algs.size() - 1)(rng)];
    const auto r = verify_lemma_swap_sampled(h, A3, 1000, 10 + static_cast<std::uint64_t>(i));
    CHECK(r.ok());
    CHECK(r.checked == 2000);  // both mirrors
  }

  // dmd constantly bottom: both sides equal the meet of f(p) -> v(bottom).
  const auto c3 = FiniteLattice::chain(3);
  const HetAlgebra h{c3, c3, Map(3, 0), Map(3, 0)};
  REQUIRE(is_het_algebra(h).ok);
  for (const auto& f : afilters(c3, A3, true))
    for (const auto& v : ideal_complements(c3, A3, true)) {
      const AMap fm = minus_dmd(f, h, A3);
      Value lhs = A3.top(), rhs = A3.top();
      for (int s = 0; s < 3; ++s) lhs = A3.meet(lhs, A3.imp(fm[static_cast<std::size_t>(s)], v[static_cast<std::size_t>(s)]));
      for (int p = 0; p < 3; ++p) rhs = A3.meet(rhs, A3.imp(f[static_cast<std::size_t>(p)], v[0]));
      CHECK(lhs == rhs);
    }
  CHECK(verify_lemma_swap(h, A3).ok());
}

TEST_CASE("algebraic evaluation") {
  const auto c3 = FiniteLattice::chain(3);
  const HetAlgebra h{c3, c3, identity(3), identity(3)};
  const AlgebraValuation v = {{{"p", Sort::SD}, 1}, {{"q", Sort::SD}, 2}, {{"p", Sort::PP}, 2}};
  CHECK(evaluate(h, *parse("SD: p & q"), v) == 1);
  CHECK(evaluate(h, *parse("SD: p | dmd p"), v) == 2);
  CHECK(sequent_true(h, parse_sequent("SD: p |- q"), v));
  CHECK_FALSE(sequent_true(h, parse_sequent("SD: q |- p"), v));
  CHECK_THROWS_AS(evaluate(h, *parse("PP: r"), v), UnknownAtom);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) CHECK(is_het_algebra(random_het_algebra(4, rng)).ok);
}
