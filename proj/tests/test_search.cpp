#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvl/errors.hpp"
#include "mvl/search.hpp"

using namespace mvl;
using namespace mvl::search;

TEST_CASE("random compatible frames") {
  for (int n : {2, 3, 11}) {
    const auto L = share(luk_chain(n));
    Rng rng(static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 10; ++trial) {
      const auto F = random_compatible_frame(L, 1 + trial % 3, 1 + trial % 2, rng);
      CHECK(is_compatible(*F));
    }
  }
  const auto L = share(luk_chain(5));
  Rng a(42), b(42);
  const auto F = random_compatible_frame(L, 3, 2, a);
  const auto G = random_compatible_frame(L, 3, 2, b);
  CHECK((F->r_dia == G->r_dia).all());
  CHECK((F->social.edges == G->social.edges).all());
}

TEST_CASE("random formulas respect depth and sort") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Sort s = i % 2 ? Sort::SD : Sort::PP;
    const auto f = random_formula(s, {"p", "q", "r"}, 3, rng);
    CHECK(f->sort() == s);
    CHECK(depth(*f) <= 4);
  }
}

TEST_CASE("soundness sample") {
  SoundnessBounds b;
  b.models = 20;
  b.algebras = 20;
  b.seed = 9;
  const auto r = soundness_sample(b);
  for (const auto& f : r.failures) MESSAGE(f);
  CHECK(r.ok());
  CHECK(r.models == 20);
  CHECK(r.algebras == 20);
  CHECK(r.axiom_instances > 0);
  CHECK(r.rule_checks > 0);
}

TEST_CASE("countermodels") {
  CountermodelBounds b;
  const auto r = countermodel_search(parse_sequent("SD: p |- q"), b);
  REQUIRE(r.found());
  CHECK(r.verdict() == "countermodel found");
  CHECK_FALSE(sequent_true(*r.witness, parse_sequent("SD: p |- q")));
  const auto again = countermodel_search(parse_sequent("SD: p |- q"), b);
  CHECK(again.frames_checked == r.frames_checked);
  CHECK(again.witness->atoms() == r.witness->atoms());

  CountermodelBounds two = b;
  two.max_states = 2;
  const auto ax = countermodel_search(parse_sequent("SD: dmd (p | q) |- dmd p | dmd q"), two);
  CHECK_FALSE(ax.found());
  CHECK(ax.complete);
  CHECK(ax.verdict().find("inconclusive") != std::string::npos);

  CountermodelBounds three = b;
  three.max_states = 3;
  const auto dist = countermodel_search(parse_sequent("SD: p & (q | r) |- p & q | p & r"), three);
  MESSAGE("distributivity within 3 states over L2: " << dist.verdict());
  if (dist.found()) CHECK_FALSE(sequent_true(*dist.witness, parse_sequent("SD: p & (q | r) |- p & q | p & r")));

  CountermodelBounds tight = two;
  tight.exhaustive = true;
  tight.frame_limit = 10;
  CHECK_THROWS_AS(countermodel_search(parse_sequent("SD: p |- q"), tight), SizeLimitExceeded);
}
