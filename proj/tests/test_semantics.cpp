#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvl/case_study.hpp"
#include "mvl/errors.hpp"
#include "mvl/search.hpp"
#include "mvl/semantics.hpp"
#include "support.hpp"

using namespace mvl;

namespace {
const Model& scenario() {
  static const Model m = case_study::build_scenario();
  return m;
}

std::vector<std::pair<std::string, Sort>> both_sorts(std::initializer_list<const char*> names) {
  std::vector<std::pair<std::string, Sort>> out;
  for (const char* n : names) {
    out.emplace_back(n, Sort::SD);
    out.emplace_back(n, Sort::PP);
  }
  return out;
}
}  // namespace

TEST_CASE("bottom and top clauses") {
  const Model& m = scenario();
  for (Sort s : {Sort::SD, Sort::PP}) {
    const Interpretation b = extend(m, Formula::bot(s));
    const auto t = as_table(b.val, 3);
    for (Index beta = 0; beta < 11; ++beta)
      for (Index z = 0; z < 3; ++z) CHECK(t(beta, z) == beta);
    CHECK(monotone_check(m, *Formula::bot(s)));

    const Interpretation top = extend(m, Formula::top(s));
    CHECK((top.val == 10).all());
    CHECK((top.descr == 0).all());
  }
}

TEST_CASE("support and refutation") {
  const Model& m = scenario();
  const auto pi_L = parse("PP: pi_L");
  CHECK(refutes(m, "z_D", 9, *pi_L));
  CHECK_FALSE(refutes(m, "z_D", 10, *pi_L));
  CHECK(supports(m, 0, "z_F", 6, *pi_L));
  CHECK_FALSE(supports(m, 0, "z_F", 7, *pi_L));
  for (Value a = 0; a <= 10; ++a)
    for (Value b = 0; b <= a; ++b)
      if (supports(m, 2, "z_B", a, *pi_L)) CHECK(supports(m, 2, "z_B", b, *pi_L));
  CHECK(supports(m, 0, "z_L", 0, *parse("SD: sigma_F")));
  CHECK_THROWS_AS(supports(m, 0, "z_L", 0, *pi_L), SideMismatch);
  CHECK_THROWS_AS(supports(m, 0, "z_Q", 0, *pi_L), UnknownState);
  CHECK_THROWS_AS(extend(m, parse("PP: pi_Q")), UnknownAtom);
}

TEST_CASE("lozenge of sigma_D") {
  const Interpretation i = extend(scenario(), parse("PP: loz sigma_D"));
  const ASet row = case_study::first_row(i, 3);
  CHECK(row(0) == 0);
  CHECK(row(1) == 3);
  CHECK(row(2) == 0);
}

TEST_CASE("closed-form closure on the pi_L table") {
  const Model& m = scenario();
  const auto& L = m.L();
  ASet descr(3);
  descr << 4, 9, 8;
  const ASet val = luk_closure(L, descr, m.frame().social.edges);
  const auto t = as_table(val, 3);
  const Value first[3] = {6, 1, 2};
  for (Index b = 0; b < 11; ++b)
    for (Index z = 0; z < 3; ++z) CHECK(t(b, z) == std::min<Value>(10, first[z] + static_cast<Value>(b)));
  CHECK((val == m.atom("pi_L", Sort::PP).val).all());
  CHECK(monotone_check(L, val, 3));
  CHECK_THROWS_AS(luk_closure(TruthLattice::godel(3), ASet::Zero(1), ARelation::Constant(1, 1, 2)), Unsupported);
}

TEST_CASE("closed form equals the generic closure") {
  const auto L = luk_chain(11);
  const oracle::Luk A(11);
  gen::Rng rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const Index n = gen::size(rng, 1, 4);
    const AGraph g = make_graph(L, gen::reflexive(L, n, rng));
    const ASet descr = gen::set(L, n, rng);
    const ASet closed = luk_closure(L, descr, g.edges);
    CHECK((closed == e0(L, g, descr)).all());
    CHECK((closed == oracle::e0(A, g.edges, descr)).all());
  }
}

TEST_CASE("stable interpretations") {
  const auto L = share(luk_chain(3));
  gen::Rng rng(8);
  const AGraph g = make_graph(*L, gen::reflexive(*L, 2, rng));
  const auto all = stable_interpretations(L, g, 10000);
  CHECK_FALSE(all.empty());
  for (const auto& i : all) CHECK(is_stable(*L, g, i));

  Model m(std::make_shared<const HeteroFrame>(make_frame(L, g, g, ARelation::Zero(2, 2), ARelation::Zero(2, 2))));
  // val(beta, z) >= beta on every reflexive graph, so the zero table is not stable.
  CHECK_THROWS_AS(m.set_atom_val("p", Sort::SD, ASet::Zero(2 * 3)), NotStable);
  m.set_atom_descr("p", Sort::SD, ASet::Constant(2, 1));
  CHECK(m.has_atom("p", Sort::SD));
  CHECK_FALSE(m.has_atom("p", Sort::PP));
}

TEST_CASE("truth criteria agree and rules hold on random models") {
  const auto atoms = both_sorts({"p", "q"});
  search::Rng rng(77);
  std::size_t checked = 0;
  for (int n : {2, 3, 5}) {
    const auto L = share(luk_chain(n));
    for (int trial = 0; trial < 60; ++trial) {
      const auto F = search::random_compatible_frame(L, 1 + trial % 3, 1 + (trial / 3) % 3, rng);
      const Model m = search::random_model(F, atoms, rng);
      for (Sort s : {Sort::SD, Sort::PP}) {
        const auto a = search::random_formula(s, {"p", "q"}, 3, rng);
        const auto b = search::random_formula(s, {"p", "q"}, 3, rng);
        const auto t = truth_criteria(m, make_sequent(a, b));
        CHECK(t.by_val == t.by_descr);
        CHECK(monotone_check(m, *a));
        CHECK(sequent_true(m, make_sequent(a, a)));
        CHECK(sequent_true(m, make_sequent(Formula::conj(a, b), a)));
        CHECK(sequent_true(m, make_sequent(Formula::bot(s), a)));
        ++checked;
      }
    }
  }
  CHECK(checked >= 360);
}

TEST_CASE("validity on a frame") {
  const auto L = share(luk_chain(3));
  search::Rng rng(5);
  const auto F = search::random_compatible_frame(L, 2, 2, rng);
  const auto v = sequent_valid(F, parse_sequent("SD: p & q |- p"));
  CHECK(v.holds);
  CHECK_FALSE(v.sampled);
  const auto w = sequent_valid(F, parse_sequent("SD: p |- q"));
  CHECK_FALSE(w.holds);
  REQUIRE(w.counterexample.has_value());
  CHECK_FALSE(sequent_true(make_model(F, *w.counterexample), parse_sequent("SD: p |- q")));

  ValidityOptions sampled;
  sampled.mode = ValidityMode::Sampled;
  sampled.samples = 50;
  const auto s = sequent_valid(F, parse_sequent("PP: p |- p | q"), sampled);
  CHECK(s.holds);
  CHECK(s.sampled);
  CHECK(s.models_checked == 50);
}

TEST_CASE("monotonicity of the case-study tables") {
  const Model& m = scenario();
  for (const char* f : {"PP: pi_L", "PP: pi_C", "SD: sigma_D", "SD: dmd pi_C", "PP: loz sigma_D"})
    CHECK(monotone_check(m, *parse(f)));
}
