#include "mvl/search.hpp"

#include "mvl/errors.hpp"

namespace mvl::search {

ARelation random_relation(const TruthLattice& L, Index rows, Index cols, Rng& rng) {
  std::uniform_int_distribution<Value> value(0, L.size() - 1);
  ARelation R(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) R(i, j) = value(rng);
  return R;
}

AGraph random_graph(const TruthLattice& L, Index size, Rng& rng) {
  ARelation E = random_relation(L, size, size, rng);
  E.matrix().diagonal().setConstant(L.top());
  return make_graph(L, std::move(E));
}

FramePtr random_frame(const LatticePtr& lattice, Index social, Index political, Rng& rng) {
  const TruthLattice& L = *lattice;
  AGraph s = random_graph(L, social, rng);
  AGraph p = random_graph(L, political, rng);
  ARelation r_dia = random_relation(L, political, social, rng);
  ARelation r_loz = random_relation(L, social, political, rng);
  return std::make_shared<const HeteroFrame>(make_frame(lattice, std::move(s), std::move(p), std::move(r_dia), std::move(r_loz)));
}

FramePtr random_compatible_frame(const LatticePtr& lattice, Index social, Index political, Rng& rng, int attempts) {
  const TruthLattice& L = *lattice;
  for (int i = 0; i < attempts; ++i) {
    FramePtr f = random_frame(lattice, social, political, rng);
    if (is_compatible(*f)) return f;
  }
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < 2 * attempts; ++i) {
    FramePtr f;
    if (coin(rng)) {
      f = std::make_shared<const HeteroFrame>(make_frame(lattice, identity_graph(L, social), identity_graph(L, political),
                                                         random_relation(L, political, social, rng),
                                                         random_relation(L, social, political, rng)));
    } else {
      f = std::make_shared<const HeteroFrame>(make_frame(lattice, random_graph(L, social, rng), random_graph(L, political, rng),
                                                         ARelation::Constant(political, social, L.bottom()),
                                                         ARelation::Constant(social, political, L.bottom())));
    }
    if (is_compatible(*f)) return f;
  }
  throw Error("no compatible frame found on " + L.describe());
}

Model random_model(const FramePtr& frame, const std::vector<std::pair<std::string, Sort>>& atoms, Rng& rng) {
  Model m(frame);
  const TruthLattice& L = m.L();
  std::uniform_int_distribution<Value> value(0, L.size() - 1);
  for (const auto& [name, sort] : atoms) {
    ASet descr(m.graph(sort).size());
    for (Index z = 0; z < descr.size(); ++z) descr(z) = value(rng);
    m.set_atom_descr(name, sort, descr);
  }
  return m;
}

FormulaPtr random_formula(Sort s, const std::vector<std::string>& atoms, int depth, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick_atom(0, atoms.size() - 1);
  std::uniform_int_distribution<int> leaf(0, 9);
  if (depth <= 0) {
    const int k = leaf(rng);
    if (k == 0) return Formula::top(s);
    if (k == 1) return Formula::bot(s);
    return Formula::atom(atoms[pick_atom(rng)], s);
  }
  std::uniform_int_distribution<int> kind(0, 3);
  switch (kind(rng)) {
    case 0: return random_formula(s, atoms, 0, rng);
    case 1: return Formula::conj(random_formula(s, atoms, depth - 1, rng), random_formula(s, atoms, depth - 1, rng));
    case 2: return Formula::disj(random_formula(s, atoms, depth - 1, rng), random_formula(s, atoms, depth - 1, rng));
    default: {
      FormulaPtr inner = random_formula(opposite(s), atoms, depth - 1, rng);
      return s == Sort::SD ? Formula::dmd(inner) : Formula::loz(inner);
    }
  }
}

namespace {

std::vector<std::pair<std::string, Sort>> both_sorts(const std::vector<std::string>& atoms) {
  std::vector<std::pair<std::string, Sort>> out;
  for (const auto& a : atoms) {
    out.emplace_back(a, Sort::SD);
    out.emplace_back(a, Sort::PP);
  }
  return out;
}

// Axiom instances checked in every sampled structure: all instances over the
// atoms plus one random substitution instance per schema and sort.
std::vector<Sequent> axiom_instances(const std::vector<std::string>& atoms, Rng& rng) {
  std::vector<Sequent> out;
  for (const auto& schema : axioms_basic())
    for (Sort s : schema.sorts()) {
      for (auto& inst : instances_over_atoms(schema, s, atoms)) out.push_back(std::move(inst));
      std::map<std::string, FormulaPtr> values;
      for (const auto& [name, sort] : schema.metavariables(s)) values[name] = random_formula(sort, atoms, 2, rng);
      out.push_back(schema.instantiate(s, values));
    }
  return out;
}

struct RuleCase {
  const RuleSchema* rule;
  Sequent premise;
  Sequent conclusion;
};

std::vector<RuleCase> rule_cases(const std::vector<std::string>& atoms, Rng& rng) {
  std::vector<RuleCase> out;
  for (const auto& rule : rules_basic()) {
    const Sequent premise = parse_sequent(std::string(to_string(rule.premise_sort)) + ": " + rule.premise);
    const Sequent conclusion = parse_sequent(std::string(to_string(rule.conclusion_sort)) + ": " + rule.conclusion);
    const auto mvs = atoms_of(premise);
    const std::vector<std::pair<std::string, Sort>> vars(mvs.begin(), mvs.end());
    if (vars.size() != 2) throw Error("monotonicity rule with unexpected metavariables");
    const Sort s = rule.premise_sort;
    // Pairs whose premise holds by construction, and unconstrained pairs.
    const FormulaPtr a = random_formula(s, atoms, 1, rng);
    const FormulaPtr b = random_formula(s, atoms, 1, rng);
    const std::vector<std::pair<FormulaPtr, FormulaPtr>> pairs = {
        {Formula::conj(a, b), a},
        {b, Formula::disj(a, b)},
        {a, b},
        {random_formula(s, atoms, 2, rng), random_formula(s, atoms, 2, rng)},
    };
    for (const auto& [x, y] : pairs) {
      const std::map<std::pair<std::string, Sort>, FormulaPtr> subst = {{vars[0], x}, {vars[1], y}};
      out.push_back({&rule, substitute(premise, subst), substitute(conclusion, subst)});
    }
  }
  return out;
}

}  // namespace

SoundnessReport soundness_sample(const SoundnessBounds& b) {
  SoundnessReport rep;
  Rng rng(b.seed);
  std::vector<LatticePtr> lattices = b.truth_lattices;
  if (lattices.empty())
    for (int n : {2, 3, 5, 11}) lattices.push_back(share(TruthLattice::lukasiewicz(n)));
  const auto atoms = both_sorts(b.atoms);
  std::uniform_int_distribution<Index> size(1, b.max_states);

  for (std::size_t i = 0; i < b.models; ++i) {
    const LatticePtr& lattice = lattices[i % lattices.size()];
    const Index ns = size(rng), np = size(rng);
    const Model m = random_model(random_compatible_frame(lattice, ns, np, rng), atoms, rng);
    ++rep.models;
    for (const auto& inst : axiom_instances(b.atoms, rng)) {
      ++rep.axiom_instances;
      if (!sequent_true(m, inst))
        rep.failures.push_back("graph model " + std::to_string(i) + " (" + lattice->describe() + ", " + std::to_string(ns) + "x" +
                               std::to_string(np) + " states): " + to_string(inst));
    }
    for (const auto& c : rule_cases(b.atoms, rng)) {
      ++rep.rule_checks;
      if (!sequent_true(m, c.premise)) continue;
      ++rep.rule_premises_held;
      if (!sequent_true(m, c.conclusion))
        rep.failures.push_back("graph model " + std::to_string(i) + ": rule " + c.rule->name + " fails for " + to_string(c.premise));
    }
  }

  for (std::size_t i = 0; i < b.algebras; ++i) {
    const algebra::HetAlgebra h = algebra::random_het_algebra(b.max_lattice, rng);
    algebra::AlgebraValuation v;
    for (const auto& [name, sort] : atoms) {
      std::uniform_int_distribution<algebra::Element> el(0, (sort == Sort::SD ? h.ls : h.lp).size() - 1);
      v[{name, sort}] = el(rng);
    }
    ++rep.algebras;
    for (const auto& inst : axiom_instances(b.atoms, rng)) {
      ++rep.axiom_instances;
      if (!algebra::sequent_true(h, inst, v)) rep.failures.push_back("algebra " + std::to_string(i) + ": " + to_string(inst));
    }
    for (const auto& c : rule_cases(b.atoms, rng)) {
      ++rep.rule_checks;
      if (!algebra::sequent_true(h, c.premise, v)) continue;
      ++rep.rule_premises_held;
      if (!algebra::sequent_true(h, c.conclusion, v))
        rep.failures.push_back("algebra " + std::to_string(i) + ": rule " + c.rule->name + " fails for " + to_string(c.premise));
    }
  }
  return rep;
}

std::string CountermodelResult::verdict() const {
  if (found()) return "countermodel found";
  if (complete) return "no countermodel within bounds (search exhausted; inconclusive)";
  return "no countermodel in sampled search (inconclusive)";
}

namespace {

struct SizePlan {
  Index social, political;
  std::uint64_t frames;  // frame_limit + 1 when there are more
};

// Number of frames for given side sizes, saturating at limit + 1.
std::uint64_t frame_count(int values, Index ns, Index np, std::uint64_t limit) {
  const Index entries = ns * (ns - 1) + np * (np - 1) + 2 * ns * np;
  std::uint64_t total = 1;
  for (Index i = 0; i < entries; ++i) {
    total *= static_cast<std::uint64_t>(values);
    if (total > limit) return limit + 1;
  }
  return total;
}

FramePtr decode_frame(const LatticePtr& lattice, Index ns, Index np, std::uint64_t code) {
  const TruthLattice& L = *lattice;
  const auto base = static_cast<std::uint64_t>(L.size());
  auto next = [&]() {
    const auto v = static_cast<Value>(code % base);
    code /= base;
    return v;
  };
  auto graph = [&](Index n) {
    ARelation E(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) E(i, j) = i == j ? L.top() : next();
    return make_graph(L, std::move(E));
  };
  AGraph s = graph(ns);
  AGraph p = graph(np);
  ARelation r_dia(np, ns), r_loz(ns, np);
  for (Index i = 0; i < np; ++i)
    for (Index j = 0; j < ns; ++j) r_dia(i, j) = next();
  for (Index i = 0; i < ns; ++i)
    for (Index j = 0; j < np; ++j) r_loz(i, j) = next();
  return std::make_shared<const HeteroFrame>(make_frame(lattice, std::move(s), std::move(p), std::move(r_dia), std::move(r_loz)));
}

}  // namespace

CountermodelResult countermodel_search(const Sequent& s, const CountermodelBounds& b) {
  if (s.lhs->sort() != s.rhs->sort()) throw TypeError(0, "sequent is not type-uniform");
  const LatticePtr lattice = b.lattice ? b.lattice : share(TruthLattice::lukasiewicz(2));
  CountermodelResult res;
  res.seed = b.seed;
  res.complete = true;
  Rng rng(b.seed);

  std::vector<SizePlan> plan;
  for (Index total = 2; total <= 2 * b.max_states; ++total)
    for (Index ns = 1; ns <= b.max_states; ++ns) {
      const Index np = total - ns;
      if (np < 1 || np > b.max_states) continue;
      plan.push_back({ns, np, frame_count(lattice->size(), ns, np, b.frame_limit)});
    }
  if (b.exhaustive) {
    std::uint64_t sum = 0;
    for (const auto& p : plan) sum += p.frames;
    if (sum > b.frame_limit)
      throw SizeLimitExceeded("exhaustive search needs more than " + std::to_string(b.frame_limit) + " frames; lower --max-states");
  }

  ValidityOptions opts;
  opts.limit = b.valuation_limit;
  opts.samples = b.samples;
  auto try_frame = [&](const FramePtr& f) {
    ++res.frames_checked;
    if (!is_compatible(*f)) {
      ++res.frames_incompatible;
      return false;
    }
    opts.seed = rng();
    const ValidityVerdict v = sequent_valid(f, s, opts);
    res.models_checked += v.models_checked;
    if (v.sampled) res.complete = false;
    if (!v.holds) {
      res.witness = make_model(f, *v.counterexample);
      return true;
    }
    return false;
  };

  for (const auto& p : plan) {
    if (p.frames <= b.frame_limit) {
      for (std::uint64_t code = 0; code < p.frames; ++code)
        if (try_frame(decode_frame(lattice, p.social, p.political, code))) return res;
    } else {
      res.complete = false;
      for (std::size_t k = 0; k < b.samples; ++k)
        if (try_frame(random_compatible_frame(lattice, p.social, p.political, rng))) return res;
    }
  }
  return res;
}

}  // namespace mvl::search
