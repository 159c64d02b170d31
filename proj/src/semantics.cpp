#include "mvl/semantics.hpp"

#include "mvl/errors.hpp"

#include <random>

namespace mvl {

const char* to_string(Side s) { return s == Side::Social ? "social" : "political"; }

Interpretation close_from_descr(const TruthLattice& L, const AGraph& g, const ASet& descr) {
  if (descr.size() != g.size()) throw DomainMismatch("descr vector has the wrong number of states");
  check_values(L, descr);
  ASet val = e0(L, g, descr);
  ASet closed = e1(L, g, val);
  return {std::move(val), std::move(closed)};
}

Interpretation close_from_val(const TruthLattice& L, const AGraph& g, const ASet& val) {
  if (val.size() != L.size() * g.size()) throw DomainMismatch("val table has the wrong size");
  check_values(L, val);
  ASet descr = e1(L, g, val);
  ASet closed = e0(L, g, descr);
  return {std::move(closed), std::move(descr)};
}

bool is_stable(const TruthLattice& L, const AGraph& g, const Interpretation& i) {
  if (i.val.size() != L.size() * g.size() || i.descr.size() != g.size()) return false;
  return (e1(L, g, i.val) == i.descr).all() && (e0(L, g, i.descr) == i.val).all();
}

Model::Model(FramePtr frame) : frame_(std::move(frame)) {
  if (!frame_) throw Error("model without frame");
}

const AGraph& Model::graph(Sort s) const { return evaluation_side(s) == Side::Political ? frame_->political : frame_->social; }

void Model::set_atom(const std::string& name, Sort s, Interpretation i) {
  if (!is_stable(L(), graph(s), i)) throw NotStable("interpretation of " + name + " is not a stable pair");
  atoms_[{name, s}] = std::move(i);
}

void Model::set_atom_descr(const std::string& name, Sort s, const ASet& descr) {
  atoms_[{name, s}] = close_from_descr(L(), graph(s), descr);
}

void Model::set_atom_val(const std::string& name, Sort s, const ASet& val) {
  Interpretation i = close_from_val(L(), graph(s), val);
  if (!(i.val == val).all()) throw NotStable("val table of " + name + " is not Galois-stable");
  atoms_[{name, s}] = std::move(i);
}

bool Model::has_atom(const std::string& name, Sort s) const { return atoms_.count({name, s}) != 0; }

const Interpretation& Model::atom(const std::string& name, Sort s) const {
  auto it = atoms_.find({name, s});
  if (it == atoms_.end()) throw UnknownAtom(std::string("atom ") + name + " is not interpreted at sort " + to_string(s));
  return it->second;
}

Model make_model(FramePtr frame, const Assignment& atoms) {
  Model m(std::move(frame));
  for (const auto& [key, i] : atoms) m.set_atom(key.first, key.second, i);
  return m;
}

Interpretation extend(const Model& m, const Formula& phi, EvalStats* stats) {
  const TruthLattice& L = m.L();
  const AGraph& g = m.graph(phi.sort());
  const Index n = g.size();
  switch (phi.op()) {
    case Connective::Top: {
      ASet val = ASet::Constant(L.size() * n, L.top());
      ASet descr = e1(L, g, val);
      return {std::move(val), std::move(descr)};
    }
    case Connective::Bot: return close_from_descr(L, g, ASet::Constant(n, L.top()));
    case Connective::Atom: return m.atom(phi.name(), phi.sort());
    case Connective::And: {
      Interpretation a = extend(m, *phi.left(), stats);
      Interpretation b = extend(m, *phi.right(), stats);
      ASet val = pointwise_meet(L, a.val, b.val);
      ASet descr = e1(L, g, val);
      return {std::move(val), std::move(descr)};
    }
    case Connective::Or: {
      Interpretation a = extend(m, *phi.left(), stats);
      Interpretation b = extend(m, *phi.right(), stats);
      ASet descr = pointwise_meet(L, a.descr, b.descr);
      ASet val = e0(L, g, descr);
      return {std::move(val), std::move(descr)};
    }
    case Connective::Dmd:
    case Connective::Loz: {
      Interpretation in = extend(m, *phi.inner(), stats);
      AConcept c{std::move(in.val), std::move(in.descr)};
      ModalImage img = phi.op() == Connective::Dmd ? het_dia(m.frame(), c) : het_loz(m.frame(), c);
      if (stats && !img.intent_was_stable) ++stats->closed_modal_images;
      return {std::move(img.image.extent), std::move(img.image.intent)};
    }
  }
  throw Error("unreachable connective");
}

namespace {

Index resolve_state(const Model& m, const std::string& state, Sort s) {
  const AGraph& g = m.graph(s);
  const Index z = g.find(state);
  if (z >= 0) return z;
  const AGraph& other = m.graph(opposite(s));
  if (other.find(state) >= 0)
    throw SideMismatch("state " + state + " is on the " + to_string(evaluation_side(opposite(s))) + " side but " + to_string(s) +
                       " formulas are evaluated on the " + to_string(evaluation_side(s)) + " side");
  throw UnknownState("unknown state " + state);
}

}  // namespace

bool supports(const Model& m, Value beta, const std::string& state, Value alpha, const Formula& phi) {
  const TruthLattice& L = m.L();
  if (!L.contains(beta) || !L.contains(alpha)) throw DomainError("truth value outside the lattice");
  const Index z = resolve_state(m, state, phi.sort());
  const Interpretation i = extend(m, phi);
  return L.leq(alpha, i.val(product_index(beta, z, m.graph(phi.sort()).size())));
}

bool refutes(const Model& m, const std::string& state, Value alpha, const Formula& phi) {
  const TruthLattice& L = m.L();
  if (!L.contains(alpha)) throw DomainError("truth value outside the lattice");
  const Index z = resolve_state(m, state, phi.sort());
  return L.leq(alpha, extend(m, phi).descr(z));
}

ASet luk_closure(const TruthLattice& L, const ASet& descr, const ARelation& E) {
  if (!L.is_lukasiewicz()) throw Unsupported("closed-form closure needs a Lukasiewicz chain; use e0");
  const Index n = descr.size();
  if (E.rows() != n || E.cols() != n) throw DomainMismatch("E must be square over the descr states");
  const Value top = L.top();
  ASet out(L.size() * n);
  for (Index z = 0; z < n; ++z) {
    Value j = L.bottom();
    for (Index w = 0; w < n; ++w) j = std::max(j, L.otimes(descr(w), E(z, w)));
    for (Value beta = 0; beta < L.size(); ++beta) out(product_index(beta, z, n)) = std::min(top, top - j + beta);
  }
  return out;
}

TruthCriteria truth_criteria(const Model& m, const Sequent& s) {
  if (s.lhs->sort() != s.rhs->sort()) throw TypeError(0, "sequent is not type-uniform");
  const Interpretation a = extend(m, *s.lhs);
  const Interpretation b = extend(m, *s.rhs);
  return {included(m.L(), a.val, b.val), included(m.L(), b.descr, a.descr)};
}

bool sequent_true(const Model& m, const Sequent& s) {
  const TruthCriteria t = truth_criteria(m, s);
  if (t.by_val != t.by_descr) throw Error("val and descr truth criteria disagree on " + to_string(s));
  return t.by_val;
}

std::vector<Interpretation> stable_interpretations(const LatticePtr& lattice, const AGraph& g, std::uint64_t limit) {
  const APolarity P = graph_to_polarity(lattice, g);
  std::vector<Interpretation> out;
  for (auto& c : enumerate_concepts(P, EnumerationMode::ClosureGeneration, limit)) out.push_back({std::move(c.extent), std::move(c.intent)});
  return out;
}

ValidityVerdict sequent_valid(const FramePtr& frame, const Sequent& s, const ValidityOptions& opts) {
  const TruthLattice& L = frame->L();
  const auto atom_set = atoms_of(s);
  const std::vector<std::pair<std::string, Sort>> atoms(atom_set.begin(), atom_set.end());

  // Candidate lists per atom; empty when a side has too many concepts to list.
  std::vector<std::vector<Interpretation>> candidates;
  std::uint64_t total = 1;
  bool enumerable = true;
  for (const auto& a : atoms) {
    const AGraph& g = evaluation_side(a.second) == Side::Political ? frame->political : frame->social;
    try {
      candidates.push_back(stable_interpretations(frame->lattice, g, opts.limit));
    } catch (const SizeLimitExceeded&) {
      enumerable = false;
      candidates.emplace_back();
      continue;
    }
    const std::uint64_t count = candidates.back().size();
    if (total > opts.limit / count)
      enumerable = false;
    else
      total *= count;
  }

  bool exhaustive = opts.mode == ValidityMode::Exhaustive || (opts.mode == ValidityMode::Auto && enumerable);
  if (opts.mode == ValidityMode::Exhaustive && !enumerable)
    throw SizeLimitExceeded("exhaustive validity check needs more than " + std::to_string(opts.limit) + " assignments");

  ValidityVerdict verdict;
  verdict.sampled = !exhaustive;
  auto check = [&](const Assignment& asg) {
    ++verdict.models_checked;
    if (!sequent_true(make_model(frame, asg), s)) {
      verdict.holds = false;
      verdict.counterexample = asg;
      return false;
    }
    return true;
  };

  if (exhaustive) {
    std::vector<std::size_t> choice(atoms.size(), 0);
    while (true) {
      Assignment asg;
      for (std::size_t i = 0; i < atoms.size(); ++i) asg.emplace(atoms[i], candidates[i][choice[i]]);
      if (!check(asg)) return verdict;
      std::size_t k = 0;
      while (k < choice.size() && ++choice[k] == candidates[k].size()) choice[k++] = 0;
      if (k == choice.size()) break;
    }
    return verdict;
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<Value> value(0, L.size() - 1);
  for (std::size_t n = 0; n < opts.samples; ++n) {
    Assignment asg;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (!candidates[i].empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, candidates[i].size() - 1);
        asg.emplace(atoms[i], candidates[i][pick(rng)]);
      } else {
        const AGraph& g = evaluation_side(atoms[i].second) == Side::Political ? frame->political : frame->social;
        ASet descr(g.size());
        for (Index z = 0; z < g.size(); ++z) descr(z) = value(rng);
        asg.emplace(atoms[i], close_from_descr(L, g, descr));
      }
    }
    if (!check(asg)) return verdict;
  }
  return verdict;
}

bool monotone_check(const TruthLattice& L, const ASet& val, Index states) {
  for (Value b = 0; b < L.size(); ++b)
    for (Value b2 = 0; b2 < L.size(); ++b2) {
      if (!L.leq(b, b2)) continue;
      for (Index z = 0; z < states; ++z)
        if (!L.leq(val(product_index(b, z, states)), val(product_index(b2, z, states)))) return false;
    }
  return true;
}

bool monotone_check(const Model& m, const Formula& phi) { return monotone_check(m.L(), extend(m, phi).val, m.graph(phi.sort()).size()); }

}  // namespace mvl
