#include "mvl/graph.hpp"

#include "mvl/errors.hpp"

namespace mvl {

namespace {

// out(z) = meet over (alpha, w) of f(alpha, w) -> (R(z, w) -> alpha); R is T x W, f over A x W.
ASet lifted_r0(const TruthLattice& L, const ARelation& R, const ASet& f) {
  const Index w_count = R.cols();
  if (f.size() != L.size() * w_count) throw DomainMismatch("A-set over A x Z has the wrong size");
  ASet out(R.rows());
  for (Index z = 0; z < R.rows(); ++z) {
    Value acc = L.top();
    for (Value alpha = 0; alpha < L.size(); ++alpha)
      for (Index w = 0; w < w_count; ++w) acc = L.meet(acc, L.imp(f(product_index(alpha, w, w_count)), L.imp(R(z, w), alpha)));
    out(z) = acc;
  }
  return out;
}

// out(alpha, w) = meet over z of u(z) -> (R(z, w) -> alpha); R is T x W, u over T.
ASet lifted_r1(const TruthLattice& L, const ARelation& R, const ASet& u) {
  if (u.size() != R.rows()) throw DomainMismatch("A-set over Z has the wrong size");
  const Index w_count = R.cols();
  ASet out(L.size() * w_count);
  for (Value alpha = 0; alpha < L.size(); ++alpha) {
    for (Index w = 0; w < w_count; ++w) {
      Value acc = L.top();
      for (Index z = 0; z < R.rows(); ++z) acc = L.meet(acc, L.imp(u(z), L.imp(R(z, w), alpha)));
      out(product_index(alpha, w, w_count)) = acc;
    }
  }
  return out;
}

// First index where closed(i) is not below raw(i), or -1.
Index exceeding_point(const TruthLattice& L, const ASet& closed, const ASet& raw) {
  for (Index i = 0; i < raw.size(); ++i)
    if (!L.leq(closed(i), raw(i))) return i;
  return -1;
}

}  // namespace

Index AGraph::find(std::string_view name) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return static_cast<Index>(i);
  return -1;
}

AGraph make_graph(const TruthLattice& L, ARelation edges, std::vector<std::string> states) {
  if (edges.rows() == 0 || edges.rows() != edges.cols()) throw DomainMismatch("graph relation must be square and non-empty");
  check_values(L, edges);
  if (!is_reflexive(L, edges)) throw NotReflexive("graph relation is not reflexive (E(z,z) must be 1)");
  if (states.empty())
    for (Index z = 0; z < edges.rows(); ++z) states.push_back("z" + std::to_string(z));
  if (static_cast<Index>(states.size()) != edges.rows()) throw DomainMismatch("state names do not match graph size");
  return AGraph{std::move(edges), std::move(states)};
}

AGraph identity_graph(const TruthLattice& L, Index size) {
  ARelation E = ARelation::Constant(size, size, L.bottom());
  E.matrix().diagonal().setConstant(L.top());
  return make_graph(L, std::move(E));
}

APolarity graph_to_polarity(LatticePtr lattice, const AGraph& graph) {
  const TruthLattice& L = *lattice;
  APolarity P = make_polarity(lattice, lift_I(L, graph.edges));
  P.objects.clear();
  for (Value alpha = 0; alpha < L.size(); ++alpha)
    for (const auto& z : graph.states) P.objects.push_back("(" + L.format(alpha) + "," + z + ")");
  P.attributes = graph.states;
  return P;
}

ASet e0(const TruthLattice& L, const AGraph& graph, const ASet& u) { return lifted_r1(L, graph.edges.transpose(), u); }

ASet e1(const TruthLattice& L, const AGraph& graph, const ASet& f) { return lifted_r0(L, graph.edges.transpose(), f); }

HeteroFrame make_frame(LatticePtr lattice, AGraph social, AGraph political, ARelation r_dia, ARelation r_loz) {
  const TruthLattice& L = *lattice;
  if (r_dia.rows() != political.size() || r_dia.cols() != social.size()) throw DomainMismatch("R_dia must be |Z^P| x |Z^S|");
  if (r_loz.rows() != social.size() || r_loz.cols() != political.size()) throw DomainMismatch("R_loz must be |Z^S| x |Z^P|");
  check_values(L, r_dia);
  check_values(L, r_loz);
  // Re-validate graphs against this lattice.
  social = make_graph(L, std::move(social.edges), std::move(social.states));
  political = make_graph(L, std::move(political.edges), std::move(political.states));
  return HeteroFrame{std::move(lattice), std::move(social), std::move(political), std::move(r_dia), std::move(r_loz)};
}

ASet het_r0_dia(const HeteroFrame& F, const ASet& f) { return lifted_r0(F.L(), F.r_dia, f); }
ASet het_r1_dia(const HeteroFrame& F, const ASet& u) { return lifted_r1(F.L(), F.r_dia, u); }
ASet het_r0_loz(const HeteroFrame& F, const ASet& f) { return lifted_r0(F.L(), F.r_loz, f); }
ASet het_r1_loz(const HeteroFrame& F, const ASet& u) { return lifted_r1(F.L(), F.r_loz, u); }

std::vector<FrameViolation> compat_check(const HeteroFrame& F, bool first_only) {
  const TruthLattice& L = F.L();
  std::vector<FrameViolation> out;
  struct Family {
    CrossRelation rel;
    const AGraph& source;  // side of the (alpha, z) singletons
    const AGraph& target;  // side of the z singletons
    ASet (*r0)(const HeteroFrame&, const ASet&);
    ASet (*r1)(const HeteroFrame&, const ASet&);
  };
  const Family families[] = {
      {CrossRelation::Diamond, F.social, F.political, het_r0_dia, het_r1_dia},
      {CrossRelation::Lozenge, F.political, F.social, het_r0_loz, het_r1_loz},
  };
  for (const Family& fam : families) {
    const Index ns = fam.source.size();
    const Index nt = fam.target.size();
    for (Value beta = 0; beta < L.size(); ++beta) {
      for (Value alpha = 0; alpha < L.size(); ++alpha) {
        for (Index z = 0; z < ns; ++z) {
          ASet image = fam.r0(F, singleton(L, beta, product_index(alpha, z, ns), L.size() * ns));
          Index w = exceeding_point(L, close_descr(L, fam.target, image), image);
          if (w >= 0) {
            out.push_back({fam.rel, Lift::Zero, beta, alpha, z, w});
            if (first_only) return out;
          }
        }
      }
      for (Index z = 0; z < nt; ++z) {
        ASet image = fam.r1(F, singleton(L, beta, z, nt));
        Index w = exceeding_point(L, close_val(L, fam.source, image), image);
        if (w >= 0) {
          out.push_back({fam.rel, Lift::One, beta, -1, z, w});
          if (first_only) return out;
        }
      }
    }
  }
  return out;
}

std::string describe(const HeteroFrame& F, const FrameViolation& v) {
  const TruthLattice& L = F.L();
  const bool dia = v.relation == CrossRelation::Diamond;
  const AGraph& source = dia ? F.social : F.political;
  const AGraph& target = dia ? F.political : F.social;
  std::string rel = dia ? "R_dia" : "R_loz";
  std::string s;
  if (v.lift == Lift::Zero) {
    s = rel + "^[0][{" + L.format(v.beta) + "/(" + L.format(v.alpha) + "," + source.states[static_cast<std::size_t>(v.state)] +
        ")}] not closed at " + target.states[static_cast<std::size_t>(v.witness)];
  } else {
    const Index n = source.size();
    s = rel + "^[1][{" + L.format(v.beta) + "/" + target.states[static_cast<std::size_t>(v.state)] + "}] not closed at (" +
        L.format(static_cast<Value>(v.witness / n)) + "," + source.states[static_cast<std::size_t>(v.witness % n)] + ")";
  }
  return s;
}

namespace {

ModalImage modal_image(const TruthLattice& L, const AGraph& target, ASet raw) {
  ModalImage out;
  ASet val = e0(L, target, raw);
  ASet descr = e1(L, target, val);
  out.intent_was_stable = (descr == raw).all();
  out.image = {std::move(val), std::move(descr)};
  return out;
}

}  // namespace

ModalImage het_dia(const HeteroFrame& F, const AConcept& c) {
  if (c.extent.size() != F.L().size() * F.social.size()) throw DomainMismatch("<R_dia> expects a concept of the social polarity");
  return modal_image(F.L(), F.political, het_r0_dia(F, c.extent));
}

ModalImage het_loz(const HeteroFrame& F, const AConcept& d) {
  if (d.extent.size() != F.L().size() * F.political.size()) throw DomainMismatch("<R_loz> expects a concept of the political polarity");
  return modal_image(F.L(), F.social, het_r0_loz(F, d.extent));
}

}  // namespace mvl
