#pragma once

#include "mvl/polarity.hpp"

#include <string>
#include <vector>

namespace mvl {

/// Reflexive A-graph (Z, E).
struct AGraph {
  ARelation edges;  // E: Z x Z, E(z, z) = 1
  std::vector<std::string> states;

  Index size() const { return edges.rows(); }
  /// Index of a named state, or -1.
  Index find(std::string_view name) const;
};

/// Validates shape, carrier membership and reflexivity (throws NotReflexive).
/// Empty `states` gets default names z0, z1, ...
AGraph make_graph(const TruthLattice& L, ARelation edges, std::vector<std::string> states = {});

/// Crisp identity graph Delta_Z.
AGraph identity_graph(const TruthLattice& L, Index size);

/// The polarity (A x Z, Z, I_E) with I_E((alpha, z), z') = E(z, z') -> alpha.
APolarity graph_to_polarity(LatticePtr lattice, const AGraph& graph);

/// E^[0][u](alpha, z) = meet over z' of u(z') -> (E(z, z') -> alpha). u over Z, result over A x Z.
ASet e0(const TruthLattice& L, const AGraph& graph, const ASet& u);
/// E^[1][f](z) = meet over (alpha, z') of f(alpha, z') -> (E(z', z) -> alpha).
ASet e1(const TruthLattice& L, const AGraph& graph, const ASet& f);
inline ASet close_descr(const TruthLattice& L, const AGraph& g, const ASet& u) { return e1(L, g, e0(L, g, u)); }
inline ASet close_val(const TruthLattice& L, const AGraph& g, const ASet& f) { return e0(L, g, e1(L, g, f)); }

/// Heterogeneous frame: social graph X_S, political graph X_P, and the
/// cross relations R_dia: Z^P x Z^S and R_loz: Z^S x Z^P.
///
/// Frames may be built even when the compatibility conditions fail; see
/// compat_check().
struct HeteroFrame {
  LatticePtr lattice;
  AGraph social;
  AGraph political;
  ARelation r_dia;  // Z^P x Z^S
  ARelation r_loz;  // Z^S x Z^P

  const TruthLattice& L() const { return *lattice; }
};

HeteroFrame make_frame(LatticePtr lattice, AGraph social, AGraph political, ARelation r_dia, ARelation r_loz);

/// R_dia^[0][f](z) for f over A x Z^S; result over Z^P.
ASet het_r0_dia(const HeteroFrame& F, const ASet& f);
/// R_dia^[1][u](alpha, w) for u over Z^P; result over A x Z^S.
ASet het_r1_dia(const HeteroFrame& F, const ASet& u);
/// R_loz^[0][f](z) for f over A x Z^P; result over Z^S.
ASet het_r0_loz(const HeteroFrame& F, const ASet& f);
/// R_loz^[1][u](alpha, w) for u over Z^S; result over A x Z^P.
ASet het_r1_loz(const HeteroFrame& F, const ASet& u);

enum class CrossRelation { Diamond, Lozenge };
enum class Lift { Zero, One };

/// A singleton whose image under a lifted cross relation is not Galois-closed.
/// For Lift::Zero the singleton is {beta / (alpha, state)}; for Lift::One it is
/// {beta / state} and alpha is -1. `witness` is a point where the closure of
/// the image exceeds the image.
struct FrameViolation {
  CrossRelation relation;
  Lift lift;
  Value beta;
  Value alpha;
  Index state;
  Index witness;
};

/// Checks the four compatibility families over every beta, alpha and state.
/// Empty iff the frame is compatible. `first_only` stops at the first failure.
std::vector<FrameViolation> compat_check(const HeteroFrame& F, bool first_only = false);
inline bool is_compatible(const HeteroFrame& F) { return compat_check(F, true).empty(); }

std::string describe(const HeteroFrame& F, const FrameViolation& v);

/// Image of a concept under a heterogeneous operator. `intent_was_stable` is
/// false when the raw image R^[0][val] needed closing, which only happens on
/// incompatible frames.
struct ModalImage {
  AConcept image;
  bool intent_was_stable = true;
};

/// <R_dia>c for c over the social polarity; result over the political polarity.
ModalImage het_dia(const HeteroFrame& F, const AConcept& c);
/// <R_loz>d for d over the political polarity; result over the social polarity.
ModalImage het_loz(const HeteroFrame& F, const AConcept& d);

}  // namespace mvl
