#pragma once

#include "mvl/formula.hpp"
#include "mvl/graph.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mvl {

enum class Side { Social, Political };

/// SD formulas are tested on parties (political side), PP formulas on social
/// groups.
inline Side evaluation_side(Sort s) { return s == Sort::SD ? Side::Political : Side::Social; }
const char* to_string(Side s);

/// Stable pair: val over A x Z, descr over Z, val^[1] = descr, descr^[0] = val.
struct Interpretation {
  ASet val;
  ASet descr;

  friend bool operator==(const Interpretation& a, const Interpretation& b) {
    return a.val.size() == b.val.size() && a.descr.size() == b.descr.size() && (a.val == b.val).all() && (a.descr == b.descr).all();
  }
};

using FramePtr = std::shared_ptr<const HeteroFrame>;
using Assignment = std::map<std::pair<std::string, Sort>, Interpretation>;

/// Graph-based A-model: a frame plus stable interpretations of atoms, one map
/// per sort.
class Model {
 public:
  explicit Model(FramePtr frame);

  const HeteroFrame& frame() const { return *frame_; }
  const FramePtr& frame_ptr() const { return frame_; }
  const TruthLattice& L() const { return frame_->L(); }
  /// Graph on which formulas of sort `s` are evaluated.
  const AGraph& graph(Sort s) const;

  /// Throws NotStable unless `i` is a stable pair on the side of `s`.
  void set_atom(const std::string& name, Sort s, Interpretation i);
  /// Closes a descr vector to (descr^[0], descr^[0][1]).
  void set_atom_descr(const std::string& name, Sort s, const ASet& descr);
  /// Accepts val only if it is already Galois-stable.
  void set_atom_val(const std::string& name, Sort s, const ASet& val);

  bool has_atom(const std::string& name, Sort s) const;
  /// Throws UnknownAtom.
  const Interpretation& atom(const std::string& name, Sort s) const;
  const Assignment& atoms() const { return atoms_; }

 private:
  FramePtr frame_;
  Assignment atoms_;
};

Model make_model(FramePtr frame, const Assignment& atoms);

/// Interpretation generated by a descr vector on graph g.
Interpretation close_from_descr(const TruthLattice& L, const AGraph& g, const ASet& descr);
Interpretation close_from_val(const TruthLattice& L, const AGraph& g, const ASet& val);
bool is_stable(const TruthLattice& L, const AGraph& g, const Interpretation& i);

struct EvalStats {
  /// Modal images whose raw intent needed closing (incompatible frames only).
  std::size_t closed_modal_images = 0;
};

/// Compositional valuation. Throws UnknownAtom for uninterpreted atoms.
Interpretation extend(const Model& m, const Formula& phi, EvalStats* stats = nullptr);
inline Interpretation extend(const Model& m, const FormulaPtr& phi, EvalStats* stats = nullptr) { return extend(m, *phi, stats); }

/// M, z supports phi to degree alpha at level beta: alpha <= val(beta, z).
/// `state` must belong to the evaluation side of phi's sort (SideMismatch if
/// it names a state of the other side, UnknownState otherwise).
bool supports(const Model& m, Value beta, const std::string& state, Value alpha, const Formula& phi);
/// M, z refutes phi to degree alpha: alpha <= descr(z).
bool refutes(const Model& m, const std::string& state, Value alpha, const Formula& phi);

/// Closed form of descr^[0] on Lukasiewicz chains:
/// val(beta, z) = min{1, 1 - join_z' (descr(z') (x) E(z, z')) + beta}.
/// Throws Unsupported on other lattices.
ASet luk_closure(const TruthLattice& L, const ASet& descr, const ARelation& E);

struct TruthCriteria {
  bool by_val;    // val(lhs) included in val(rhs)
  bool by_descr;  // descr(rhs) included in descr(lhs)
};

TruthCriteria truth_criteria(const Model& m, const Sequent& s);
/// Val-inclusion; throws Error if the descr criterion disagrees.
bool sequent_true(const Model& m, const Sequent& s);

enum class ValidityMode { Auto, Exhaustive, Sampled };

struct ValidityOptions {
  ValidityMode mode = ValidityMode::Auto;
  /// Largest number of atomic assignments checked exhaustively under Auto.
  std::uint64_t limit = 100'000;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

struct ValidityVerdict {
  bool holds = true;
  bool sampled = false;
  std::uint64_t models_checked = 0;
  std::optional<Assignment> counterexample;
};

/// Truth of `s` under every (or a sample of) stable atomic interpretation on
/// the frame.
ValidityVerdict sequent_valid(const FramePtr& frame, const Sequent& s, const ValidityOptions& opts = {});

/// True iff val(beta, z) <= val(beta', z) whenever beta <= beta'.
bool monotone_check(const Model& m, const Formula& phi);
bool monotone_check(const TruthLattice& L, const ASet& val, Index states);

/// All stable interpretations of the polarity induced by g.
std::vector<Interpretation> stable_interpretations(const LatticePtr& lattice, const AGraph& g, std::uint64_t limit);

}  // namespace mvl
