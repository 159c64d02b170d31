#pragma once

#include "mvl/algebra.hpp"
#include "mvl/semantics.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace mvl::search {

using Rng = std::mt19937_64;

ARelation random_relation(const TruthLattice& L, Index rows, Index cols, Rng& rng);
/// Reflexive graph with uniformly random off-diagonal weights.
AGraph random_graph(const TruthLattice& L, Index size, Rng& rng);
/// Frame with random graphs and cross relations; usually incompatible beyond
/// a couple of states.
FramePtr random_frame(const LatticePtr& lattice, Index social, Index political, Rng& rng);

/// Compatible frame with the given side sizes. Tries rejection sampling
/// first, then falls back to two families that are always compatible:
/// identity graphs with random cross relations, and random graphs with
/// all-zero cross relations. The result is checked before it is returned.
FramePtr random_compatible_frame(const LatticePtr& lattice, Index social, Index political, Rng& rng, int attempts = 40);

/// Atoms interpreted by closing uniformly random descr vectors.
Model random_model(const FramePtr& frame, const std::vector<std::pair<std::string, Sort>>& atoms, Rng& rng);

/// Random formula of the given sort over `atoms` with at most `depth` nested
/// connectives.
FormulaPtr random_formula(Sort s, const std::vector<std::string>& atoms, int depth, Rng& rng);

struct SoundnessBounds {
  std::size_t models = 100;
  std::size_t algebras = 100;
  int max_states = 3;
  int max_lattice = 4;  // |L_S|, |L_P| for random algebras
  std::vector<LatticePtr> truth_lattices;  // empty: L2, L3, L5, L11
  std::vector<std::string> atoms = {"p", "q", "r"};
  std::uint64_t seed = 1;
};

struct SoundnessReport {
  std::size_t models = 0;
  std::size_t algebras = 0;
  std::uint64_t axiom_instances = 0;
  std::uint64_t rule_premises_held = 0;
  std::uint64_t rule_checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Every axiom instance over the atoms, plus random substitution instances,
/// in random compatible graph-based models and random heterogeneous
/// algebras; monotonicity rules on every model.
SoundnessReport soundness_sample(const SoundnessBounds& b);

struct CountermodelBounds {
  int max_states = 1;
  LatticePtr lattice;  // default L2
  std::uint64_t seed = 0;
  /// Enumerate every frame up to max_states (throws SizeLimitExceeded when
  /// there are more than frame_limit); otherwise enumerate small sizes and
  /// sample the rest.
  bool exhaustive = false;
  std::uint64_t frame_limit = 200'000;
  std::size_t samples = 200;
  std::uint64_t valuation_limit = 100'000;
};

struct CountermodelResult {
  std::optional<Model> witness;
  /// Every frame within the bounds was examined.
  bool complete = false;
  std::uint64_t frames_checked = 0;
  std::uint64_t frames_incompatible = 0;
  std::uint64_t models_checked = 0;
  std::uint64_t seed = 0;

  bool found() const { return witness.has_value(); }
  /// "countermodel found", or an explicitly inconclusive verdict.
  std::string verdict() const;
};

/// Searches compatible frames (smallest first) and their stable atomic
/// interpretations for a model where the sequent fails.
CountermodelResult countermodel_search(const Sequent& s, const CountermodelBounds& b);

}  // namespace mvl::search
