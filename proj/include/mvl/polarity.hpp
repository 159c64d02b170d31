#pragma once

#include "mvl/fuzzy.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mvl {

/// Formal A-context (A, X, I). Object/attribute names are optional labels.
struct APolarity {
  LatticePtr lattice;
  ARelation incidence;  // |A| x |X|
  std::vector<std::string> objects;
  std::vector<std::string> attributes;

  Index object_count() const { return incidence.rows(); }
  Index attribute_count() const { return incidence.cols(); }
  const TruthLattice& L() const { return *lattice; }
};

APolarity make_polarity(LatticePtr lattice, ARelation incidence);

/// Galois-stable pair: extent over objects, intent over attributes.
struct AConcept {
  ASet extent;
  ASet intent;
  friend bool operator==(const AConcept& a, const AConcept& b) {
    return a.extent.size() == b.extent.size() && a.intent.size() == b.intent.size() && (a.extent == b.extent).all() &&
           (a.intent == b.intent).all();
  }
};

ASet up(const APolarity& P, const ASet& f);    // I^(1)[f]
ASet down(const APolarity& P, const ASet& u);  // I^(0)[u]
ASet close_extent(const APolarity& P, const ASet& f);
ASet close_intent(const APolarity& P, const ASet& u);
bool is_stable_extent(const APolarity& P, const ASet& f);
bool is_stable_intent(const APolarity& P, const ASet& u);
bool is_concept(const APolarity& P, const AConcept& c);

AConcept concept_of_extent(const APolarity& P, const ASet& f);  // (f↑↓, f↑)
AConcept concept_of_intent(const APolarity& P, const ASet& u);  // (u↓, u↓↑)

enum class EnumerationMode {
  /// Scan all |A|^|objects| extents; oracle mode.
  Exhaustive,
  /// Closure of the generators {alpha/x}↓ under pointwise meet.
  ClosureGeneration,
};

inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;

/// All concepts, sorted lexicographically by extent (a linear extension of
/// the concept order on chains). Throws SizeLimitExceeded when the scan size
/// (exhaustive) or the concept count (generation) exceeds `limit`.
std::vector<AConcept> enumerate_concepts(const APolarity& P, EnumerationMode mode = EnumerationMode::ClosureGeneration,
                                         std::uint64_t limit = kDefaultEnumerationLimit);

/// Concepts plus their order and lattice operations as index tables.
struct ConceptLattice {
  std::vector<AConcept> concepts;
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> leq;
  Eigen::ArrayXXi meet;
  Eigen::ArrayXXi join;
  int bottom = 0;
  int top = 0;

  int size() const { return static_cast<int>(concepts.size()); }
  /// Index of the concept with this extent, or -1.
  int find_extent(const ASet& extent) const;
};

ConceptLattice concept_lattice(const APolarity& P, EnumerationMode mode = EnumerationMode::ClosureGeneration,
                               std::uint64_t limit = kDefaultEnumerationLimit);

/// Concept meet (f∧g, (f∧g)↑) and join ((u∧v)↓, u∧v).
AConcept concept_meet(const APolarity& P, const AConcept& c, const AConcept& d);
AConcept concept_join(const APolarity& P, const AConcept& c, const AConcept& d);

/// One failed stability check of I-compatibility.
struct IncompatibilityWitness {
  std::string relation;  // "R_box" or "R_dia"
  std::string lift;      // "(0)" or "(1)"
  Value alpha;
  Index element;         // singleton position (object or attribute index)
};

/// Polarity with relations R_box: A x X and R_dia: X x A. Compatibility is
/// evaluated once at construction; the modal operators refuse to run on an
/// incompatible context.
class EnrichedAContext {
 public:
  EnrichedAContext(APolarity base, ARelation r_box, ARelation r_dia);

  const APolarity& base() const { return base_; }
  const ARelation& r_box() const { return r_box_; }
  const ARelation& r_dia() const { return r_dia_; }
  const std::vector<IncompatibilityWitness>& violations() const { return violations_; }
  bool compatible() const { return violations_.empty(); }

 private:
  APolarity base_;
  ARelation r_box_;
  ARelation r_dia_;
  std::vector<IncompatibilityWitness> violations_;
};

/// All 2(|A||objects| + |A||attributes|) stability checks; empty iff compatible.
std::vector<IncompatibilityWitness> icompat_check(const APolarity& base, const ARelation& r_box, const ARelation& r_dia);
inline std::vector<IncompatibilityWitness> icompat_check(const EnrichedAContext& E) { return E.violations(); }

/// [R_box]c = (R_box^(0)[intent c], (R_box^(0)[intent c])↑).
AConcept box_complex(const EnrichedAContext& E, const AConcept& c);
/// <R_dia>c = ((R_dia^(0)[extent c])↓, R_dia^(0)[extent c]).
AConcept dia_complex(const EnrichedAContext& E, const AConcept& c);

}  // namespace mvl
