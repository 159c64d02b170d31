#pragma once

#include "mvl/formula.hpp"
#include "mvl/lattice.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace mvl::algebra {

using BoolTable = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;
using Element = int;

/// Finite bounded lattice given by its order relation; meet and join tables
/// are derived on construction.
class FiniteLattice {
 public:
  /// Throws InvalidLattice unless `leq` is a partial order with all binary
  /// meets and joins.
  static FiniteLattice from_order(BoolTable leq, std::vector<std::string> labels = {});
  static FiniteLattice chain(int n);
  /// Powerset of a k-element set.
  static FiniteLattice boolean(int k);
  /// M_m: bottom, m pairwise incomparable atoms, top.
  static FiniteLattice diamond(int m);
  /// N_5.
  static FiniteLattice pentagon();

  int size() const { return static_cast<int>(leq_.rows()); }
  bool leq(Element a, Element b) const { return leq_(a, b); }
  Element meet(Element a, Element b) const { return meet_(a, b); }
  Element join(Element a, Element b) const { return join_(a, b); }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const BoolTable& order() const { return leq_; }
  bool is_distributive() const;

 private:
  FiniteLattice() = default;
  BoolTable leq_;
  OpTable meet_, join_;
  Element bottom_ = 0, top_ = 0;
  std::vector<std::string> labels_;
};

/// Every lattice with 1..max_size elements, one per isomorphism class.
std::vector<FiniteLattice> all_lattices(int max_size);

/// Total map between carriers, indexed by source element.
using Map = std::vector<Element>;

bool is_monotone(const Map& op, const FiniteLattice& src, const FiniteLattice& dst);
/// op(bottom) = bottom and op(a v b) = op(a) v op(b).
bool is_normal(const Map& op, const FiniteLattice& src, const FiniteLattice& dst);
std::vector<Map> normal_maps(const FiniteLattice& src, const FiniteLattice& dst);

/// (L_S, L_P, loz: L_S -> L_P, dmd: L_P -> L_S). SD formulas denote elements
/// of L_S, PP formulas elements of L_P.
struct HetAlgebra {
  FiniteLattice ls;
  FiniteLattice lp;
  Map loz;
  Map dmd;
};

struct HetAlgebraCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

HetAlgebraCheck is_het_algebra(const HetAlgebra& h);

/// All normal heterogeneous algebras on the given pair of lattices.
std::vector<HetAlgebra> all_het_algebras(const FiniteLattice& ls, const FiniteLattice& lp);

/// A-valued map on a finite lattice, indexed by element.
using AMap = std::vector<Value>;

/// f(top) = 1 and f(a ^ b) = f(a) ^ f(b).
bool is_afilter(const AMap& f, const FiniteLattice& lat, const TruthLattice& A);
/// A-filter with f(bottom) = 0.
bool is_proper_afilter(const AMap& f, const FiniteLattice& lat, const TruthLattice& A);
/// Complement of an A-ideal: u(bottom) = 0 and u(a v b) = u(a) v u(b).
bool is_ideal_complement(const AMap& u, const FiniteLattice& lat, const TruthLattice& A);
/// Additionally u(top) = 1.
bool is_proper_ideal_complement(const AMap& u, const FiniteLattice& lat, const TruthLattice& A);

inline constexpr std::uint64_t kDefaultMapLimit = 1'000'000;

/// Every map lat -> A (throws SizeLimitExceeded above `limit`).
std::vector<AMap> all_amaps(const FiniteLattice& lat, const TruthLattice& A, std::uint64_t limit = kDefaultMapLimit);
std::vector<AMap> afilters(const FiniteLattice& lat, const TruthLattice& A, bool proper, std::uint64_t limit = kDefaultMapLimit);
std::vector<AMap> ideal_complements(const FiniteLattice& lat, const TruthLattice& A, bool proper,
                                    std::uint64_t limit = kDefaultMapLimit);

/// k^{-dmd}(s) = join { k(p) | dmd p <= s } for k over L_P; result over L_S.
AMap minus_dmd(const AMap& k, const HetAlgebra& h, const TruthLattice& A);
/// h^{-loz}(p) = join { g(s) | loz s <= p } for g over L_S; result over L_P.
AMap minus_loz(const AMap& g, const HetAlgebra& h, const TruthLattice& A);

struct LemmaFailure {
  std::string item;
  AMap first;
  AMap second;
  std::string detail;
};

struct LemmaReport {
  std::uint64_t checked = 0;
  std::vector<LemmaFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// For every A-filter f on L_P (g on L_S), minus_dmd(f) (minus_loz(g)) is an
/// A-filter.
LemmaReport verify_lemma_filter_closure(const HetAlgebra& h, const TruthLattice& A, std::uint64_t limit = kDefaultMapLimit);

/// meet_s (f^{-dmd}(s) -> v(s)) = meet_p (f(p) -> v(dmd p)) for proper
/// A-filters f on L_P and proper ideal complements v on L_S, and the mirrored
/// identity for loz. Exhaustive over all pairs.
LemmaReport verify_lemma_swap(const HetAlgebra& h, const TruthLattice& A, std::uint64_t limit = kDefaultMapLimit);
/// Same identity on `samples` random (f, v) pairs drawn from the enumerated sets.
LemmaReport verify_lemma_swap_sampled(const HetAlgebra& h, const TruthLattice& A, std::size_t samples, std::uint64_t seed);

/// Atom valuation: SD atoms to L_S, PP atoms to L_P.
using AlgebraValuation = std::map<std::pair<std::string, Sort>, Element>;

/// Throws UnknownAtom.
Element evaluate(const HetAlgebra& h, const Formula& phi, const AlgebraValuation& v);
bool sequent_true(const HetAlgebra& h, const Sequent& s, const AlgebraValuation& v);

/// Random normal heterogeneous algebra on lattices of at most `max_size` elements.
HetAlgebra random_het_algebra(int max_size, std::mt19937_64& rng);

}  // namespace mvl::algebra
