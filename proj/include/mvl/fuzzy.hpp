#pragma once

#include "mvl/lattice.hpp"

#include <utility>
#include <vector>

namespace mvl {

/// A-valued subset of a finite indexed domain W = {0, ..., size-1}.
using ASet = Eigen::Array<Value, Eigen::Dynamic, 1>;
/// A-valued relation U x W; rows index U, columns index W.
using ARelation = Eigen::Array<Value, Eigen::Dynamic, Eigen::Dynamic>;

/// Product domain A x Z is laid out alpha-major: (alpha, z) -> alpha*|Z| + z,
/// so an A-set over it maps onto a row-major |A| x |Z| table (rows = alpha).
inline Index product_index(Value alpha, Index z, Index states) { return static_cast<Index>(alpha) * states + z; }

using ProductTable = Eigen::Array<Value, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Row-major |A| x |Z| view of an A-set over A x Z.
ProductTable as_table(const ASet& over_product, Index states);

ASet constant_set(Index size, Value v);

ASet pointwise_meet(const TruthLattice& L, const ASet& f, const ASet& g);
ASet pointwise_join(const TruthLattice& L, const ASet& f, const ASet& g);
/// f ⊆ g in the pointwise lattice order.
bool included(const TruthLattice& L, const ASet& f, const ASet& g);

/// S_W(f, g) = meet over z of f(z) -> g(z).
Value subsethood(const TruthLattice& L, const ASet& f, const ASet& g);

/// {alpha / w}: alpha at w, bottom elsewhere.
ASet singleton(const TruthLattice& L, Value alpha, Index w, Index size);

/// Non-bottom (value, element) generators of f; their singletons join to f.
std::vector<std::pair<Value, Index>> decompose(const TruthLattice& L, const ASet& f);
ASet join_of_singletons(const TruthLattice& L, const std::vector<std::pair<Value, Index>>& parts, Index size);

/// R^(0)[u](a) = meet over x of u(x) -> R(a, x). R is U x W, u over W, result over U.
ASet r0(const TruthLattice& L, const ARelation& R, const ASet& u);
/// R^(1)[f](x) = meet over a of f(a) -> R(a, x). f over U, result over W.
ASet r1(const TruthLattice& L, const ARelation& R, const ASet& f);

/// I_R((alpha, s), w) = R(s, w) -> alpha; shape (|A|·|U|) x |W|.
ARelation lift_I(const TruthLattice& L, const ARelation& R);
/// J_R(s, (alpha, w)) = R(s, w) -> alpha; shape |U| x (|A|·|W|).
ARelation lift_J(const TruthLattice& L, const ARelation& R);

/// Delta_Z <= R.
bool is_reflexive(const TruthLattice& L, const ARelation& R);

/// Throws DomainError if any entry lies outside the carrier.
void check_values(const TruthLattice& L, const ASet& f);
void check_values(const TruthLattice& L, const ARelation& R);

}  // namespace mvl
