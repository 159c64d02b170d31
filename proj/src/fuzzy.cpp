#include "mvl/fuzzy.hpp"

#include "mvl/errors.hpp"

#include <string>

namespace mvl {

namespace {

void same_size(Index a, Index b, const char* what) {
  if (a != b) throw DomainMismatch(std::string(what) + ": domain sizes " + std::to_string(a) + " and " + std::to_string(b) + " differ");
}

}  // namespace

ProductTable as_table(const ASet& over_product, Index states) {
  if (states <= 0 || over_product.size() % states != 0) throw DomainMismatch("A-set size is not a multiple of the state count");
  return Eigen::Map<const ProductTable>(over_product.data(), over_product.size() / states, states);
}

ASet constant_set(Index size, Value v) { return ASet::Constant(size, v); }

ASet pointwise_meet(const TruthLattice& L, const ASet& f, const ASet& g) {
  same_size(f.size(), g.size(), "pointwise meet");
  ASet out(f.size());
  for (Index i = 0; i < f.size(); ++i) out(i) = L.meet(f(i), g(i));
  return out;
}

ASet pointwise_join(const TruthLattice& L, const ASet& f, const ASet& g) {
  same_size(f.size(), g.size(), "pointwise join");
  ASet out(f.size());
  for (Index i = 0; i < f.size(); ++i) out(i) = L.join(f(i), g(i));
  return out;
}

bool included(const TruthLattice& L, const ASet& f, const ASet& g) {
  same_size(f.size(), g.size(), "inclusion");
  for (Index i = 0; i < f.size(); ++i)
    if (!L.leq(f(i), g(i))) return false;
  return true;
}

Value subsethood(const TruthLattice& L, const ASet& f, const ASet& g) {
  same_size(f.size(), g.size(), "subsethood");
  Value acc = L.top();
  for (Index i = 0; i < f.size(); ++i) acc = L.meet(acc, L.imp(f(i), g(i)));
  return acc;
}

ASet singleton(const TruthLattice& L, Value alpha, Index w, Index size) {
  if (w < 0 || w >= size) throw DomainMismatch("element " + std::to_string(w) + " not in domain of size " + std::to_string(size));
  if (!L.contains(alpha)) throw DomainError("truth value outside carrier");
  ASet out = ASet::Constant(size, L.bottom());
  out(w) = alpha;
  return out;
}

std::vector<std::pair<Value, Index>> decompose(const TruthLattice& L, const ASet& f) {
  std::vector<std::pair<Value, Index>> parts;
  for (Index i = 0; i < f.size(); ++i)
    if (f(i) != L.bottom()) parts.emplace_back(f(i), i);
  return parts;
}

ASet join_of_singletons(const TruthLattice& L, const std::vector<std::pair<Value, Index>>& parts, Index size) {
  ASet out = ASet::Constant(size, L.bottom());
  for (const auto& [alpha, w] : parts) out = pointwise_join(L, out, singleton(L, alpha, w, size));
  return out;
}

ASet r0(const TruthLattice& L, const ARelation& R, const ASet& u) {
  same_size(R.cols(), u.size(), "R^(0)");
  ASet out(R.rows());
  for (Index a = 0; a < R.rows(); ++a) {
    Value acc = L.top();
    for (Index x = 0; x < R.cols(); ++x) acc = L.meet(acc, L.imp(u(x), R(a, x)));
    out(a) = acc;
  }
  return out;
}

ASet r1(const TruthLattice& L, const ARelation& R, const ASet& f) {
  same_size(R.rows(), f.size(), "R^(1)");
  ASet out(R.cols());
  for (Index x = 0; x < R.cols(); ++x) {
    Value acc = L.top();
    for (Index a = 0; a < R.rows(); ++a) acc = L.meet(acc, L.imp(f(a), R(a, x)));
    out(x) = acc;
  }
  return out;
}

ARelation lift_I(const TruthLattice& L, const ARelation& R) {
  const Index u = R.rows();
  ARelation out(L.size() * u, R.cols());
  for (Value alpha = 0; alpha < L.size(); ++alpha)
    for (Index s = 0; s < u; ++s)
      for (Index w = 0; w < R.cols(); ++w) out(product_index(alpha, s, u), w) = L.imp(R(s, w), alpha);
  return out;
}

ARelation lift_J(const TruthLattice& L, const ARelation& R) {
  const Index w_count = R.cols();
  ARelation out(R.rows(), L.size() * w_count);
  for (Index s = 0; s < R.rows(); ++s)
    for (Value alpha = 0; alpha < L.size(); ++alpha)
      for (Index w = 0; w < w_count; ++w) out(s, product_index(alpha, w, w_count)) = L.imp(R(s, w), alpha);
  return out;
}

bool is_reflexive(const TruthLattice& L, const ARelation& R) {
  if (R.rows() != R.cols()) return false;
  for (Index z = 0; z < R.rows(); ++z)
    if (R(z, z) != L.top()) return false;
  return true;
}

void check_values(const TruthLattice& L, const ASet& f) {
  if ((f < 0).any() || (f >= L.size()).any()) throw DomainError("A-set value outside carrier");
}

void check_values(const TruthLattice& L, const ARelation& R) {
  if ((R < 0).any() || (R >= L.size()).any()) throw DomainError("A-relation entry outside carrier");
}

}  // namespace mvl
