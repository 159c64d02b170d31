#pragma once

// Independent oracles and seeded generators shared by the test binaries.
// Oracles use the arithmetic definitions of the Lukasiewicz connectives on
// integer grid points and plain loops, never the library's operation tables.

#include "mvl/graph.hpp"
#include "mvl/lattice.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace oracle {

using mvl::ARelation;
using mvl::ASet;
using mvl::Index;
using mvl::Value;

struct Luk {
  int d;  // grid denominator
  explicit Luk(int n) : d(n - 1) {}
  Value imp(Value a, Value b) const { return std::min(d, d - a + b); }
  Value otimes(Value a, Value b) const { return std::max(0, a + b - d); }
};

inline Value subsethood(const Luk& A, const ASet& f, const ASet& g) {
  Value m = A.d;
  for (Index i = 0; i < f.size(); ++i) m = std::min(m, A.imp(f(i), g(i)));
  return m;
}

// R^(0)[u](a) = min_x u(x) -> R(a, x)
inline ASet r0(const Luk& A, const ARelation& R, const ASet& u) {
  ASet out(R.rows());
  for (Index a = 0; a < R.rows(); ++a) {
    Value m = A.d;
    for (Index x = 0; x < R.cols(); ++x) m = std::min(m, A.imp(u(x), R(a, x)));
    out(a) = m;
  }
  return out;
}

inline ASet r1(const Luk& A, const ARelation& R, const ASet& f) {
  ASet out(R.cols());
  for (Index x = 0; x < R.cols(); ++x) {
    Value m = A.d;
    for (Index a = 0; a < R.rows(); ++a) m = std::min(m, A.imp(f(a), R(a, x)));
    out(x) = m;
  }
  return out;
}

// val(b, z) = min_{z'} descr(z') -> (E(z, z') -> b), alpha-major layout.
inline ASet e0(const Luk& A, const ARelation& E, const ASet& u) {
  const Index n = E.rows();
  ASet out((A.d + 1) * n);
  for (Value b = 0; b <= A.d; ++b)
    for (Index z = 0; z < n; ++z) {
      Value m = A.d;
      for (Index w = 0; w < n; ++w) m = std::min(m, A.imp(u(w), A.imp(E(z, w), b)));
      out(b * n + z) = m;
    }
  return out;
}

inline ASet e1(const Luk& A, const ARelation& E, const ASet& f) {
  const Index n = E.rows();
  ASet out(n);
  for (Index z = 0; z < n; ++z) {
    Value m = A.d;
    for (Value b = 0; b <= A.d; ++b)
      for (Index w = 0; w < n; ++w) m = std::min(m, A.imp(f(b * n + w), A.imp(E(w, z), b)));
    out(z) = m;
  }
  return out;
}

// Every pair (f, u) with f = u down and u = f up, found by scanning all f.
inline std::vector<std::pair<ASet, ASet>> stable_pairs(const Luk& A, const ARelation& I) {
  std::vector<std::pair<ASet, ASet>> out;
  const Index n = I.rows();
  ASet f = ASet::Zero(n);
  for (;;) {
    const ASet u = r1(A, I, f);
    if ((r0(A, I, u) == f).all()) out.emplace_back(f, u);
    Index i = 0;
    while (i < n && f(i) == A.d) f(i++) = 0;
    if (i == n) break;
    ++f(i);
  }
  return out;
}

}  // namespace oracle

namespace gen {

using Rng = std::mt19937;

inline mvl::Value value(const mvl::TruthLattice& L, Rng& rng) {
  return std::uniform_int_distribution<int>(0, L.size() - 1)(rng);
}

inline mvl::ASet set(const mvl::TruthLattice& L, mvl::Index n, Rng& rng) {
  mvl::ASet f(n);
  for (mvl::Index i = 0; i < n; ++i) f(i) = value(L, rng);
  return f;
}

inline mvl::ARelation relation(const mvl::TruthLattice& L, mvl::Index r, mvl::Index c, Rng& rng) {
  mvl::ARelation R(r, c);
  for (mvl::Index i = 0; i < r; ++i)
    for (mvl::Index j = 0; j < c; ++j) R(i, j) = value(L, rng);
  return R;
}

inline mvl::ARelation reflexive(const mvl::TruthLattice& L, mvl::Index n, Rng& rng) {
  mvl::ARelation E = relation(L, n, n, rng);
  for (mvl::Index i = 0; i < n; ++i) E(i, i) = L.top();
  return E;
}

inline mvl::Index size(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace gen
