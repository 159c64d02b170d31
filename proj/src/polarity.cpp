#include "mvl/polarity.hpp"

#include "mvl/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mvl {

namespace {

using Key = std::vector<Value>;

Key key_of(const ASet& f) { return Key(f.data(), f.data() + f.size()); }

ASet set_of(const Key& k) {
  ASet f(static_cast<Index>(k.size()));
  for (std::size_t i = 0; i < k.size(); ++i) f(static_cast<Index>(i)) = k[i];
  return f;
}

bool same(const ASet& a, const ASet& b) { return a.size() == b.size() && (a == b).all(); }

}  // namespace

APolarity make_polarity(LatticePtr lattice, ARelation incidence) {
  if (!lattice) throw Error("polarity without lattice");
  if (incidence.rows() == 0 || incidence.cols() == 0) throw DomainMismatch("polarity needs non-empty objects and attributes");
  check_values(*lattice, incidence);
  APolarity P{std::move(lattice), std::move(incidence), {}, {}};
  for (Index a = 0; a < P.object_count(); ++a) P.objects.push_back("a" + std::to_string(a));
  for (Index x = 0; x < P.attribute_count(); ++x) P.attributes.push_back("x" + std::to_string(x));
  return P;
}

ASet up(const APolarity& P, const ASet& f) { return r1(P.L(), P.incidence, f); }
ASet down(const APolarity& P, const ASet& u) { return r0(P.L(), P.incidence, u); }
ASet close_extent(const APolarity& P, const ASet& f) { return down(P, up(P, f)); }
ASet close_intent(const APolarity& P, const ASet& u) { return up(P, down(P, u)); }
bool is_stable_extent(const APolarity& P, const ASet& f) { return same(close_extent(P, f), f); }
bool is_stable_intent(const APolarity& P, const ASet& u) { return same(close_intent(P, u), u); }

bool is_concept(const APolarity& P, const AConcept& c) {
  return c.extent.size() == P.object_count() && c.intent.size() == P.attribute_count() && same(up(P, c.extent), c.intent) &&
         same(down(P, c.intent), c.extent);
}

AConcept concept_of_extent(const APolarity& P, const ASet& f) {
  ASet u = up(P, f);
  return {down(P, u), u};
}

AConcept concept_of_intent(const APolarity& P, const ASet& u) {
  ASet f = down(P, u);
  return {f, up(P, f)};
}

std::vector<AConcept> enumerate_concepts(const APolarity& P, EnumerationMode mode, std::uint64_t limit) {
  const TruthLattice& L = P.L();
  std::set<Key> extents;

  if (mode == EnumerationMode::Exhaustive) {
    const Index n = P.object_count();
    std::uint64_t total = 1;
    for (Index i = 0; i < n; ++i) {
      total *= static_cast<std::uint64_t>(L.size());
      if (total > limit) throw SizeLimitExceeded("exhaustive concept scan needs more than " + std::to_string(limit) + " candidates");
    }
    ASet f = ASet::Zero(n);
    for (std::uint64_t k = 0; k < total; ++k) {
      std::uint64_t r = k;
      for (Index i = 0; i < n; ++i) {
        f(i) = static_cast<Value>(r % static_cast<std::uint64_t>(L.size()));
        r /= static_cast<std::uint64_t>(L.size());
      }
      if (is_stable_extent(P, f)) extents.insert(key_of(f));
    }
  } else {
    std::vector<ASet> generators;
    for (Index x = 0; x < P.attribute_count(); ++x)
      for (Value alpha = 0; alpha < L.size(); ++alpha) generators.push_back(down(P, singleton(L, alpha, x, P.attribute_count())));
    std::vector<Key> frontier{key_of(ASet::Constant(P.object_count(), L.top()))};
    extents.insert(frontier.front());
    while (!frontier.empty()) {
      ASet e = set_of(frontier.back());
      frontier.pop_back();
      for (const ASet& g : generators) {
        Key k = key_of(pointwise_meet(L, e, g));
        if (extents.insert(k).second) {
          if (extents.size() > limit) throw SizeLimitExceeded("concept count exceeds " + std::to_string(limit));
          frontier.push_back(std::move(k));
        }
      }
    }
  }

  std::vector<AConcept> out;
  out.reserve(extents.size());
  for (const Key& k : extents) {
    ASet f = set_of(k);
    ASet u = up(P, f);
    out.push_back({std::move(f), std::move(u)});
  }
  return out;
}

int ConceptLattice::find_extent(const ASet& extent) const {
  for (int i = 0; i < size(); ++i)
    if (same(concepts[static_cast<std::size_t>(i)].extent, extent)) return i;
  return -1;
}

AConcept concept_meet(const APolarity& P, const AConcept& c, const AConcept& d) {
  ASet f = pointwise_meet(P.L(), c.extent, d.extent);
  ASet u = up(P, f);
  return {std::move(f), std::move(u)};
}

AConcept concept_join(const APolarity& P, const AConcept& c, const AConcept& d) {
  ASet u = pointwise_meet(P.L(), c.intent, d.intent);
  ASet f = down(P, u);
  return {std::move(f), std::move(u)};
}

ConceptLattice concept_lattice(const APolarity& P, EnumerationMode mode, std::uint64_t limit) {
  ConceptLattice CL;
  CL.concepts = enumerate_concepts(P, mode, limit);
  const int n = CL.size();
  std::map<Key, int> index;
  for (int i = 0; i < n; ++i) index.emplace(key_of(CL.concepts[static_cast<std::size_t>(i)].extent), i);
  auto lookup = [&](const ASet& extent) {
    auto it = index.find(key_of(extent));
    if (it == index.end()) throw NotStable("concept operation left the enumerated set");
    return it->second;
  };
  CL.leq.resize(n, n);
  CL.meet.resize(n, n);
  CL.join.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& c = CL.concepts[static_cast<std::size_t>(i)];
      const auto& d = CL.concepts[static_cast<std::size_t>(j)];
      CL.leq(i, j) = included(P.L(), c.extent, d.extent);
      CL.meet(i, j) = lookup(concept_meet(P, c, d).extent);
      CL.join(i, j) = lookup(concept_join(P, c, d).extent);
    }
  }
  CL.top = lookup(ASet::Constant(P.object_count(), P.L().top()));
  CL.bottom = lookup(down(P, ASet::Constant(P.attribute_count(), P.L().top())));
  return CL;
}

std::vector<IncompatibilityWitness> icompat_check(const APolarity& base, const ARelation& r_box, const ARelation& r_dia) {
  const TruthLattice& L = base.L();
  const Index nA = base.object_count();
  const Index nX = base.attribute_count();
  if (r_box.rows() != nA || r_box.cols() != nX) throw DomainMismatch("R_box must be objects x attributes");
  if (r_dia.rows() != nX || r_dia.cols() != nA) throw DomainMismatch("R_dia must be attributes x objects");
  std::vector<IncompatibilityWitness> out;
  for (Value alpha = 0; alpha < L.size(); ++alpha) {
    for (Index x = 0; x < nX; ++x) {
      ASet s = singleton(L, alpha, x, nX);
      if (!is_stable_extent(base, r0(L, r_box, s))) out.push_back({"R_box", "(0)", alpha, x});
      if (!is_stable_extent(base, r1(L, r_dia, s))) out.push_back({"R_dia", "(1)", alpha, x});
    }
    for (Index a = 0; a < nA; ++a) {
      ASet s = singleton(L, alpha, a, nA);
      if (!is_stable_intent(base, r1(L, r_box, s))) out.push_back({"R_box", "(1)", alpha, a});
      if (!is_stable_intent(base, r0(L, r_dia, s))) out.push_back({"R_dia", "(0)", alpha, a});
    }
  }
  return out;
}

EnrichedAContext::EnrichedAContext(APolarity base, ARelation r_box, ARelation r_dia)
    : base_(std::move(base)), r_box_(std::move(r_box)), r_dia_(std::move(r_dia)) {
  check_values(base_.L(), r_box_);
  check_values(base_.L(), r_dia_);
  violations_ = icompat_check(base_, r_box_, r_dia_);
}

AConcept box_complex(const EnrichedAContext& E, const AConcept& c) {
  if (!E.compatible()) throw Incompatible("[R_box] on an incompatible enriched context");
  if (!is_concept(E.base(), c)) throw NotStable("[R_box] argument is not a concept");
  ASet f = r0(E.base().L(), E.r_box(), c.intent);
  ASet u = up(E.base(), f);
  return {std::move(f), std::move(u)};
}

AConcept dia_complex(const EnrichedAContext& E, const AConcept& c) {
  if (!E.compatible()) throw Incompatible("<R_dia> on an incompatible enriched context");
  if (!is_concept(E.base(), c)) throw NotStable("<R_dia> argument is not a concept");
  ASet u = r0(E.base().L(), E.r_dia(), c.extent);
  ASet f = down(E.base(), u);
  return {std::move(f), std::move(u)};
}

}  // namespace mvl
