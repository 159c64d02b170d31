#include "mvl/algebra.hpp"

#include "mvl/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mvl::algebra {

namespace {

// Index of the unique greatest element of `candidates` w.r.t. leq, or -1.
Element greatest(const BoolTable& leq, const std::vector<Element>& candidates) {
  for (Element c : candidates) {
    bool all = true;
    for (Element d : candidates) all = all && leq(d, c);
    if (all) return c;
  }
  return -1;
}

Element least(const BoolTable& leq, const std::vector<Element>& candidates) {
  for (Element c : candidates) {
    bool all = true;
    for (Element d : candidates) all = all && leq(c, d);
    if (all) return c;
  }
  return -1;
}

bool is_partial_order(const BoolTable& leq) {
  const Index n = leq.rows();
  for (Index a = 0; a < n; ++a) {
    if (!leq(a, a)) return false;
    for (Index b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) return false;
      if (!leq(a, b)) continue;
      for (Index c = 0; c < n; ++c)
        if (leq(b, c) && !leq(a, c)) return false;
    }
  }
  return true;
}

}  // namespace

FiniteLattice FiniteLattice::from_order(BoolTable leq, std::vector<std::string> labels) {
  const Index n = leq.rows();
  if (n == 0 || leq.cols() != n) throw InvalidLattice("order relation must be square and non-empty");
  if (!is_partial_order(leq)) throw InvalidLattice("relation is not a partial order");
  if (labels.empty())
    for (Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  if (static_cast<Index>(labels.size()) != n) throw InvalidLattice("label count does not match lattice size");
  FiniteLattice L;
  L.meet_.resize(n, n);
  L.join_.resize(n, n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      std::vector<Element> lower, upper;
      for (Element c = 0; c < n; ++c) {
        if (leq(c, a) && leq(c, b)) lower.push_back(c);
        if (leq(a, c) && leq(b, c)) upper.push_back(c);
      }
      const Element m = greatest(leq, lower);
      const Element j = least(leq, upper);
      if (m < 0 || j < 0) throw InvalidLattice("elements " + labels[a] + " and " + labels[b] + " lack a meet or join");
      L.meet_(a, b) = m;
      L.join_(a, b) = j;
    }
  std::vector<Element> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  L.bottom_ = least(leq, all);
  L.top_ = greatest(leq, all);
  L.leq_ = std::move(leq);
  L.labels_ = std::move(labels);
  return L;
}

FiniteLattice FiniteLattice::chain(int n) {
  if (n < 1) throw InvalidLattice("chain needs at least one element");
  BoolTable leq(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq(a, b) = a <= b;
  return from_order(std::move(leq));
}

FiniteLattice FiniteLattice::boolean(int k) {
  if (k < 0 || k > 6) throw InvalidLattice("boolean lattice needs 0..6 generators");
  const int n = 1 << k;
  BoolTable leq(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq(a, b) = (a & b) == a;
  return from_order(std::move(leq));
}

FiniteLattice FiniteLattice::diamond(int m) {
  if (m < 1) throw InvalidLattice("diamond needs at least one atom");
  const int n = m + 2;
  BoolTable leq = BoolTable::Constant(n, n, false);
  for (int a = 0; a < n; ++a) {
    leq(0, a) = true;
    leq(a, n - 1) = true;
    leq(a, a) = true;
  }
  std::vector<std::string> labels{"0"};
  for (int a = 1; a <= m; ++a) labels.push_back(std::string(1, static_cast<char>('a' + a - 1)));
  labels.push_back("1");
  return from_order(std::move(leq), std::move(labels));
}

FiniteLattice FiniteLattice::pentagon() {
  BoolTable leq = BoolTable::Constant(5, 5, false);
  for (int a = 0; a < 5; ++a) {
    leq(0, a) = true;
    leq(a, 4) = true;
    leq(a, a) = true;
  }
  leq(1, 2) = true;
  return from_order(std::move(leq), {"0", "a", "b", "c", "1"});
}

bool FiniteLattice::is_distributive() const {
  for (Element a = 0; a < size(); ++a)
    for (Element b = 0; b < size(); ++b)
      for (Element c = 0; c < size(); ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
  return true;
}

std::vector<FiniteLattice> all_lattices(int max_size) {
  if (max_size > 6) throw SizeLimitExceeded("lattice enumeration is limited to 6 elements");
  std::vector<FiniteLattice> out;
  for (int n = 1; n <= max_size; ++n) {
    if (n <= 2) {
      out.push_back(FiniteLattice::chain(n));
      continue;
    }
    const int m = n - 2;  // elements strictly between bottom and top
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j)
        if (i != j) pairs.emplace_back(i, j);
    std::set<std::vector<bool>> seen;
    for (std::uint32_t bits = 0; bits < (1u << pairs.size()); ++bits) {
      BoolTable leq = BoolTable::Constant(n, n, false);
      for (int a = 0; a < n; ++a) {
        leq(0, a) = leq(a, n - 1) = leq(a, a) = true;
      }
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (bits & (1u << k)) leq(pairs[k].first, pairs[k].second) = true;
      if (!is_partial_order(leq)) continue;
      // Canonical form: smallest encoding over permutations of the middle.
      std::vector<int> perm(static_cast<std::size_t>(m));
      std::iota(perm.begin(), perm.end(), 1);
      std::vector<bool> best;
      do {
        std::vector<bool> code;
        for (const auto& [i, j] : pairs) code.push_back(leq(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(j - 1)]));
        if (best.empty() || code < best) best = code;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!seen.insert(best).second) continue;
      try {
        out.push_back(FiniteLattice::from_order(std::move(leq)));
      } catch (const InvalidLattice&) {
        // poset without all meets/joins
      }
    }
  }
  return out;
}

bool is_monotone(const Map& op, const FiniteLattice& src, const FiniteLattice& dst) {
  for (Element a = 0; a < src.size(); ++a)
    for (Element b = 0; b < src.size(); ++b)
      if (src.leq(a, b) && !dst.leq(op[static_cast<std::size_t>(a)], op[static_cast<std::size_t>(b)])) return false;
  return true;
}

bool is_normal(const Map& op, const FiniteLattice& src, const FiniteLattice& dst) {
  if (static_cast<int>(op.size()) != src.size()) return false;
  for (Element x : op)
    if (x < 0 || x >= dst.size()) return false;
  if (op[static_cast<std::size_t>(src.bottom())] != dst.bottom()) return false;
  for (Element a = 0; a < src.size(); ++a)
    for (Element b = 0; b < src.size(); ++b)
      if (op[static_cast<std::size_t>(src.join(a, b))] != dst.join(op[static_cast<std::size_t>(a)], op[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

std::vector<Map> normal_maps(const FiniteLattice& src, const FiniteLattice& dst) {
  std::vector<Map> out;
  Map op(static_cast<std::size_t>(src.size()), 0);
  while (true) {
    if (is_normal(op, src, dst)) out.push_back(op);
    std::size_t k = 0;
    while (k < op.size() && ++op[k] == dst.size()) op[k++] = 0;
    if (k == op.size()) break;
  }
  return out;
}

HetAlgebraCheck is_het_algebra(const HetAlgebra& h) {
  HetAlgebraCheck r;
  if (!is_normal(h.loz, h.ls, h.lp)) r.problems.push_back("loz is not normal (bottom- and join-preserving)");
  if (!is_normal(h.dmd, h.lp, h.ls)) r.problems.push_back("dmd is not normal (bottom- and join-preserving)");
  r.ok = r.problems.empty();
  return r;
}

std::vector<HetAlgebra> all_het_algebras(const FiniteLattice& ls, const FiniteLattice& lp) {
  std::vector<HetAlgebra> out;
  const auto lozs = normal_maps(ls, lp);
  const auto dmds = normal_maps(lp, ls);
  for (const auto& l : lozs)
    for (const auto& d : dmds) out.push_back({ls, lp, l, d});
  return out;
}

bool is_afilter(const AMap& f, const FiniteLattice& lat, const TruthLattice& A) {
  if (static_cast<int>(f.size()) != lat.size()) return false;
  if (f[static_cast<std::size_t>(lat.top())] != A.top()) return false;
  for (Element a = 0; a < lat.size(); ++a)
    for (Element b = 0; b < lat.size(); ++b)
      if (f[static_cast<std::size_t>(lat.meet(a, b))] != A.meet(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

bool is_proper_afilter(const AMap& f, const FiniteLattice& lat, const TruthLattice& A) {
  return is_afilter(f, lat, A) && f[static_cast<std::size_t>(lat.bottom())] == A.bottom();
}

bool is_ideal_complement(const AMap& u, const FiniteLattice& lat, const TruthLattice& A) {
  if (static_cast<int>(u.size()) != lat.size()) return false;
  if (u[static_cast<std::size_t>(lat.bottom())] != A.bottom()) return false;
  for (Element a = 0; a < lat.size(); ++a)
    for (Element b = 0; b < lat.size(); ++b)
      if (u[static_cast<std::size_t>(lat.join(a, b))] != A.join(u[static_cast<std::size_t>(a)], u[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

bool is_proper_ideal_complement(const AMap& u, const FiniteLattice& lat, const TruthLattice& A) {
  return is_ideal_complement(u, lat, A) && u[static_cast<std::size_t>(lat.top())] == A.top();
}

std::vector<AMap> all_amaps(const FiniteLattice& lat, const TruthLattice& A, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (int i = 0; i < lat.size(); ++i) {
    total *= static_cast<std::uint64_t>(A.size());
    if (total > limit) throw SizeLimitExceeded("more than " + std::to_string(limit) + " maps into the truth lattice");
  }
  std::vector<AMap> out;
  out.reserve(total);
  AMap f(static_cast<std::size_t>(lat.size()), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    out.push_back(f);
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == A.size()) f[i++] = 0;
  }
  return out;
}

std::vector<AMap> afilters(const FiniteLattice& lat, const TruthLattice& A, bool proper, std::uint64_t limit) {
  std::vector<AMap> out;
  for (auto& f : all_amaps(lat, A, limit))
    if (proper ? is_proper_afilter(f, lat, A) : is_afilter(f, lat, A)) out.push_back(std::move(f));
  return out;
}

std::vector<AMap> ideal_complements(const FiniteLattice& lat, const TruthLattice& A, bool proper, std::uint64_t limit) {
  std::vector<AMap> out;
  for (auto& u : all_amaps(lat, A, limit))
    if (proper ? is_proper_ideal_complement(u, lat, A) : is_ideal_complement(u, lat, A)) out.push_back(std::move(u));
  return out;
}

namespace {

// out(t) = join { k(x) | op(x) <= t } for op: X -> T.
AMap minus(const AMap& k, const Map& op, const FiniteLattice& target, const TruthLattice& A) {
  AMap out(static_cast<std::size_t>(target.size()), A.bottom());
  for (Element t = 0; t < target.size(); ++t)
    for (std::size_t x = 0; x < op.size(); ++x)
      if (target.leq(op[x], t)) out[static_cast<std::size_t>(t)] = A.join(out[static_cast<std::size_t>(t)], k[x]);
  return out;
}

// meet_t (a(t) -> b(t)).
Value subsethood(const AMap& a, const AMap& b, const TruthLattice& A) {
  Value acc = A.top();
  for (std::size_t i = 0; i < a.size(); ++i) acc = A.meet(acc, A.imp(a[i], b[i]));
  return acc;
}

AMap compose(const AMap& v, const Map& op) {
  AMap out(op.size());
  for (std::size_t i = 0; i < op.size(); ++i) out[i] = v[static_cast<std::size_t>(op[i])];
  return out;
}

// Both sides of the swap identity for one (f, v) pair.
std::pair<Value, Value> swap_sides(const AMap& f, const AMap& v, const Map& op, const FiniteLattice& target, const TruthLattice& A) {
  return {subsethood(minus(f, op, target, A), v, A), subsethood(f, compose(v, op), A)};
}

std::string swap_detail(const TruthLattice& A, Value lhs, Value rhs) { return "lhs " + A.format(lhs) + " != rhs " + A.format(rhs); }

}  // namespace

AMap minus_dmd(const AMap& k, const HetAlgebra& h, const TruthLattice& A) {
  if (static_cast<int>(k.size()) != h.lp.size()) throw DomainMismatch("k must be defined on L_P");
  return minus(k, h.dmd, h.ls, A);
}

AMap minus_loz(const AMap& g, const HetAlgebra& h, const TruthLattice& A) {
  if (static_cast<int>(g.size()) != h.ls.size()) throw DomainMismatch("h must be defined on L_S");
  return minus(g, h.loz, h.lp, A);
}

LemmaReport verify_lemma_filter_closure(const HetAlgebra& h, const TruthLattice& A, std::uint64_t limit) {
  LemmaReport r;
  for (const auto& f : afilters(h.lp, A, false, limit)) {
    ++r.checked;
    AMap m = minus_dmd(f, h, A);
    if (!is_afilter(m, h.ls, A)) r.failures.push_back({"dmd", f, m, "f^{-dmd} is not an A-filter"});
  }
  for (const auto& g : afilters(h.ls, A, false, limit)) {
    ++r.checked;
    AMap m = minus_loz(g, h, A);
    if (!is_afilter(m, h.lp, A)) r.failures.push_back({"loz", g, m, "g^{-loz} is not an A-filter"});
  }
  return r;
}

LemmaReport verify_lemma_swap(const HetAlgebra& h, const TruthLattice& A, std::uint64_t limit) {
  LemmaReport r;
  const auto fp = afilters(h.lp, A, true, limit);
  const auto cs = ideal_complements(h.ls, A, true, limit);
  for (const auto& f : fp)
    for (const auto& v : cs) {
      ++r.checked;
      auto [lhs, rhs] = swap_sides(f, v, h.dmd, h.ls, A);
      if (lhs != rhs) r.failures.push_back({"dmd", f, v, swap_detail(A, lhs, rhs)});
    }
  const auto gs = afilters(h.ls, A, true, limit);
  const auto cp = ideal_complements(h.lp, A, true, limit);
  for (const auto& g : gs)
    for (const auto& u : cp) {
      ++r.checked;
      auto [lhs, rhs] = swap_sides(g, u, h.loz, h.lp, A);
      if (lhs != rhs) r.failures.push_back({"loz", g, u, swap_detail(A, lhs, rhs)});
    }
  return r;
}

LemmaReport verify_lemma_swap_sampled(const HetAlgebra& h, const TruthLattice& A, std::size_t samples, std::uint64_t seed) {
  LemmaReport r;
  std::mt19937_64 rng(seed);
  const auto fp = afilters(h.lp, A, true);
  const auto cs = ideal_complements(h.ls, A, true);
  const auto gs = afilters(h.ls, A, true);
  const auto cp = ideal_complements(h.lp, A, true);
  auto pick = [&](const std::vector<AMap>& v) -> const AMap& {
    std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
    return v[d(rng)];
  };
  for (std::size_t n = 0; n < samples; ++n) {
    if (!fp.empty() && !cs.empty()) {
      const AMap& f = pick(fp);
      const AMap& v = pick(cs);
      ++r.checked;
      auto [lhs, rhs] = swap_sides(f, v, h.dmd, h.ls, A);
      if (lhs != rhs) r.failures.push_back({"dmd", f, v, swap_detail(A, lhs, rhs)});
    }
    if (!gs.empty() && !cp.empty()) {
      const AMap& g = pick(gs);
      const AMap& u = pick(cp);
      ++r.checked;
      auto [lhs, rhs] = swap_sides(g, u, h.loz, h.lp, A);
      if (lhs != rhs) r.failures.push_back({"loz", g, u, swap_detail(A, lhs, rhs)});
    }
  }
  return r;
}

Element evaluate(const HetAlgebra& h, const Formula& phi, const AlgebraValuation& v) {
  const FiniteLattice& L = phi.sort() == Sort::SD ? h.ls : h.lp;
  switch (phi.op()) {
    case Connective::Top: return L.top();
    case Connective::Bot: return L.bottom();
    case Connective::Atom: {
      auto it = v.find({phi.name(), phi.sort()});
      if (it == v.end()) throw UnknownAtom(std::string("atom ") + phi.name() + " has no value at sort " + to_string(phi.sort()));
      return it->second;
    }
    case Connective::And: return L.meet(evaluate(h, *phi.left(), v), evaluate(h, *phi.right(), v));
    case Connective::Or: return L.join(evaluate(h, *phi.left(), v), evaluate(h, *phi.right(), v));
    case Connective::Dmd: return h.dmd[static_cast<std::size_t>(evaluate(h, *phi.inner(), v))];
    case Connective::Loz: return h.loz[static_cast<std::size_t>(evaluate(h, *phi.inner(), v))];
  }
  throw Error("unreachable connective");
}

bool sequent_true(const HetAlgebra& h, const Sequent& s, const AlgebraValuation& v) {
  const FiniteLattice& L = s.sort() == Sort::SD ? h.ls : h.lp;
  return L.leq(evaluate(h, *s.lhs, v), evaluate(h, *s.rhs, v));
}

HetAlgebra random_het_algebra(int max_size, std::mt19937_64& rng) {
  const auto lattices = all_lattices(max_size);
  std::uniform_int_distribution<std::size_t> pick_lattice(0, lattices.size() - 1);
  const FiniteLattice& ls = lattices[pick_lattice(rng)];
  const FiniteLattice& lp = lattices[pick_lattice(rng)];
  const auto lozs = normal_maps(ls, lp);
  const auto dmds = normal_maps(lp, ls);
  std::uniform_int_distribution<std::size_t> pl(0, lozs.size() - 1), pd(0, dmds.size() - 1);
  return {ls, lp, lozs[pl(rng)], dmds[pd(rng)]};
}

}  // namespace mvl::algebra
