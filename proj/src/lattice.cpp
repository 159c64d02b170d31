#include "mvl/lattice.hpp"

#include "mvl/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

namespace mvl {

namespace {

// Smallest k with 10^k divisible by d, or -1 when the grid is not decimal.
int decimal_places(int d) {
  long long p = 1;
  for (int k = 0; k <= 9; ++k, p *= 10) {
    if (p % d == 0) return k;
  }
  return -1;
}

std::vector<std::string> chain_labels(int n) {
  const int d = n - 1;
  const int places = decimal_places(d);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (places < 0) {
      if (i == 0 || i == d) {
        labels.push_back(i == 0 ? "0" : "1");
      } else {
        const int g = std::gcd(i, d);
        labels.push_back(std::to_string(i / g) + "/" + std::to_string(d / g));
      }
      continue;
    }
    long long scale = 1;
    for (int k = 0; k < places; ++k) scale *= 10;
    const long long scaled = static_cast<long long>(i) * (scale / d);
    std::string s = std::to_string(scaled / scale);
    if (places > 0) {
      std::string frac = std::to_string(scaled % scale);
      frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
      s += "." + frac;
    }
    labels.push_back(s);
  }
  return labels;
}

OpTable make_table(int n, auto&& op) {
  OpTable t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(i, j) = op(i, j);
  return t;
}

}  // namespace

TruthLattice::TruthLattice(Kind kind, Tables tables) : kind_(kind), tables_(std::move(tables)) {
  const int n = size();
  if (n < 1) throw InvalidLattice("empty carrier");
  for (const OpTable* t : {&tables_.meet, &tables_.join, &tables_.otimes, &tables_.imp}) {
    if (t->rows() != n || t->cols() != n) throw InvalidLattice("operation table is not " + std::to_string(n) + "x" + std::to_string(n));
    if ((*t < 0).any() || (*t >= n).any()) throw InvalidLattice("operation table entry outside carrier");
  }
  if (kind_ != Kind::Table) {
    bottom_ = 0;
    top_ = n - 1;
    return;
  }
  bottom_ = top_ = -1;
  for (int x = 0; x < n; ++x) {
    if ((tables_.meet.row(x) == x).all()) bottom_ = x;
    if ((tables_.join.row(x) == x).all()) top_ = x;
  }
  if (bottom_ < 0 || top_ < 0) throw InvalidLattice("meet/join tables have no bottom or no top");
}

TruthLattice TruthLattice::lukasiewicz(int n) {
  if (n < 2) throw InvalidLattice("invalid chain size " + std::to_string(n) + " (need n >= 2)");
  const int d = n - 1;
  Tables t;
  t.labels = chain_labels(n);
  t.meet = make_table(n, [](int a, int b) { return std::min(a, b); });
  t.join = make_table(n, [](int a, int b) { return std::max(a, b); });
  t.otimes = make_table(n, [d](int a, int b) { return std::max(0, a + b - d); });
  t.imp = make_table(n, [d](int a, int b) { return std::min(d, d - a + b); });
  return TruthLattice(Kind::Lukasiewicz, std::move(t));
}

TruthLattice TruthLattice::godel(int n) {
  if (n < 2) throw InvalidLattice("invalid chain size " + std::to_string(n) + " (need n >= 2)");
  const int d = n - 1;
  Tables t;
  t.labels = chain_labels(n);
  t.meet = make_table(n, [](int a, int b) { return std::min(a, b); });
  t.join = make_table(n, [](int a, int b) { return std::max(a, b); });
  t.otimes = t.meet;
  t.imp = make_table(n, [d](int a, int b) { return a <= b ? d : b; });
  return TruthLattice(Kind::Godel, std::move(t));
}

TruthLattice TruthLattice::from_tables(Tables tables) {
  std::vector<std::string> sorted = tables.labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InvalidLattice("duplicate carrier label");
  return TruthLattice(Kind::Table, std::move(tables));
}

Value TruthLattice::check(Value a) const {
  if (!contains(a)) throw DomainError("truth value " + std::to_string(a) + " outside carrier of size " + std::to_string(size()));
  return a;
}

std::string TruthLattice::format(Value v) const { return tables_.labels.at(static_cast<std::size_t>(check(v))); }

Value TruthLattice::parse(std::string_view text) const {
  for (int i = 0; i < size(); ++i)
    if (tables_.labels[static_cast<std::size_t>(i)] == text) return i;
  if (!is_chain()) throw DomainError("unknown truth value label '" + std::string(text) + "'");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    long long num = 0, den = 0;
    auto a = std::from_chars(text.data(), text.data() + slash, num);
    auto b = std::from_chars(text.data() + slash + 1, text.data() + text.size(), den);
    if (a.ec != std::errc{} || b.ec != std::errc{} || den <= 0 || b.ptr != text.data() + text.size())
      throw DomainError("malformed fraction '" + std::string(text) + "'");
    const long long d = denominator();
    if ((num * d) % den != 0) throw DomainError("value " + std::string(text) + " is not on the grid");
    const long long v = num * d / den;
    if (v < 0 || v > d) throw DomainError("value " + std::string(text) + " outside [0,1]");
    return static_cast<Value>(v);
  }
  std::string owned(text);
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(owned, &used);
  } catch (const std::exception&) {
    throw DomainError("malformed truth value '" + owned + "'");
  }
  if (used != owned.size()) throw DomainError("malformed truth value '" + owned + "'");
  return from_double(x);
}

Value TruthLattice::from_double(double x) const {
  if (!is_chain()) throw DomainError("numeric truth values need a chain lattice");
  const double scaled = x * denominator();
  const double r = std::round(scaled);
  if (std::abs(scaled - r) > 1e-6) {
    std::ostringstream os;
    os << "value " << x << " is not on the grid of " << describe();
    throw DomainError(os.str());
  }
  if (r < 0 || r > denominator()) {
    std::ostringstream os;
    os << "value " << x << " outside [0,1]";
    throw DomainError(os.str());
  }
  return static_cast<Value>(r);
}

double TruthLattice::to_double(Value v) const {
  if (!is_chain()) throw Unsupported("numeric view of a table lattice");
  return static_cast<double>(check(v)) / denominator();
}

std::string TruthLattice::describe() const {
  switch (kind_) {
    case Kind::Lukasiewicz: return "lukasiewicz(" + std::to_string(size()) + ")";
    case Kind::Godel: return "godel(" + std::to_string(size()) + ")";
    case Kind::Table: break;
  }
  return "table(" + std::to_string(size()) + ")";
}

TruthLattice luk_chain(int n) { return TruthLattice::lukasiewicz(n); }

std::vector<Value> carrier(const TruthLattice& lattice) {
  std::vector<Value> values(static_cast<std::size_t>(lattice.size()));
  std::iota(values.begin(), values.end(), 0);
  return values;
}

std::vector<LawViolation> check_residuated(const TruthLattice& L) {
  const auto& t = L.tables();
  const int n = L.size();
  std::vector<LawViolation> out;
  auto fail = [&](const char* law, Value a, Value b = -1, Value c = -1) { out.push_back({law, a, b, c}); };
  auto meet = [&](Value a, Value b) { return t.meet(a, b); };
  auto join = [&](Value a, Value b) { return t.join(a, b); };
  auto otimes = [&](Value a, Value b) { return t.otimes(a, b); };
  auto imp = [&](Value a, Value b) { return t.imp(a, b); };
  auto leq = [&](Value a, Value b) { return meet(a, b) == a; };

  for (Value a = 0; a < n; ++a) {
    if (meet(a, a) != a) fail("meet-idempotent", a);
    if (join(a, a) != a) fail("join-idempotent", a);
    if (!leq(L.bottom(), a) || !leq(a, L.top())) fail("bounds", a);
    if (otimes(a, L.top()) != a) fail("otimes-unit", a);
    for (Value b = 0; b < n; ++b) {
      if (meet(a, b) != meet(b, a)) fail("meet-commutative", a, b);
      if (join(a, b) != join(b, a)) fail("join-commutative", a, b);
      if (meet(a, join(a, b)) != a) fail("absorption-meet", a, b);
      if (join(a, meet(a, b)) != a) fail("absorption-join", a, b);
      if ((meet(a, b) == a) != (join(a, b) == b)) fail("order-consistency", a, b);
      if (otimes(a, b) != otimes(b, a)) fail("otimes-commutative", a, b);
      for (Value c = 0; c < n; ++c) {
        if (meet(a, meet(b, c)) != meet(meet(a, b), c)) fail("meet-associative", a, b, c);
        if (join(a, join(b, c)) != join(join(a, b), c)) fail("join-associative", a, b, c);
        if (otimes(a, otimes(b, c)) != otimes(otimes(a, b), c)) fail("otimes-associative", a, b, c);
        if (leq(otimes(a, b), c) != leq(a, imp(b, c))) fail("residuation", a, b, c);
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) fail("frame-distributive", a, b, c);
        if (join(a, meet(b, c)) != meet(join(a, b), join(a, c))) fail("dual-frame-distributive", a, b, c);
        if (otimes(a, join(b, c)) != join(otimes(a, b), otimes(a, c))) fail("otimes-join-distributive", a, b, c);
        if (imp(join(a, b), c) != meet(imp(a, c), imp(b, c))) fail("imp-join-reversing", a, b, c);
        if (imp(a, meet(b, c)) != meet(imp(a, b), imp(a, c))) fail("imp-meet-preserving", a, b, c);
      }
    }
  }
  return out;
}

}  // namespace mvl
