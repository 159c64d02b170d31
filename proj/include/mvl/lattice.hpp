#pragma once

#include <Eigen/Core>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mvl {

/// A truth value is the index of a carrier element. For chains, index i is
/// the grid point i/(n-1), so arithmetic stays exact.
using Value = int;
using Index = Eigen::Index;

/// Square operation table indexed by carrier elements.
using OpTable = Eigen::Array<Value, Eigen::Dynamic, Eigen::Dynamic>;

/// Finite commutative residuated lattice of truth values.
///
/// Immutable after construction. Operations validate their arguments and
/// throw DomainError for values outside the carrier.
class TruthLattice {
 public:
  enum class Kind { Lukasiewicz, Godel, Table };

  struct Tables {
    std::vector<std::string> labels;
    OpTable meet, join, otimes, imp;
  };

  /// Lukasiewicz chain with n equally spaced values; otimes(i,j)=max(0,i+j-(n-1)).
  static TruthLattice lukasiewicz(int n);
  /// Goedel chain: otimes = min, imp(a,b) = 1 if a<=b else b.
  static TruthLattice godel(int n);
  /// Arbitrary finite lattice given by explicit tables. Only shapes and entry
  /// ranges are validated; use check_residuated() for the algebraic laws.
  static TruthLattice from_tables(Tables tables);

  Kind kind() const noexcept { return kind_; }
  bool is_lukasiewicz() const noexcept { return kind_ == Kind::Lukasiewicz; }
  bool is_chain() const noexcept { return kind_ != Kind::Table; }
  int size() const noexcept { return static_cast<int>(tables_.labels.size()); }
  Value bottom() const noexcept { return bottom_; }
  Value top() const noexcept { return top_; }
  /// Grid denominator n-1 for chains; 0 for table lattices.
  int denominator() const noexcept { return is_chain() ? size() - 1 : 0; }

  Value meet(Value a, Value b) const { return tables_.meet(check(a), check(b)); }
  Value join(Value a, Value b) const { return tables_.join(check(a), check(b)); }
  Value otimes(Value a, Value b) const { return tables_.otimes(check(a), check(b)); }
  Value imp(Value a, Value b) const { return tables_.imp(check(a), check(b)); }
  bool leq(Value a, Value b) const { return meet(a, b) == a; }
  bool contains(Value a) const noexcept { return a >= 0 && a < size(); }

  const Tables& tables() const noexcept { return tables_; }

  /// Decimal rendering on the grid ("0.7" on the 11-chain), fraction when the
  /// grid is not decimal ("1/3"), label for table lattices.
  std::string format(Value v) const;
  /// Inverse of format(); also accepts any decimal that lies on the grid.
  Value parse(std::string_view text) const;
  /// Maps a real number to its grid value; throws DomainError when off-grid.
  Value from_double(double x) const;
  /// Exact rational value num/den of a chain element.
  double to_double(Value v) const;

  std::string describe() const;

 private:
  TruthLattice(Kind kind, Tables tables);
  Value check(Value a) const;

  Kind kind_;
  Tables tables_;
  Value bottom_ = 0;
  Value top_ = 0;
};

using LatticePtr = std::shared_ptr<const TruthLattice>;

/// Convenience for the common shared-ownership construction.
inline LatticePtr share(TruthLattice lattice) {
  return std::make_shared<const TruthLattice>(std::move(lattice));
}

/// Same as TruthLattice::lukasiewicz; throws InvalidLattice for n < 2.
TruthLattice luk_chain(int n);

/// One violated law instance. Unused operands are -1.
struct LawViolation {
  std::string law;
  Value a = -1, b = -1, c = -1;
};

/// Exhaustive check of the bounded-lattice, commutative-monoid, residuation
/// and (dual) frame-distributivity laws. Empty iff all hold.
std::vector<LawViolation> check_residuated(const TruthLattice& lattice);

/// All carrier values in index order.
std::vector<Value> carrier(const TruthLattice& lattice);

}  // namespace mvl
