#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mvl {

/// SD = social demands, PP = political promises.
enum class Sort { SD, PP };

const char* to_string(Sort s);
inline Sort opposite(Sort s) { return s == Sort::SD ? Sort::PP : Sort::SD; }

enum class Connective { Top, Bot, Atom, And, Or, Dmd, Loz };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable two-sorted formula. Constructors enforce the sort discipline:
/// And/Or children share the parent's sort, dmd maps PP to SD and loz maps SD
/// to PP. Atom names are shared between sorts; the sort of an occurrence
/// selects which of the two interpretations it refers to.
///
/// Concrete syntax: `dmd` is the diamond (PP -> SD), `loz` the lozenge
/// (SD -> PP); T/F are top/bottom; & binds tighter than |.
class Formula {
 public:
  static FormulaPtr top(Sort s);
  static FormulaPtr bot(Sort s);
  static FormulaPtr atom(std::string name, Sort s);
  static FormulaPtr conj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr disj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr dmd(FormulaPtr inner);
  static FormulaPtr loz(FormulaPtr inner);

  Connective op() const { return op_; }
  Sort sort() const { return sort_; }
  const std::string& name() const { return name_; }
  const FormulaPtr& left() const { return left_; }
  const FormulaPtr& right() const { return right_; }
  /// Operand of dmd/loz.
  const FormulaPtr& inner() const { return left_; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  Formula(Connective op, Sort sort, std::string name, FormulaPtr l, FormulaPtr r)
      : op_(op), sort_(sort), name_(std::move(name)), left_(std::move(l)), right_(std::move(r)) {}

  Connective op_;
  Sort sort_;
  std::string name_;
  FormulaPtr left_;
  FormulaPtr right_;
};

/// Type-uniform sequent lhs |- rhs.
struct Sequent {
  FormulaPtr lhs;
  FormulaPtr rhs;

  Sort sort() const { return lhs->sort(); }
  friend bool operator==(const Sequent& a, const Sequent& b) { return *a.lhs == *b.lhs && *a.rhs == *b.rhs; }
};

Sequent make_sequent(FormulaPtr lhs, FormulaPtr rhs);

/// `("SD:"|"PP:") expr`. Throws ParseError (syntax) or TypeError (sorts).
FormulaPtr parse(std::string_view text);
/// `("SD:"|"PP:") expr "|-" expr`.
Sequent parse_sequent(std::string_view text);
/// Body without annotation, parsed at a given sort.
FormulaPtr parse_at(std::string_view body, Sort sort);

/// Minimal-parenthesis rendering; parse(to_string(f)) == f.
std::string to_string(const Formula& f, bool annotate = true);
std::string to_string(const Sequent& s);

/// Atom occurrences as (name, sort) pairs.
std::set<std::pair<std::string, Sort>> atoms_of(const Formula& f);
std::set<std::pair<std::string, Sort>> atoms_of(const Sequent& s);

std::size_t depth(const Formula& f);

/// Uniform substitution: each atom occurrence (name, sort) listed in `subst`
/// is replaced; the replacement's sort must equal the occurrence's sort.
FormulaPtr substitute(const FormulaPtr& f, const std::map<std::pair<std::string, Sort>, FormulaPtr>& subst);
Sequent substitute(const Sequent& s, const std::map<std::pair<std::string, Sort>, FormulaPtr>& subst);

/// Axiom of the basic logic with metavariables. Schemas without a fixed sort
/// are instantiable at both sorts.
struct AxiomSchema {
  std::string name;
  std::string text;  // body without annotation, e.g. "p & q |- p"
  std::optional<Sort> fixed_sort;

  std::vector<Sort> sorts() const;
  /// The schema itself at sort `s`, metavariables as atoms.
  Sequent at(Sort s) const;
  /// Metavariable occurrences (name, sort) of the schema at sort `s`.
  std::vector<std::pair<std::string, Sort>> metavariables(Sort s) const;
  /// Substitutes each metavariable; throws TypeError on sort mismatch.
  Sequent instantiate(Sort s, const std::map<std::string, FormulaPtr>& values) const;
};

/// Monotonicity rule shape: premise / conclusion.
struct RuleSchema {
  std::string name;
  std::string premise;
  std::string conclusion;
  Sort premise_sort;
  Sort conclusion_sort;
};

/// The eleven axioms of the basic logic (identity, bounds, four lattice
/// axioms, normality and join-distribution of dmd and loz).
const std::vector<AxiomSchema>& axioms_basic();
/// The two modal monotonicity rules.
const std::vector<RuleSchema>& rules_basic();

/// All instances of `schema` at `s` whose metavariables range over `atoms`.
std::vector<Sequent> instances_over_atoms(const AxiomSchema& schema, Sort s, const std::vector<std::string>& atoms);

}  // namespace mvl
