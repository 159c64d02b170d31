#include "mvl/formula.hpp"

#include "mvl/errors.hpp"

#include <algorithm>
#include <cctype>

namespace mvl {

const char* to_string(Sort s) { return s == Sort::SD ? "SD" : "PP"; }

FormulaPtr Formula::top(Sort s) { return FormulaPtr(new Formula(Connective::Top, s, "", nullptr, nullptr)); }
FormulaPtr Formula::bot(Sort s) { return FormulaPtr(new Formula(Connective::Bot, s, "", nullptr, nullptr)); }

FormulaPtr Formula::atom(std::string name, Sort s) {
  if (name.empty()) throw TypeError(0, "empty atom name");
  return FormulaPtr(new Formula(Connective::Atom, s, std::move(name), nullptr, nullptr));
}

FormulaPtr Formula::conj(FormulaPtr l, FormulaPtr r) {
  if (l->sort() != r->sort()) throw TypeError(0, "conjunction of formulas of different sorts");
  const Sort s = l->sort();
  return FormulaPtr(new Formula(Connective::And, s, "", std::move(l), std::move(r)));
}

FormulaPtr Formula::disj(FormulaPtr l, FormulaPtr r) {
  if (l->sort() != r->sort()) throw TypeError(0, "disjunction of formulas of different sorts");
  const Sort s = l->sort();
  return FormulaPtr(new Formula(Connective::Or, s, "", std::move(l), std::move(r)));
}

FormulaPtr Formula::dmd(FormulaPtr inner) {
  if (inner->sort() != Sort::PP) throw TypeError(0, "dmd takes a PP formula");
  return FormulaPtr(new Formula(Connective::Dmd, Sort::SD, "", std::move(inner), nullptr));
}

FormulaPtr Formula::loz(FormulaPtr inner) {
  if (inner->sort() != Sort::SD) throw TypeError(0, "loz takes an SD formula");
  return FormulaPtr(new Formula(Connective::Loz, Sort::PP, "", std::move(inner), nullptr));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.op_ != b.op_ || a.sort_ != b.sort_ || a.name_ != b.name_) return false;
  auto eq = [](const FormulaPtr& x, const FormulaPtr& y) { return (!x && !y) || (x && y && *x == *y); };
  return eq(a.left_, b.left_) && eq(a.right_, b.right_);
}

Sequent make_sequent(FormulaPtr lhs, FormulaPtr rhs) {
  if (lhs->sort() != rhs->sort()) throw TypeError(0, "sequent is not type-uniform");
  return Sequent{std::move(lhs), std::move(rhs)};
}

namespace {

enum class Tok { Ident, Top, Bot, Dmd, Loz, LParen, RParen, And, Or, Turnstile, Colon, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string word(s.substr(start, i - start));
      Tok k = Tok::Ident;
      if (word == "T") k = Tok::Top;
      else if (word == "F") k = Tok::Bot;
      else if (word == "dmd") k = Tok::Dmd;
      else if (word == "loz") k = Tok::Loz;
      out.push_back({k, std::move(word), start});
      continue;
    }
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", start}); ++i; break;
      case ')': out.push_back({Tok::RParen, ")", start}); ++i; break;
      case '&': out.push_back({Tok::And, "&", start}); ++i; break;
      case ':': out.push_back({Tok::Colon, ":", start}); ++i; break;
      case '|':
        if (i + 1 < s.size() && s[i + 1] == '-') {
          out.push_back({Tok::Turnstile, "|-", start});
          i += 2;
        } else {
          out.push_back({Tok::Or, "|", start});
          ++i;
        }
        break;
      default: throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

const char* describe(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::Top: return "'T'";
    case Tok::Bot: return "'F'";
    case Tok::Dmd: return "'dmd'";
    case Tok::Loz: return "'loz'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Turnstile: return "'|-'";
    case Tok::Colon: return "':'";
    case Tok::End: return "end of input";
  }
  return "?";
}

// Recursive descent with the expected sort threaded top-down:
//   expr  := conj ('|' conj)*
//   conj  := unary ('&' unary)*
//   unary := 'dmd' unary | 'loz' unary | prim
//   prim  := 'T' | 'F' | ident | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Sort annotation() {
    const Token& t = peek();
    if (t.kind != Tok::Ident || (t.text != "SD" && t.text != "PP") || toks_[pos_ + 1].kind != Tok::Colon)
      throw TypeError(t.pos, "sort annotation required: start with 'SD:' or 'PP:'");
    const Sort s = t.text == "SD" ? Sort::SD : Sort::PP;
    pos_ += 2;
    return s;
  }

  FormulaPtr expr(Sort s) {
    FormulaPtr f = conj(s);
    while (peek().kind == Tok::Or) {
      ++pos_;
      f = Formula::disj(f, conj(s));
    }
    return f;
  }

  bool at(Tok k) const { return peek().kind == k; }

  void expect(Tok k) {
    if (peek().kind != k) throw ParseError(peek().pos, std::string("expected ") + describe(k) + ", found " + describe(peek().kind));
    ++pos_;
  }

  const Token& peek() const { return toks_[pos_]; }

 private:
  FormulaPtr conj(Sort s) {
    FormulaPtr f = unary(s);
    while (peek().kind == Tok::And) {
      ++pos_;
      f = Formula::conj(f, unary(s));
    }
    return f;
  }

  FormulaPtr unary(Sort s) {
    const Token& t = peek();
    if (t.kind == Tok::Dmd) {
      if (s != Sort::SD) throw TypeError(t.pos, "dmd yields an SD formula but a PP formula is expected here");
      ++pos_;
      return Formula::dmd(unary(Sort::PP));
    }
    if (t.kind == Tok::Loz) {
      if (s != Sort::PP) throw TypeError(t.pos, "loz yields a PP formula but an SD formula is expected here");
      ++pos_;
      return Formula::loz(unary(Sort::SD));
    }
    return prim(s);
  }

  FormulaPtr prim(Sort s) {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Top: ++pos_; return Formula::top(s);
      case Tok::Bot: ++pos_; return Formula::bot(s);
      case Tok::Ident: ++pos_; return Formula::atom(t.text, s);
      case Tok::LParen: {
        ++pos_;
        FormulaPtr f = expr(s);
        expect(Tok::RParen);
        return f;
      }
      default: throw ParseError(t.pos, std::string("expected a formula, found ") + describe(t.kind));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Formula& f) {
  switch (f.op()) {
    case Connective::Or: return 1;
    case Connective::And: return 2;
    case Connective::Dmd:
    case Connective::Loz: return 3;
    default: return 4;
  }
}

void render(const Formula& f, int min_prec, std::string& out) {
  const int p = precedence(f);
  const bool parens = p < min_prec;
  if (parens) out += '(';
  switch (f.op()) {
    case Connective::Top: out += 'T'; break;
    case Connective::Bot: out += 'F'; break;
    case Connective::Atom: out += f.name(); break;
    case Connective::And:
    case Connective::Or:
      render(*f.left(), p, out);
      out += f.op() == Connective::And ? " & " : " | ";
      render(*f.right(), p + 1, out);
      break;
    case Connective::Dmd:
    case Connective::Loz:
      out += f.op() == Connective::Dmd ? "dmd " : "loz ";
      render(*f.inner(), 3, out);
      break;
  }
  if (parens) out += ')';
}

void collect_atoms(const Formula& f, std::set<std::pair<std::string, Sort>>& out) {
  if (f.op() == Connective::Atom) out.emplace(f.name(), f.sort());
  if (f.left()) collect_atoms(*f.left(), out);
  if (f.right()) collect_atoms(*f.right(), out);
}

}  // namespace

FormulaPtr parse(std::string_view text) {
  Parser p(text);
  const Sort s = p.annotation();
  FormulaPtr f = p.expr(s);
  if (!p.at(Tok::End)) throw ParseError(p.peek().pos, std::string("unexpected ") + describe(p.peek().kind) + " after formula");
  return f;
}

Sequent parse_sequent(std::string_view text) {
  Parser p(text);
  const Sort s = p.annotation();
  FormulaPtr lhs = p.expr(s);
  p.expect(Tok::Turnstile);
  FormulaPtr rhs = p.expr(s);
  if (!p.at(Tok::End)) throw ParseError(p.peek().pos, std::string("unexpected ") + describe(p.peek().kind) + " after sequent");
  return make_sequent(std::move(lhs), std::move(rhs));
}

FormulaPtr parse_at(std::string_view body, Sort sort) {
  Parser p(body);
  FormulaPtr f = p.expr(sort);
  if (!p.at(Tok::End)) throw ParseError(p.peek().pos, std::string("unexpected ") + describe(p.peek().kind) + " after formula");
  return f;
}

std::string to_string(const Formula& f, bool annotate) {
  std::string out;
  if (annotate) out = std::string(to_string(f.sort())) + ": ";
  render(f, 0, out);
  return out;
}

std::string to_string(const Sequent& s) {
  return std::string(to_string(s.sort())) + ": " + to_string(*s.lhs, false) + " |- " + to_string(*s.rhs, false);
}

std::set<std::pair<std::string, Sort>> atoms_of(const Formula& f) {
  std::set<std::pair<std::string, Sort>> out;
  collect_atoms(f, out);
  return out;
}

std::set<std::pair<std::string, Sort>> atoms_of(const Sequent& s) {
  auto out = atoms_of(*s.lhs);
  collect_atoms(*s.rhs, out);
  return out;
}

std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  if (f.left()) d = std::max(d, depth(*f.left()));
  if (f.right()) d = std::max(d, depth(*f.right()));
  return d + 1;
}

FormulaPtr substitute(const FormulaPtr& f, const std::map<std::pair<std::string, Sort>, FormulaPtr>& subst) {
  switch (f->op()) {
    case Connective::Top:
    case Connective::Bot: return f;
    case Connective::Atom: {
      auto it = subst.find({f->name(), f->sort()});
      if (it == subst.end()) return f;
      if (it->second->sort() != f->sort())
        throw TypeError(0, "substituting a " + std::string(to_string(it->second->sort())) + " formula for " + f->name() + " at sort " +
                               to_string(f->sort()));
      return it->second;
    }
    case Connective::And: return Formula::conj(substitute(f->left(), subst), substitute(f->right(), subst));
    case Connective::Or: return Formula::disj(substitute(f->left(), subst), substitute(f->right(), subst));
    case Connective::Dmd: return Formula::dmd(substitute(f->inner(), subst));
    case Connective::Loz: return Formula::loz(substitute(f->inner(), subst));
  }
  return f;
}

Sequent substitute(const Sequent& s, const std::map<std::pair<std::string, Sort>, FormulaPtr>& subst) {
  return make_sequent(substitute(s.lhs, subst), substitute(s.rhs, subst));
}

std::vector<Sort> AxiomSchema::sorts() const {
  if (fixed_sort) return {*fixed_sort};
  return {Sort::SD, Sort::PP};
}

Sequent AxiomSchema::at(Sort s) const {
  if (fixed_sort && *fixed_sort != s) throw TypeError(0, "axiom " + name + " only exists at sort " + to_string(*fixed_sort));
  return parse_sequent(std::string(to_string(s)) + ": " + text);
}

std::vector<std::pair<std::string, Sort>> AxiomSchema::metavariables(Sort s) const {
  auto atoms = atoms_of(at(s));
  return {atoms.begin(), atoms.end()};
}

Sequent AxiomSchema::instantiate(Sort s, const std::map<std::string, FormulaPtr>& values) const {
  std::map<std::pair<std::string, Sort>, FormulaPtr> subst;
  for (const auto& mv : metavariables(s)) {
    auto it = values.find(mv.first);
    if (it == values.end()) throw TypeError(0, "no value for metavariable " + mv.first);
    subst.emplace(mv, it->second);
  }
  return substitute(at(s), subst);
}

const std::vector<AxiomSchema>& axioms_basic() {
  static const std::vector<AxiomSchema> axioms = {
      {"identity", "p |- p", std::nullopt},
      {"bottom", "F |- p", std::nullopt},
      {"top", "p |- T", std::nullopt},
      {"join-left", "p |- p | q", std::nullopt},
      {"join-right", "q |- p | q", std::nullopt},
      {"meet-left", "p & q |- p", std::nullopt},
      {"meet-right", "p & q |- q", std::nullopt},
      {"dmd-normal", "dmd F |- F", Sort::SD},
      {"dmd-join", "dmd (pi1 | pi2) |- dmd pi1 | dmd pi2", Sort::SD},
      {"loz-normal", "loz F |- F", Sort::PP},
      {"loz-join", "loz (sigma1 | sigma2) |- loz sigma1 | loz sigma2", Sort::PP},
  };
  return axioms;
}

const std::vector<RuleSchema>& rules_basic() {
  static const std::vector<RuleSchema> rules = {
      {"dmd-monotone", "pi1 |- pi2", "dmd pi1 |- dmd pi2", Sort::PP, Sort::SD},
      {"loz-monotone", "sigma1 |- sigma2", "loz sigma1 |- loz sigma2", Sort::SD, Sort::PP},
  };
  return rules;
}

std::vector<Sequent> instances_over_atoms(const AxiomSchema& schema, Sort s, const std::vector<std::string>& atoms) {
  const auto mvs = schema.metavariables(s);
  std::vector<Sequent> out;
  if (atoms.empty()) return mvs.empty() ? std::vector<Sequent>{schema.at(s)} : out;
  std::vector<std::size_t> choice(mvs.size(), 0);
  while (true) {
    std::map<std::pair<std::string, Sort>, FormulaPtr> subst;
    for (std::size_t i = 0; i < mvs.size(); ++i) subst.emplace(mvs[i], Formula::atom(atoms[choice[i]], mvs[i].second));
    out.push_back(substitute(schema.at(s), subst));
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == atoms.size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

}  // namespace mvl
