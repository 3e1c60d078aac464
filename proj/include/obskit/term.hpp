#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "obskit/atom.hpp"

namespace obskit {

enum class TermKind { Atom, Top, Bot, And, Or, Impl };

/// Immutable observation term over atoms with meet, join, top, bottom and
/// implication. Subterms are shared; copies are cheap.
class Term {
 public:
  static Term atom(Atom a);
  static Term atom(std::string name) { return atom(Atom(std::move(name))); }
  static Term top();
  static Term bot();
  static Term conj(Term l, Term r);
  static Term disj(Term l, Term r);
  static Term impl(Term l, Term r);

  TermKind kind() const;
  /// Atom terms only.
  const Atom& atomValue() const;
  /// Binary terms only.
  const Term& left() const;
  const Term& right() const;

  bool isBinary() const;
  /// No implication anywhere in the term.
  bool isLattice() const;
  std::size_t size() const;
  std::size_t depth() const;
  /// Distinct atoms, sorted.
  AtomSet atoms() const;

  friend bool operator==(const Term& l, const Term& r);
  friend std::strong_ordering operator<=>(const Term& l, const Term& r);

  struct Node;

 private:
  Term() = default;
  static Term binary(TermKind kind, Term l, Term r);
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using ObsTerm = Term;

/// An implication-free term. Construction from a Term checks the invariant.
class LatTerm {
 public:
  /// Throws std::invalid_argument if `t` contains an implication.
  explicit LatTerm(Term t);
  static std::optional<LatTerm> from(const Term& t);

  const Term& term() const { return term_; }
  operator const Term&() const { return term_; }

  friend bool operator==(const LatTerm&, const LatTerm&) = default;
  friend std::strong_ordering operator<=>(const LatTerm& l, const LatTerm& r) {
    return l.term_ <=> r.term_;
  }

 private:
  Term term_;
};

/// Grammar (lowest precedence first):
///   term     := impl
///   impl     := or ("->" impl)?          right-associative
///   or       := and ("|" and)*           left-associative
///   and      := atomexpr ("&" atomexpr)* left-associative
///   atomexpr := "top" | "bot" | ident ("@" ident)? | "(" term ")"
/// Throws ParseError.
Term parseTerm(std::string_view text);

/// Minimal-parenthesis rendering; `parseTerm(printTerm(t)) == t`.
std::string printTerm(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const LatTerm& t);

/// Finite joins and meets: bigOr({}) = bot, bigAnd({}) = top; otherwise a
/// left fold over the sorted, duplicate-free elements.
Term bigOr(std::vector<Term> terms);
Term bigAnd(std::vector<Term> terms);
LatTerm bigOr(std::vector<LatTerm> terms);
LatTerm bigAnd(std::vector<LatTerm> terms);

/// `\/ { /\ x | x in family }` for a family of atom sets.
LatTerm joinOfMeets(const std::vector<AtomSet>& family);
/// `/\ { \/ x | x in family }`.
LatTerm meetOfJoins(const std::vector<AtomSet>& family);

}  // namespace obskit
