#include "obskit/term.hpp"

#include <algorithm>
#include <stdexcept>

#include "obskit/error.hpp"

namespace obskit {

struct Term::Node {
  TermKind kind;
  Atom atom;
  Term left;
  Term right;
  std::size_t size = 1;
  std::size_t depth = 0;
  bool lattice = true;
};

namespace {

using NodePtr = std::shared_ptr<const Term::Node>;


NodePtr makeConstant(TermKind kind) {
  auto n = std::make_shared<Term::Node>();
  n->kind = kind;
  return n;
}

std::strong_ordering compareNodes(const Term::Node& l, const Term::Node& r) {
  if (&l == &r) return std::strong_ordering::equal;
  if (l.kind != r.kind) return l.kind <=> r.kind;
  switch (l.kind) {
    case TermKind::Atom: return l.atom <=> r.atom;
    case TermKind::Top:
    case TermKind::Bot: return std::strong_ordering::equal;
    default: break;
  }
  if (auto c = l.left <=> r.left; c != 0) return c;
  return l.right <=> r.right;
}

}  // namespace

Term Term::atom(Atom a) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Atom;
  n->atom = std::move(a);
  return Term(std::move(n));
}

Term Term::top() {
  static const NodePtr node = makeConstant(TermKind::Top);
  return Term(node);
}

Term Term::bot() {
  static const NodePtr node = makeConstant(TermKind::Bot);
  return Term(node);
}

Term Term::binary(TermKind kind, Term l, Term r) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->size = 1 + l.size() + r.size();
  n->depth = 1 + std::max(l.depth(), r.depth());
  n->lattice = kind != TermKind::Impl && l.isLattice() && r.isLattice();
  n->left = std::move(l);
  n->right = std::move(r);
  return Term(std::move(n));
}

Term Term::conj(Term l, Term r) { return binary(TermKind::And, std::move(l), std::move(r)); }
Term Term::disj(Term l, Term r) { return binary(TermKind::Or, std::move(l), std::move(r)); }
Term Term::impl(Term l, Term r) { return binary(TermKind::Impl, std::move(l), std::move(r)); }

TermKind Term::kind() const { return node_->kind; }

const Atom& Term::atomValue() const {
  if (node_->kind != TermKind::Atom) throw std::logic_error("not an atom term");
  return node_->atom;
}

const Term& Term::left() const {
  if (!isBinary()) throw std::logic_error("not a binary term");
  return node_->left;
}

const Term& Term::right() const {
  if (!isBinary()) throw std::logic_error("not a binary term");
  return node_->right;
}

bool Term::isBinary() const {
  return node_->kind == TermKind::And || node_->kind == TermKind::Or ||
         node_->kind == TermKind::Impl;
}

bool Term::isLattice() const { return node_->lattice; }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::depth() const { return node_->depth; }

AtomSet Term::atoms() const {
  std::vector<Atom> out;
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (n->kind == TermKind::Atom) out.push_back(n->atom);
    if (n->left.node_) stack.push_back(n->left.node_.get());
    if (n->right.node_) stack.push_back(n->right.node_.get());
  }
  return AtomSet(std::move(out));
}

bool operator==(const Term& l, const Term& r) {
  return compareNodes(*l.node_, *r.node_) == 0;
}

std::strong_ordering operator<=>(const Term& l, const Term& r) {
  return compareNodes(*l.node_, *r.node_);
}

LatTerm::LatTerm(Term t) : term_(std::move(t)) {
  if (!term_.isLattice()) throw std::invalid_argument("lattice term contains an implication");
}

std::optional<LatTerm> LatTerm::from(const Term& t) {
  if (!t.isLattice()) return std::nullopt;
  return LatTerm(t);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = parseImpl();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skipSpace() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  bool accept(std::string_view token) {
    skipSpace();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  static bool identChar(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  }

  std::string ident() {
    skipSpace();
    std::size_t start = pos_;
    while (pos_ < text_.size() && identChar(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected an atom, `top`, `bot` or `(`");
    return std::string(text_.substr(start, pos_ - start));
  }

  Term parseImpl() {
    Term l = parseOr();
    if (accept("->")) return Term::impl(std::move(l), parseImpl());
    return l;
  }

  Term parseOr() {
    Term t = parseAnd();
    while (accept("|")) t = Term::disj(std::move(t), parseAnd());
    return t;
  }

  Term parseAnd() {
    Term t = parseAtom();
    while (accept("&")) t = Term::conj(std::move(t), parseAtom());
    return t;
  }

  Term parseAtom() {
    if (accept("(")) {
      Term t = parseImpl();
      if (!accept(")")) fail("expected `)`");
      return t;
    }
    std::string name = ident();
    if (name == "top") return Term::top();
    if (name == "bot") return Term::bot();
    if (accept("@")) {
      std::string index = ident();
      if (index == "top" || index == "bot") fail("reserved word used as component index");
      return Term::atom(Atom(std::move(name), std::move(index)));
    }
    return Term::atom(Atom(std::move(name)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(TermKind k) {
  switch (k) {
    case TermKind::Impl: return 1;
    case TermKind::Or: return 2;
    case TermKind::And: return 3;
    default: return 4;
  }
}

void print(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Atom: out += t.atomValue().str(); return;
    case TermKind::Top: out += "top"; return;
    case TermKind::Bot: out += "bot"; return;
    default: break;
  }
  const int p = precedence(t.kind());
  const bool rightAssoc = t.kind() == TermKind::Impl;
  // Same-precedence children need parentheses on the side opposite to the
  // operator's associativity.
  auto child = [&](const Term& c, bool isLeft) {
    const int cp = precedence(c.kind());
    const bool parens = cp < p || (cp == p && (isLeft == rightAssoc));
    if (parens) out += "(";
    print(c, out);
    if (parens) out += ")";
  };
  child(t.left(), true);
  switch (t.kind()) {
    case TermKind::And: out += " & "; break;
    case TermKind::Or: out += " | "; break;
    default: out += " -> "; break;
  }
  child(t.right(), false);
}

Term fold(std::vector<Term> terms, Term unit, Term (*op)(Term, Term)) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  if (terms.empty()) return unit;
  Term acc = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) acc = op(std::move(acc), terms[i]);
  return acc;
}

std::vector<Term> unwrap(std::vector<LatTerm> terms) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) out.push_back(t.term());
  return out;
}

}  // namespace

Term parseTerm(std::string_view text) { return Parser(text).parse(); }

std::string printTerm(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << printTerm(t); }
std::ostream& operator<<(std::ostream& os, const LatTerm& t) { return os << printTerm(t.term()); }

Term bigOr(std::vector<Term> terms) { return fold(std::move(terms), Term::bot(), &Term::disj); }
Term bigAnd(std::vector<Term> terms) { return fold(std::move(terms), Term::top(), &Term::conj); }
LatTerm bigOr(std::vector<LatTerm> terms) { return LatTerm(bigOr(unwrap(std::move(terms)))); }
LatTerm bigAnd(std::vector<LatTerm> terms) { return LatTerm(bigAnd(unwrap(std::move(terms)))); }

namespace {

std::vector<Term> atomTerms(const AtomSet& s) {
  std::vector<Term> out;
  for (const Atom& a : s) out.push_back(Term::atom(a));
  return out;
}

}  // namespace

LatTerm joinOfMeets(const std::vector<AtomSet>& family) {
  std::vector<Term> disjuncts;
  for (const AtomSet& x : family) disjuncts.push_back(bigAnd(atomTerms(x)));
  return LatTerm(bigOr(std::move(disjuncts)));
}

LatTerm meetOfJoins(const std::vector<AtomSet>& family) {
  std::vector<Term> conjuncts;
  for (const AtomSet& x : family) conjuncts.push_back(bigOr(atomTerms(x)));
  return LatTerm(bigAnd(std::move(conjuncts)));
}

}  // namespace obskit
