#include "obskit/fan_engine.hpp"

#include "obskit/error.hpp"
#include "obskit/lattice_engine.hpp"

namespace obskit {

namespace {

void requireFan(const CoherenceGraph& g) {
  if (!g.hasFan())
    throw Unsupported("implication elimination needs a graph with finite anti-neighbourhoods");
}

std::vector<Term> atomTerms(const std::vector<Atom>& atoms) {
  std::vector<Term> out;
  out.reserve(atoms.size());
  for (const Atom& a : atoms) out.push_back(Term::atom(a));
  return out;
}

}  // namespace

LatTerm negClique(const CoherenceGraph& g, const Clique& alpha) {
  requireFan(g);
  std::vector<Atom> witnesses;
  for (const Atom& a : alpha) {
    auto anti = g.antiNeighbourhood(a);
    witnesses.insert(witnesses.end(), anti.begin(), anti.end());
  }
  return LatTerm(bigOr(atomTerms(AtomSet(std::move(witnesses)).atoms())));
}

LatTerm eliminateImplication(const CoherenceGraph& g, const LatTerm& s, const LatTerm& t,
                             const Budget& budget) {
  requireFan(g);
  const CliqueFamily sources = cliqueBracket(g, s, budget);
  const CliqueFamily targets = cliqueBracket(g, t, budget);

  std::vector<Term> outer;
  for (const Clique& alpha : sources) {
    const Term neg = negClique(g, alpha).term();
    if (targets.empty()) {
      outer.push_back(neg);
      continue;
    }
    std::vector<Term> middle;
    for (const Clique& beta : targets) {
      // Atoms of beta already in alpha contribute top and are dropped.
      std::vector<Term> inner;
      for (const Atom& a : beta.minus(alpha)) inner.push_back(Term::disj(neg, Term::atom(a)));
      middle.push_back(bigAnd(std::move(inner)));
    }
    outer.push_back(bigOr(std::move(middle)));
  }
  return dnf(g, LatTerm(bigAnd(std::move(outer))), budget);
}

LatTerm tauFan(const CoherenceGraph& g, const ObsTerm& s, const Budget& budget) {
  requireFan(g);
  switch (s.kind()) {
    case TermKind::Atom:
      g.requireAtom(s.atomValue());
      return LatTerm(s);
    case TermKind::Top:
    case TermKind::Bot: return LatTerm(s);
    case TermKind::And:
      return LatTerm(Term::conj(tauFan(g, s.left(), budget).term(), tauFan(g, s.right(), budget).term()));
    case TermKind::Or:
      return LatTerm(Term::disj(tauFan(g, s.left(), budget).term(), tauFan(g, s.right(), budget).term()));
    case TermKind::Impl:
      return eliminateImplication(g, tauFan(g, s.left(), budget), tauFan(g, s.right(), budget), budget);
  }
  throw std::logic_error("unknown term kind");
}

bool fanLeq(const CoherenceGraph& g, const ObsTerm& s, const ObsTerm& t, const Budget& budget) {
  return latLeq(g, tauFan(g, s, budget), tauFan(g, t, budget), budget);
}

bool fanEquiv(const CoherenceGraph& g, const ObsTerm& s, const ObsTerm& t, const Budget& budget) {
  const LatTerm ls = tauFan(g, s, budget);
  const LatTerm lt = tauFan(g, t, budget);
  return latLeq(g, ls, lt, budget) && latLeq(g, lt, ls, budget);
}

}  // namespace obskit
