#include "obskit/lattice_engine.hpp"

#include <algorithm>

#include "obskit/error.hpp"

namespace obskit {

namespace {

void checkBudget(std::size_t size, const Budget& budget) {
  if (size > budget.maxBracket)
    throw ResourceLimit("bracket exceeds the budget of " + std::to_string(budget.maxBracket) +
                        " members");
}

std::vector<AtomSet> sortedUnique(std::vector<AtomSet> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<AtomSet> rawBracket(const Term& s, const Budget& budget) {
  switch (s.kind()) {
    case TermKind::Atom: return {AtomSet::singleton(s.atomValue())};
    case TermKind::Top: return {AtomSet{}};
    case TermKind::Bot: return {};
    case TermKind::Or: {
      auto l = rawBracket(s.left(), budget);
      auto r = rawBracket(s.right(), budget);
      l.insert(l.end(), r.begin(), r.end());
      l = sortedUnique(std::move(l));
      checkBudget(l.size(), budget);
      return l;
    }
    case TermKind::And: {
      auto l = rawBracket(s.left(), budget);
      auto r = rawBracket(s.right(), budget);
      checkBudget(l.size() * r.size(), budget);
      std::vector<AtomSet> out;
      out.reserve(l.size() * r.size());
      for (const auto& x : l)
        for (const auto& y : r) out.push_back(x.unite(y));
      return sortedUnique(std::move(out));
    }
    case TermKind::Impl: break;
  }
  throw std::logic_error("implication inside a lattice term");
}

std::vector<Clique> filteredBracket(const CoherenceGraph& g, const Term& s, const Budget& budget) {
  switch (s.kind()) {
    case TermKind::Atom:
      g.requireAtom(s.atomValue());
      return {AtomSet::singleton(s.atomValue())};
    case TermKind::Top: return {Clique{}};
    case TermKind::Bot: return {};
    case TermKind::Or: {
      auto l = filteredBracket(g, s.left(), budget);
      auto r = filteredBracket(g, s.right(), budget);
      l.insert(l.end(), r.begin(), r.end());
      return CliqueFamily::minimalOf(std::move(l)).members();
    }
    case TermKind::And: {
      auto l = filteredBracket(g, s.left(), budget);
      auto r = filteredBracket(g, s.right(), budget);
      checkBudget(l.size() * r.size(), budget);
      std::vector<Clique> out;
      for (const auto& x : l)
        for (const auto& y : r) {
          // x and y are cliques already, so only cross pairs need checking.
          bool coherent = true;
          for (const Atom& a : x) {
            if (y.contains(a)) continue;
            for (const Atom& b : y)
              if (!x.contains(b) && !g.coherent(a, b)) {
                coherent = false;
                break;
              }
            if (!coherent) break;
          }
          if (coherent) out.push_back(x.unite(y));
        }
      return CliqueFamily::minimalOf(std::move(out)).members();
    }
    case TermKind::Impl: break;
  }
  throw std::logic_error("implication inside a lattice term");
}

}  // namespace

Bracket::Bracket(std::vector<AtomSet> members) : members_(sortedUnique(std::move(members))) {}

std::string toString(const Bracket& b) {
  std::string out = "{";
  bool first = true;
  for (const AtomSet& x : b) {
    if (!first) out += ", ";
    out += toString(x);
    first = false;
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const Bracket& b) { return os << toString(b); }

Bracket bracket(const LatTerm& s, const Budget& budget) {
  return Bracket(rawBracket(s.term(), budget));
}

bool triangleLeq(const std::vector<AtomSet>& x, const std::vector<AtomSet>& y) {
  return std::all_of(x.begin(), x.end(), [&](const AtomSet& a) {
    return std::any_of(y.begin(), y.end(), [&](const AtomSet& b) { return b.subsetOf(a); });
  });
}

CliqueFamily filterCliques(const CoherenceGraph& g, const Bracket& x) {
  std::vector<Clique> kept;
  for (const AtomSet& m : x)
    if (isClique(g, m)) kept.push_back(m);
  return CliqueFamily::minimalOf(std::move(kept));
}

CliqueFamily cliqueBracket(const CoherenceGraph& g, const LatTerm& s, const Budget& budget) {
  return CliqueFamily::minimalOf(filteredBracket(g, s.term(), budget));
}

bool latLeq(const CoherenceGraph& g, const LatTerm& s, const LatTerm& t, const Budget& budget) {
  const CliqueFamily left = cliqueBracket(g, s, budget);
  const Bracket right = bracket(t, budget);
  for (const AtomSet& m : right)
    for (const Atom& a : m) g.requireAtom(a);
  return triangleLeq(left.members(), right.members());
}

bool latEquiv(const CoherenceGraph& g, const LatTerm& s, const LatTerm& t, const Budget& budget) {
  return latLeq(g, s, t, budget) && latLeq(g, t, s, budget);
}

LatTerm dnf(const CoherenceGraph& g, const LatTerm& s, const Budget& budget) {
  return joinOfMeets(cliqueBracket(g, s, budget).members());
}

}  // namespace obskit
