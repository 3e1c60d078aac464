#pragma once

#include <obskit/graph.hpp>
#include <obskit/term.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testkit {

using obskit::Atom;
using obskit::AtomSet;
using obskit::CoherenceGraph;
using obskit::Term;
using Rng = std::mt19937_64;

// Semantics evaluated straight from the definitions over bitmask cliques.
// Shares no code with the library oracle.
class RefModel {
 public:
  explicit RefModel(const CoherenceGraph& g) {
    atoms_ = *g.atoms();
    const std::size_t n = atoms_.size();
    adj_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (g.coherent(atoms_[i], atoms_[j])) adj_[i] |= 1u << j;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
      if (isClique(m)) cliques_.push_back(m);
  }

  bool isClique(std::uint32_t m) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if ((m >> i & 1) && (m & ~adj_[i])) return false;
    return true;
  }

  const std::vector<std::uint32_t>& cliques() const { return cliques_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  std::uint32_t maskOf(const AtomSet& s) const {
    std::uint32_t m = 0;
    for (const Atom& a : s)
      for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (atoms_[i] == a) m |= 1u << i;
    return m;
  }

  std::set<std::uint32_t> eval(const Term& s) const {
    using obskit::TermKind;
    std::set<std::uint32_t> out;
    switch (s.kind()) {
      case TermKind::Atom: {
        const std::uint32_t bit = maskOf(AtomSet{s.atomValue()});
        for (std::uint32_t c : cliques_)
          if (c & bit) out.insert(c);
        return out;
      }
      case TermKind::Top: return {cliques_.begin(), cliques_.end()};
      case TermKind::Bot: return out;
      case TermKind::And: {
        const auto l = eval(s.left()), r = eval(s.right());
        for (std::uint32_t c : l)
          if (r.count(c)) out.insert(c);
        return out;
      }
      case TermKind::Or: {
        out = eval(s.left());
        const auto r = eval(s.right());
        out.insert(r.begin(), r.end());
        return out;
      }
      case TermKind::Impl: {
        const auto l = eval(s.left()), r = eval(s.right());
        for (std::uint32_t alpha : cliques_) {
          bool ok = true;
          for (std::uint32_t beta : l)
            if (isClique(alpha | beta) && !r.count(alpha | beta)) {
              ok = false;
              break;
            }
          if (ok) out.insert(alpha);
        }
        return out;
      }
    }
    return out;
  }

  bool leq(const Term& s, const Term& t) const {
    const auto x = eval(s), y = eval(t);
    for (std::uint32_t c : x)
      if (!y.count(c)) return false;
    return true;
  }

 private:
  std::vector<Atom> atoms_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::uint32_t> cliques_;
};

inline std::vector<std::string> atomNames(std::size_t n) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  return {names, names + n};
}

inline std::vector<std::pair<std::size_t, std::size_t>> pairsOf(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

// Bit k of `edges` makes the k-th pair of pairsOf(n) coherent.
inline CoherenceGraph finiteGraph(std::size_t n, std::uint64_t edges) {
  const auto names = atomNames(n);
  std::vector<CoherenceGraph::Pair> coh;
  const auto pairs = pairsOf(n);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (edges >> k & 1) coh.emplace_back(names[pairs[k].first], names[pairs[k].second]);
  return CoherenceGraph::finite(names, coh);
}

inline CoherenceGraph randomGraph(Rng& rng, std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  const std::uint64_t edges = pairs == 0 ? 0 : rng() & ((std::uint64_t{1} << pairs) - 1);
  return finiteGraph(n, edges);
}

inline std::vector<Term> leavesOver(const std::vector<Atom>& atoms) {
  std::vector<Term> out{Term::top(), Term::bot()};
  for (const Atom& a : atoms) out.push_back(Term::atom(a));
  return out;
}

inline std::vector<Term> leavesOver(const std::vector<std::string>& names) {
  std::vector<Atom> atoms;
  for (const auto& n : names) atoms.emplace_back(n);
  return leavesOver(atoms);
}

// `size` counts nodes; leaves are drawn uniformly from `leaves`.
inline Term randomTerm(Rng& rng, const std::vector<Term>& leaves, std::size_t size,
                       bool implications = true) {
  if (size <= 1) return leaves[rng() % leaves.size()];
  const std::size_t leftSize = 1 + rng() % (size - 1);
  const std::size_t rightSize = std::max<std::size_t>(1, size - 1 - leftSize);
  Term l = randomTerm(rng, leaves, leftSize, implications);
  Term r = randomTerm(rng, leaves, rightSize, implications);
  switch (rng() % (implications ? 3 : 2)) {
    case 0: return Term::conj(l, r);
    case 1: return Term::disj(l, r);
    default: return Term::impl(l, r);
  }
}

inline Term randomTermUpTo(Rng& rng, const std::vector<Term>& leaves, std::size_t maxSize,
                           bool implications = true) {
  return randomTerm(rng, leaves, 1 + rng() % maxSize, implications);
}

// Every term of depth at most `depth` (leaves have depth 0).
inline std::vector<Term> termsUpToDepth(const std::vector<Term>& leaves, std::size_t depth,
                                        bool implications = true) {
  std::vector<Term> level = leaves;
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Term> next = leaves;
    for (const Term& l : level)
      for (const Term& r : level) {
        next.push_back(Term::conj(l, r));
        next.push_back(Term::disj(l, r));
        if (implications) next.push_back(Term::impl(l, r));
      }
    level = std::move(next);
  }
  return level;
}

inline Term meetOf(const AtomSet& alpha) {
  std::vector<Term> ts;
  for (const Atom& a : alpha) ts.push_back(Term::atom(a));
  return obskit::bigAnd(std::move(ts));
}

inline Term neg(const Term& s) { return Term::impl(s, Term::bot()); }

// A random clique of `g` built greedily from a shuffled atom order.
inline AtomSet randomClique(Rng& rng, const CoherenceGraph& g) {
  std::vector<Atom> atoms = *g.atoms();
  std::shuffle(atoms.begin(), atoms.end(), rng);
  std::vector<Atom> chosen;
  for (const Atom& a : atoms) {
    if (rng() % 2) continue;
    bool ok = true;
    for (const Atom& b : chosen) ok = ok && g.coherent(a, b);
    if (ok) chosen.push_back(a);
  }
  return AtomSet(chosen);
}

}  // namespace testkit
