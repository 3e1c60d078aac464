#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "obskit/budget.hpp"
#include "obskit/clique.hpp"
#include "obskit/graph.hpp"
#include "obskit/term.hpp"

namespace obskit {

/// The syntactic disjunctive skeleton of a lattice term: a finite set of
/// finite atom sets, sorted and duplicate-free. Members need not be cliques.
class Bracket {
 public:
  using const_iterator = std::vector<AtomSet>::const_iterator;

  Bracket() = default;
  explicit Bracket(std::vector<AtomSet> members);

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  const std::vector<AtomSet>& members() const { return members_; }

  friend bool operator==(const Bracket&, const Bracket&) = default;

 private:
  std::vector<AtomSet> members_;
};

std::string toString(const Bracket& b);
std::ostream& operator<<(std::ostream& os, const Bracket& b);

/// Structural interpretation: atoms give {{a}}, top {{}}, bot {}, join is
/// union and meet is pairwise union. Throws ResourceLimit past
/// `budget.maxBracket` members.
Bracket bracket(const LatTerm& s, const Budget& budget = {});

/// X ◁ Y: every member of X contains some member of Y.
bool triangleLeq(const std::vector<AtomSet>& x, const std::vector<AtomSet>& y);
inline bool triangleLeq(const Bracket& x, const Bracket& y) {
  return triangleLeq(x.members(), y.members());
}

/// Keeps the members of `x` that are cliques of `g`, then reduces them to
/// minimal generators. Throws ForeignAtom.
CliqueFamily filterCliques(const CoherenceGraph& g, const Bracket& x);

/// Equal to `filterCliques(g, bracket(s))`, computed bottom-up with
/// filtering and minimisation at every node so intermediate families stay
/// small.
CliqueFamily cliqueBracket(const CoherenceGraph& g, const LatTerm& s, const Budget& budget = {});

/// Decides `[[s]] ⊆ [[t]]`, equivalently derivability of s ≤ t from the
/// distributive-lattice axioms plus `a ∧ b = ⊥` for incoherent a, b.
bool latLeq(const CoherenceGraph& g, const LatTerm& s, const LatTerm& t, const Budget& budget = {});
bool latEquiv(const CoherenceGraph& g, const LatTerm& s, const LatTerm& t, const Budget& budget = {});

/// Disjunctive normal form over cliques: the join of the meets of the
/// minimal clique members of the bracket.
LatTerm dnf(const CoherenceGraph& g, const LatTerm& s, const Budget& budget = {});

}  // namespace obskit
