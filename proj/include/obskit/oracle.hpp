#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "obskit/graph.hpp"
#include "obskit/term.hpp"

namespace obskit {

/// An explicit set of cliques of one FiniteModel, stored as a bitset over
/// the model's clique indices.
class SemSet {
 public:
  SemSet() = default;
  explicit SemSet(std::size_t universe) : bits_(universe, false) {}

  std::size_t universe() const { return bits_.size(); }
  bool contains(std::size_t clique) const { return bits_[clique]; }
  void insert(std::size_t clique) { bits_[clique] = true; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool subsetOf(const SemSet& other) const;

  friend bool operator==(const SemSet&, const SemSet&) = default;
  friend auto operator<=>(const SemSet& l, const SemSet& r) { return l.bits_ <=> r.bits_; }

 private:
  std::vector<bool> bits_;
};

/// Brute-force semantics of a finite coherence graph: every clique is
/// enumerated and observations are explicit clique sets. This is the
/// reference the engines are checked against; it shares no code with them.
class FiniteModel {
 public:
  static constexpr std::size_t kDefaultMaxAtoms = 16;

  /// Throws Unsupported for infinite graphs and ResourceLimit when the graph
  /// has more than `maxAtoms` atoms.
  explicit FiniteModel(const CoherenceGraph& g, std::size_t maxAtoms = kDefaultMaxAtoms);

  const CoherenceGraph& graph() const { return graph_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  /// All cliques, in canonical (sorted) order; index 0 is the empty clique.
  const std::vector<Clique>& cliques() const { return cliques_; }
  std::optional<std::size_t> indexOf(const Clique& c) const;

  SemSet none() const { return SemSet(cliques_.size()); }
  SemSet all() const;
  SemSet fromCliques(const std::vector<Clique>& cliques) const;
  std::vector<Clique> members(const SemSet& x) const;

  /// Cliques containing some member of `generators`.
  SemSet downClose(const SemSet& generators) const;
  SemSet downClose(const std::vector<Clique>& generators) const;
  bool isDownClosed(const SemSet& x) const;

  SemSet meet(const SemSet& x, const SemSet& y) const;
  SemSet join(const SemSet& x, const SemSet& y) const;
  /// alpha belongs iff for every beta in x, if alpha ∪ beta is a clique then
  /// it belongs to y.
  SemSet implies(const SemSet& x, const SemSet& y) const;
  /// The finitary implication, computed as the residual: alpha belongs iff
  /// every finite clique refining alpha that lies in x also lies in y.
  SemSet impliesFinitary(const SemSet& x, const SemSet& y) const;

  /// Direct structural evaluation. Throws ForeignAtom.
  SemSet eval(const Term& s) const;
  bool leq(const Term& s, const Term& t) const { return eval(s).subsetOf(eval(t)); }

  /// `{{}, {a}, {a,b}}` in canonical clique order.
  std::string print(const SemSet& x) const;

 private:
  CoherenceGraph graph_;
  std::vector<Atom> atoms_;
  std::vector<Clique> cliques_;
  std::vector<std::uint32_t> masks_;   // clique index -> atom mask
  std::vector<std::int32_t> indexOfMask_;  // atom mask -> clique index or -1
  std::uint32_t maskOf(const Clique& c) const;
};

std::vector<Clique> enumCliques(const CoherenceGraph& g, std::size_t maxAtoms = FiniteModel::kDefaultMaxAtoms);
/// The cliques of `g` containing some member of `x`, sorted.
std::vector<Clique> downClose(const CoherenceGraph& g, const std::vector<Clique>& x);
/// `[[s]]` as a sorted clique list.
std::vector<Clique> evalTerm(const CoherenceGraph& g, const Term& s);
bool oracleLeq(const CoherenceGraph& g, const Term& s, const Term& t);

/// Containment over the infinite anticlique, decided on the finite identity
/// graph whose atoms are those of s and t, plus `pool`, plus two fresh atoms.
bool acOracleLeq(const Term& s, const Term& t, const AtomSet& pool = {});
/// The finite identity graph used by acOracleLeq.
CoherenceGraph anticliqueModelGraph(const AtomSet& atoms);

}  // namespace obskit
