#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "obskit/atom.hpp"

namespace obskit {

enum class GraphKind { Finite, Anticlique, Product };

std::string_view toString(GraphKind kind);

/// A coherence graph: a set of atoms with a reflexive, symmetric coherence
/// relation. Three shapes are supported:
///
///   - Finite: explicit atom list and coherent pairs.
///   - Anticlique: the infinite identity-coherence graph over `prefix0`,
///     `prefix1`, ... Membership is decided by matching the prefix followed by
///     a natural number written without leading zeros.
///   - Product: finitely many base (finite or anticlique) components indexed
///     by identifiers. Atoms are `a@i`; atoms of distinct components are
///     always coherent, atoms of the same component follow that component.
///
/// Graphs are immutable and cheap to copy (shared representation).
class CoherenceGraph {
 public:
  using Pair = std::pair<std::string, std::string>;

  /// Throws GraphError on invalid identifiers, duplicates or unknown atoms
  /// in `coherent`. Reflexive pairs are accepted and ignored; symmetric
  /// closure is implicit.
  static CoherenceGraph finite(std::vector<std::string> atoms,
                               const std::vector<Pair>& coherent);
  static CoherenceGraph anticlique(std::string prefix);
  /// Components must be base graphs; nested products are rejected.
  static CoherenceGraph product(std::map<std::string, CoherenceGraph> components);

  GraphKind kind() const;
  /// Finite, or a product of FAN components.
  bool hasFan() const;
  /// True when the atom set is finite (finite graphs and products of them).
  bool isFinite() const;

  bool contains(const Atom& a) const;
  /// Throws ForeignAtom unless `contains(a)`.
  void requireAtom(const Atom& a) const;

  bool coherent(const Atom& a, const Atom& b) const;
  /// Atoms incoherent with `a`, sorted. Throws Unsupported for non-FAN graphs.
  std::vector<Atom> antiNeighbourhood(const Atom& a) const;

  /// All atoms, sorted; nullopt for infinite graphs.
  std::optional<std::vector<Atom>> atoms() const;

  /// Anticlique only.
  const std::string& prefix() const;
  Atom anticliqueAtom(std::size_t index) const;

  /// Product only.
  const std::map<std::string, CoherenceGraph>& components() const;
  const CoherenceGraph& component(const std::string& index) const;

  struct Impl;

 private:
  explicit CoherenceGraph(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Parses a graph-definition JSON document:
///   {"kind":"finite","atoms":[...],"coh":[[a,b],...]}
///   {"kind":"anticlique","prefix":"n"}
///   {"kind":"product","components":{"1":<base graph>,...}}
/// Throws GraphError on malformed input, including duplicate object keys.
CoherenceGraph loadGraph(std::string_view document);
CoherenceGraph loadGraphFile(const std::filesystem::path& path);

/// One-line summary: kind, atom count (or "unbounded") and FAN status.
std::string describe(const CoherenceGraph& g);

}  // namespace obskit
