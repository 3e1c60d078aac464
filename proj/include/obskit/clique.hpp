#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "obskit/atom.hpp"
#include "obskit/graph.hpp"

namespace obskit {

/// A finite family of cliques kept as an antichain of inclusion-minimal
/// members, sorted. It stands for the observation generated by its members:
/// every clique that contains one of them.
class CliqueFamily {
 public:
  using const_iterator = std::vector<Clique>::const_iterator;

  CliqueFamily() = default;

  /// Builds the minimal-generator antichain of `members`.
  static CliqueFamily minimalOf(std::vector<Clique> members);

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  const std::vector<Clique>& members() const { return members_; }

  friend bool operator==(const CliqueFamily&, const CliqueFamily&) = default;

 private:
  std::vector<Clique> members_;
};

/// Pairwise coherence of `s` in `g`. Throws ForeignAtom.
bool isClique(const CoherenceGraph& g, const AtomSet& s);

/// `alpha` refines `beta`, i.e. beta is a subset of alpha.
bool moreSpecific(const Clique& alpha, const Clique& beta);

/// Some member of `alpha` incoherent with `a`, if any. When none exists,
/// `alpha` extended by `a` is a clique.
std::optional<Atom> findIncompatibility(const CoherenceGraph& g, const Clique& alpha,
                                        const Atom& a);

/// Drops every member that strictly contains another (and duplicates).
CliqueFamily minimalGenerators(std::vector<Clique> family);

/// Every member of X contains some member of Y (X generates a smaller
/// observation than Y).
bool generatorLeq(const CliqueFamily& x, const CliqueFamily& y);

/// Renders as `{{a}, {b, c}}`.
std::string toString(const CliqueFamily& f);
std::ostream& operator<<(std::ostream& os, const CliqueFamily& f);

}  // namespace obskit
