#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "obskit/atom.hpp"
#include "obskit/graph.hpp"
#include "obskit/term.hpp"

namespace obskit {

/// Normal form of an observation over an infinite anticlique, whose cliques
/// are the empty set and the singletons:
///   Top        every clique
///   Fin(A)     the singletons {a} with a in A
///   CoFin(A)   the singletons {a} with a not in A
/// Fin({}) is bottom; CoFin({}) is every nonempty clique.
class AnticliqueRepr {
 public:
  enum class Kind { Top, Fin, CoFin };

  static AnticliqueRepr top() { return AnticliqueRepr(Kind::Top, {}); }
  static AnticliqueRepr fin(AtomSet atoms) { return AnticliqueRepr(Kind::Fin, std::move(atoms)); }
  static AnticliqueRepr cofin(AtomSet atoms) { return AnticliqueRepr(Kind::CoFin, std::move(atoms)); }

  Kind kind() const { return kind_; }
  /// Empty for Top.
  const AtomSet& atoms() const { return atoms_; }

  friend bool operator==(const AnticliqueRepr&, const AnticliqueRepr&) = default;
  friend auto operator<=>(const AnticliqueRepr&, const AnticliqueRepr&) = default;

 private:
  AnticliqueRepr(Kind kind, AtomSet atoms) : kind_(kind), atoms_(std::move(atoms)) {}
  Kind kind_;
  AtomSet atoms_;
};

/// `TOP`, `FIN{n1,n2}`, `COFIN{n1}`.
std::string toString(const AnticliqueRepr& r);
std::ostream& operator<<(std::ostream& os, const AnticliqueRepr& r);

/// Join, meet and implication on representatives.
AnticliqueRepr oplus(const AnticliqueRepr& r, const AnticliqueRepr& q);
AnticliqueRepr otimes(const AnticliqueRepr& r, const AnticliqueRepr& q);
AnticliqueRepr ominus(const AnticliqueRepr& r, const AnticliqueRepr& q);

/// Representative of a term over the anticlique `omega`. Throws ForeignAtom
/// for atoms outside its universe and Unsupported if `omega` is not an
/// anticlique.
AnticliqueRepr tauAC(const CoherenceGraph& omega, const ObsTerm& s);

/// A term with the meaning of `r`. CoFin({}) becomes `a | (a -> bot)` with
/// `a = hint`, or the universe's index-0 atom without a hint.
ObsTerm phiAC(const CoherenceGraph& omega, const AnticliqueRepr& r,
              const std::optional<Atom>& hint = std::nullopt);

/// Containment of the meanings of two representatives.
bool reprLeq(const AnticliqueRepr& r, const AnticliqueRepr& q);

/// Decides `[[s]] ⊆ [[t]]` over the anticlique.
bool acLeq(const CoherenceGraph& omega, const ObsTerm& s, const ObsTerm& t);
bool acEquiv(const CoherenceGraph& omega, const ObsTerm& s, const ObsTerm& t);

}  // namespace obskit
