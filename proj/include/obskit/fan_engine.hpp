#pragma once

#include "obskit/budget.hpp"
#include "obskit/clique.hpp"
#include "obskit/graph.hpp"
#include "obskit/term.hpp"

namespace obskit {

/// Implication elimination and containment for graphs with finite
/// anti-neighbourhoods. Every entry point throws Unsupported when
/// `!g.hasFan()`.

/// The join of all atoms incoherent with some member of `alpha`; it has the
/// same meaning as `/\alpha -> bot`.
LatTerm negClique(const CoherenceGraph& g, const Clique& alpha);

/// An implication-free term equivalent to `s -> t`, built from the clique
/// normal forms S of s and T of t:
///
///   T empty:  /\{ neg(a) | a in S }
///   else:     /\{ \/{ /\{ neg(a) | x | x in b \ a } | b in T } | a in S }
///
/// then brought to clique normal form. Throws ResourceLimit.
LatTerm eliminateImplication(const CoherenceGraph& g, const LatTerm& s, const LatTerm& t,
                             const Budget& budget = {});

/// Rewrites every implication bottom-up with eliminateImplication.
LatTerm tauFan(const CoherenceGraph& g, const ObsTerm& s, const Budget& budget = {});

/// Decides `[[s]] ⊆ [[t]]`.
bool fanLeq(const CoherenceGraph& g, const ObsTerm& s, const ObsTerm& t, const Budget& budget = {});
bool fanEquiv(const CoherenceGraph& g, const ObsTerm& s, const ObsTerm& t, const Budget& budget = {});

}  // namespace obskit
