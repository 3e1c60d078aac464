#pragma once

#include <compare>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "obskit/budget.hpp"
#include "obskit/graph.hpp"
#include "obskit/term.hpp"

namespace obskit {

/// A sound and complete containment decider for the terms of one product
/// component, together with a normaliser that preserves meaning.
class ComponentEngine {
 public:
  virtual ~ComponentEngine() = default;
  virtual std::string_view name() const = 0;
  virtual bool leq(const ObsTerm& s, const ObsTerm& t) const = 0;
  virtual ObsTerm normalize(const ObsTerm& s) const = 0;
};

/// Finite (FAN) components: implication elimination plus clique DNF.
class FanComponentEngine final : public ComponentEngine {
 public:
  explicit FanComponentEngine(CoherenceGraph g, Budget budget = {});
  std::string_view name() const override { return "fan"; }
  bool leq(const ObsTerm& s, const ObsTerm& t) const override;
  ObsTerm normalize(const ObsTerm& s) const override;

 private:
  CoherenceGraph graph_;
  Budget budget_;
};

/// Infinite anticlique components: Top/Fin/CoFin representatives.
class AnticliqueComponentEngine final : public ComponentEngine {
 public:
  explicit AnticliqueComponentEngine(CoherenceGraph g);
  std::string_view name() const override { return "anticlique"; }
  bool leq(const ObsTerm& s, const ObsTerm& t) const override;
  ObsTerm normalize(const ObsTerm& s) const override;

 private:
  CoherenceGraph graph_;
};

using EngineMap = std::map<std::string, std::shared_ptr<const ComponentEngine>>;

/// The complete engine for each component's kind.
EngineMap defaultEngines(const CoherenceGraph& product, const Budget& budget = {});

/// A finitely supported assignment of component terms, keyed by component
/// index. Coordinates use component-local atoms (no `@i`).
class TermVector {
 public:
  TermVector() = default;
  explicit TermVector(std::map<std::string, ObsTerm> coords) : coords_(std::move(coords)) {}
  static TermVector unit(std::string index, ObsTerm t);

  const std::map<std::string, ObsTerm>& coords() const { return coords_; }
  std::set<std::string> support() const;
  bool has(const std::string& index) const { return coords_.count(index) > 0; }
  const ObsTerm& at(const std::string& index) const { return coords_.at(index); }
  bool isZero() const { return coords_.empty(); }

  friend bool operator==(const TermVector&, const TermVector&) = default;
  friend std::strong_ordering operator<=>(const TermVector& l, const TermVector& r);

 private:
  std::map<std::string, ObsTerm> coords_;
};

/// A finite set of term vectors, read either disjunctively (join of
/// products) or conjunctively (meet of coproducts).
using Representative = std::set<TermVector>;

/// `[1: a & b; 2: top]`; the zero vector is `[]`.
std::string toString(const TermVector& v);
/// `{[1: a], [2: b]}`.
std::string toString(const Representative& r);
std::ostream& operator<<(std::ostream& os, const TermVector& v);

/// Renames every atom `a` of `s` to `a@index`. Throws ForeignAtom if an atom
/// is not in that component of `product`.
ObsTerm inject(const CoherenceGraph& product, const std::string& index, const ObsTerm& s);

/// Coordinatewise connectives on the union of the supports. Where only one
/// side is defined, join and meet pass it through; implication yields
/// `u_i -> bot` for a missing target and `v_i` for a missing source.
TermVector vecOr(const TermVector& u, const TermVector& v);
TermVector vecAnd(const TermVector& u, const TermVector& v);
TermVector vecImpl(const TermVector& u, const TermVector& v);

/// Meet (resp. join) of the injected coordinates in index order; top (resp.
/// bot) for the zero vector.
ObsTerm prodTerm(const TermVector& v);
ObsTerm coprodTerm(const TermVector& v);

/// Join of products / meet of coproducts.
ObsTerm phiVee(const Representative& r);
ObsTerm phiWedge(const Representative& r);

/// Conjunctive-to-disjunctive conversion and its dual, by the plain
/// recursion (no simplification):
///   c2d({})     = {0}
///   c2d({v} + V) = { [i: v_i] ∧ u | i in |v|, u in c2d(V) }
/// Throws ResourceLimit past `budget.maxVectors`.
Representative c2d(const Representative& r, const Budget& budget = {});
Representative d2c(const Representative& r, const Budget& budget = {});

/// Containment over a product graph, reduced to per-component questions.
///
/// Intermediate representatives are simplified with the component engines:
/// coordinates are normalised, neutral coordinates are dropped, absorbing
/// ones drop the whole vector, and vectors subsumed by another are removed.
class ProductEngine {
 public:
  /// Throws Unsupported if `product` is not a product or an engine is
  /// missing for one of its components.
  ProductEngine(CoherenceGraph product, EngineMap engines, Budget budget = {});

  const CoherenceGraph& graph() const { return graph_; }

  /// Disjunctive representative: `phiVee(tauVee(s))` has the meaning of s.
  Representative tauVee(const ObsTerm& s) const;
  /// Conjunctive representative: `phiWedge(tauWedge(s))` has the meaning of s.
  Representative tauWedge(const ObsTerm& s) const;

  /// For every u in tauVee(s) and v in tauWedge(t), some index i in the
  /// joint support has u_i ≤ v_i, with u padded by top and v by bot.
  bool leq(const ObsTerm& s, const ObsTerm& t) const;
  bool equiv(const ObsTerm& s, const ObsTerm& t) const { return leq(s, t) && leq(t, s); }

 private:
  const ComponentEngine& engine(const std::string& index) const;
  bool isTop(const std::string& index, const ObsTerm& c) const;
  bool isBot(const std::string& index, const ObsTerm& c) const;
  TermVector normalized(const TermVector& v) const;
  Representative pruneDisjunctive(const std::vector<TermVector>& vs) const;
  Representative pruneConjunctive(const std::vector<TermVector>& vs) const;
  Representative toDisjunctive(const Representative& conj) const;
  Representative toConjunctive(const Representative& disj) const;
  void checkSize(std::size_t n) const;

  CoherenceGraph graph_;
  EngineMap engines_;
  Budget budget_;
};

Representative tauVee(const CoherenceGraph& product, const EngineMap& engines, const ObsTerm& s,
                      const Budget& budget = {});
Representative tauWedge(const CoherenceGraph& product, const EngineMap& engines, const ObsTerm& s,
                        const Budget& budget = {});
bool prodLeq(const CoherenceGraph& product, const EngineMap& engines, const ObsTerm& s,
             const ObsTerm& t, const Budget& budget = {});

}  // namespace obskit
