#include "obskit/product_engine.hpp"

#include <algorithm>

#include "obskit/anticlique_engine.hpp"
#include "obskit/error.hpp"
#include "obskit/fan_engine.hpp"
#include "obskit/lattice_engine.hpp"

namespace obskit {

// ---------------------------------------------------------------------------
// Component engines

FanComponentEngine::FanComponentEngine(CoherenceGraph g, Budget budget)
    : graph_(std::move(g)), budget_(budget) {
  if (!graph_.hasFan()) throw Unsupported("fan component engine needs a FAN graph");
}

bool FanComponentEngine::leq(const ObsTerm& s, const ObsTerm& t) const {
  return fanLeq(graph_, s, t, budget_);
}

ObsTerm FanComponentEngine::normalize(const ObsTerm& s) const {
  return dnf(graph_, tauFan(graph_, s, budget_), budget_).term();
}

AnticliqueComponentEngine::AnticliqueComponentEngine(CoherenceGraph g) : graph_(std::move(g)) {
  if (graph_.kind() != GraphKind::Anticlique)
    throw Unsupported("anticlique component engine needs an anticlique graph");
}

bool AnticliqueComponentEngine::leq(const ObsTerm& s, const ObsTerm& t) const {
  return acLeq(graph_, s, t);
}

ObsTerm AnticliqueComponentEngine::normalize(const ObsTerm& s) const {
  return phiAC(graph_, tauAC(graph_, s));
}

EngineMap defaultEngines(const CoherenceGraph& product, const Budget& budget) {
  EngineMap out;
  for (const auto& [index, g] : product.components()) {
    if (g.kind() == GraphKind::Anticlique)
      out.emplace(index, std::make_shared<AnticliqueComponentEngine>(g));
    else
      out.emplace(index, std::make_shared<FanComponentEngine>(g, budget));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Term vectors

TermVector TermVector::unit(std::string index, ObsTerm t) {
  return TermVector({{std::move(index), std::move(t)}});
}

std::set<std::string> TermVector::support() const {
  std::set<std::string> out;
  for (const auto& [i, _] : coords_) out.insert(i);
  return out;
}

std::strong_ordering operator<=>(const TermVector& l, const TermVector& r) {
  return std::lexicographical_compare_three_way(
      l.coords_.begin(), l.coords_.end(), r.coords_.begin(), r.coords_.end(),
      [](const auto& a, const auto& b) {
        if (auto c = a.first <=> b.first; c != 0) return c;
        return a.second <=> b.second;
      });
}

std::string toString(const TermVector& v) {
  std::string out = "[";
  bool first = true;
  for (const auto& [i, t] : v.coords()) {
    if (!first) out += "; ";
    out += i + ": " + printTerm(t);
    first = false;
  }
  return out + "]";
}

std::string toString(const Representative& r) {
  std::string out = "{";
  bool first = true;
  for (const TermVector& v : r) {
    if (!first) out += ", ";
    out += toString(v);
    first = false;
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const TermVector& v) { return os << toString(v); }

namespace {

ObsTerm lift(const std::string& index, const ObsTerm& s) {
  switch (s.kind()) {
    case TermKind::Atom: return Term::atom(Atom(s.atomValue().name, index));
    case TermKind::Top:
    case TermKind::Bot: return s;
    case TermKind::And: return Term::conj(lift(index, s.left()), lift(index, s.right()));
    case TermKind::Or: return Term::disj(lift(index, s.left()), lift(index, s.right()));
    case TermKind::Impl: return Term::impl(lift(index, s.left()), lift(index, s.right()));
  }
  return s;
}

template <typename Both, typename OnlyLeft, typename OnlyRight>
TermVector combine(const TermVector& u, const TermVector& v, Both both, OnlyLeft onlyLeft,
                   OnlyRight onlyRight) {
  std::map<std::string, ObsTerm> out;
  for (const auto& [i, ui] : u.coords()) {
    if (v.has(i)) out.emplace(i, both(ui, v.at(i)));
    else out.emplace(i, onlyLeft(ui));
  }
  for (const auto& [i, vi] : v.coords())
    if (!u.has(i)) out.emplace(i, onlyRight(vi));
  return TermVector(std::move(out));
}

ObsTerm same(const ObsTerm& t) { return t; }

}  // namespace

ObsTerm inject(const CoherenceGraph& product, const std::string& index, const ObsTerm& s) {
  const CoherenceGraph& g = product.component(index);
  for (const Atom& a : s.atoms())
    if (!g.contains(a)) throw ForeignAtom(a.str() + "@" + index);
  return lift(index, s);
}

TermVector vecOr(const TermVector& u, const TermVector& v) {
  return combine(u, v, &Term::disj, &same, &same);
}

TermVector vecAnd(const TermVector& u, const TermVector& v) {
  return combine(u, v, &Term::conj, &same, &same);
}

TermVector vecImpl(const TermVector& u, const TermVector& v) {
  return combine(
      u, v, &Term::impl, [](const ObsTerm& ui) { return Term::impl(ui, Term::bot()); }, &same);
}

ObsTerm prodTerm(const TermVector& v) {
  Term acc = Term::top();
  bool first = true;
  for (const auto& [i, t] : v.coords()) {
    acc = first ? lift(i, t) : Term::conj(acc, lift(i, t));
    first = false;
  }
  return acc;
}

ObsTerm coprodTerm(const TermVector& v) {
  Term acc = Term::bot();
  bool first = true;
  for (const auto& [i, t] : v.coords()) {
    acc = first ? lift(i, t) : Term::disj(acc, lift(i, t));
    first = false;
  }
  return acc;
}

ObsTerm phiVee(const Representative& r) {
  std::vector<Term> ts;
  for (const TermVector& v : r) ts.push_back(prodTerm(v));
  return bigOr(std::move(ts));
}

ObsTerm phiWedge(const Representative& r) {
  std::vector<Term> ts;
  for (const TermVector& v : r) ts.push_back(coprodTerm(v));
  return bigAnd(std::move(ts));
}

namespace {

// c2d when `meet` is true, d2c otherwise. The recursion peels the first
// element, so the accumulator walks the set from the back.
Representative convert(const Representative& r, bool meet, const Budget& budget) {
  Representative acc{TermVector()};
  for (auto it = r.rbegin(); it != r.rend(); ++it) {
    Representative next;
    for (const auto& [i, vi] : it->coords())
      for (const TermVector& u : acc) {
        const TermVector unit = TermVector::unit(i, vi);
        next.insert(meet ? vecAnd(unit, u) : vecOr(unit, u));
      }
    if (next.size() > budget.maxVectors)
      throw ResourceLimit("representative exceeds the budget of " +
                          std::to_string(budget.maxVectors) + " vectors");
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

Representative c2d(const Representative& r, const Budget& budget) { return convert(r, true, budget); }
Representative d2c(const Representative& r, const Budget& budget) { return convert(r, false, budget); }

// ---------------------------------------------------------------------------
// Product engine

ProductEngine::ProductEngine(CoherenceGraph product, EngineMap engines, Budget budget)
    : graph_(std::move(product)), engines_(std::move(engines)), budget_(budget) {
  if (graph_.kind() != GraphKind::Product) throw Unsupported("product engine needs a product graph");
  for (const auto& [index, _] : graph_.components()) {
    auto it = engines_.find(index);
    if (it == engines_.end() || !it->second)
      throw Unsupported("no engine for component `" + index + "`");
  }
}

const ComponentEngine& ProductEngine::engine(const std::string& index) const {
  return *engines_.at(index);
}

bool ProductEngine::isTop(const std::string& index, const ObsTerm& c) const {
  return c.kind() == TermKind::Top || engine(index).leq(Term::top(), c);
}

bool ProductEngine::isBot(const std::string& index, const ObsTerm& c) const {
  return c.kind() == TermKind::Bot || engine(index).leq(c, Term::bot());
}

TermVector ProductEngine::normalized(const TermVector& v) const {
  std::map<std::string, ObsTerm> out;
  for (const auto& [i, c] : v.coords()) out.emplace(i, engine(i).normalize(c));
  return TermVector(std::move(out));
}

void ProductEngine::checkSize(std::size_t n) const {
  if (n > budget_.maxVectors)
    throw ResourceLimit("representative exceeds the budget of " +
                        std::to_string(budget_.maxVectors) + " vectors");
}

Representative ProductEngine::pruneDisjunctive(const std::vector<TermVector>& vs) const {
  // Read as products: top coordinates are neutral, a bot coordinate empties
  // the whole product.
  std::vector<TermVector> cleaned;
  for (const TermVector& raw : vs) {
    std::map<std::string, ObsTerm> coords;
    bool empty = false;
    const TermVector norm = normalized(raw);
    for (const auto& [i, c] : norm.coords()) {
      if (isBot(i, c)) {
        empty = true;
        break;
      }
      if (!isTop(i, c)) coords.emplace(i, c);
    }
    if (!empty) cleaned.emplace_back(std::move(coords));
  }
  std::sort(cleaned.begin(), cleaned.end());
  cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());

  // With no bot coordinates, prod(u) ≤ prod(w) iff u_i ≤ w_i on |w|.
  auto below = [&](const TermVector& u, const TermVector& w) {
    return std::all_of(w.coords().begin(), w.coords().end(), [&](const auto& wc) {
      return u.has(wc.first) && engine(wc.first).leq(u.at(wc.first), wc.second);
    });
  };
  std::vector<TermVector> kept;
  for (const TermVector& u : cleaned) {
    if (std::any_of(kept.begin(), kept.end(), [&](const TermVector& w) { return below(u, w); }))
      continue;
    kept.erase(std::remove_if(kept.begin(), kept.end(),
                              [&](const TermVector& w) { return below(w, u); }),
               kept.end());
    kept.push_back(u);
  }
  checkSize(kept.size());
  return Representative(kept.begin(), kept.end());
}

Representative ProductEngine::pruneConjunctive(const std::vector<TermVector>& vs) const {
  // Read as coproducts: bot coordinates are neutral, a top coordinate makes
  // the coproduct top, which is neutral in the outer meet.
  std::vector<TermVector> cleaned;
  for (const TermVector& raw : vs) {
    std::map<std::string, ObsTerm> coords;
    bool full = false;
    const TermVector norm = normalized(raw);
    for (const auto& [i, c] : norm.coords()) {
      if (isTop(i, c)) {
        full = true;
        break;
      }
      if (!isBot(i, c)) coords.emplace(i, c);
    }
    if (!full) cleaned.emplace_back(std::move(coords));
  }
  std::sort(cleaned.begin(), cleaned.end());
  cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());

  // With no top coordinates, coprod(v) ≤ coprod(w) iff v_i ≤ w_i on |v|.
  // In a meet the smaller coproduct makes the larger one redundant.
  auto below = [&](const TermVector& v, const TermVector& w) {
    return std::all_of(v.coords().begin(), v.coords().end(), [&](const auto& vc) {
      return w.has(vc.first) && engine(vc.first).leq(vc.second, w.at(vc.first));
    });
  };
  std::vector<TermVector> kept;
  for (const TermVector& w : cleaned) {
    if (std::any_of(kept.begin(), kept.end(), [&](const TermVector& v) { return below(v, w); }))
      continue;
    kept.erase(std::remove_if(kept.begin(), kept.end(),
                              [&](const TermVector& v) { return below(w, v); }),
               kept.end());
    kept.push_back(w);
  }
  checkSize(kept.size());
  return Representative(kept.begin(), kept.end());
}

Representative ProductEngine::toDisjunctive(const Representative& conj) const {
  Representative acc{TermVector()};
  for (auto it = conj.rbegin(); it != conj.rend(); ++it) {
    std::vector<TermVector> next;
    for (const auto& [i, vi] : it->coords())
      for (const TermVector& u : acc) next.push_back(vecAnd(TermVector::unit(i, vi), u));
    checkSize(next.size());
    acc = pruneDisjunctive(next);
  }
  return acc;
}

Representative ProductEngine::toConjunctive(const Representative& disj) const {
  Representative acc{TermVector()};
  for (auto it = disj.rbegin(); it != disj.rend(); ++it) {
    std::vector<TermVector> next;
    for (const auto& [i, vi] : it->coords())
      for (const TermVector& u : acc) next.push_back(vecOr(TermVector::unit(i, vi), u));
    checkSize(next.size());
    acc = pruneConjunctive(next);
  }
  return acc;
}

Representative ProductEngine::tauVee(const ObsTerm& s) const {
  switch (s.kind()) {
    case TermKind::Atom: {
      const Atom& a = s.atomValue();
      graph_.requireAtom(a);
      return {TermVector::unit(a.component, Term::atom(a.local()))};
    }
    case TermKind::Top: return {TermVector()};
    case TermKind::Bot: return {};
    case TermKind::Or: {
      const Representative l = tauVee(s.left());
      const Representative r = tauVee(s.right());
      std::vector<TermVector> all(l.begin(), l.end());
      all.insert(all.end(), r.begin(), r.end());
      return pruneDisjunctive(all);
    }
    case TermKind::And: {
      const Representative l = toConjunctive(tauVee(s.left()));
      const Representative r = toConjunctive(tauVee(s.right()));
      std::vector<TermVector> all(l.begin(), l.end());
      all.insert(all.end(), r.begin(), r.end());
      return toDisjunctive(pruneConjunctive(all));
    }
    case TermKind::Impl: {
      const Representative sources = tauVee(s.left());
      const Representative targets = toConjunctive(tauVee(s.right()));
      std::vector<TermVector> arrows;
      checkSize(sources.size() * targets.size());
      for (const TermVector& u : sources)
        for (const TermVector& v : targets) arrows.push_back(vecImpl(u, v));
      return toDisjunctive(pruneConjunctive(arrows));
    }
  }
  throw std::logic_error("unknown term kind");
}

Representative ProductEngine::tauWedge(const ObsTerm& s) const { return toConjunctive(tauVee(s)); }

bool ProductEngine::leq(const ObsTerm& s, const ObsTerm& t) const {
  const Representative sources = tauVee(s);
  const Representative targets = tauWedge(t);
  for (const TermVector& u : sources)
    for (const TermVector& v : targets) {
      std::set<std::string> indices = u.support();
      for (const auto& i : v.support()) indices.insert(i);
      const bool some = std::any_of(indices.begin(), indices.end(), [&](const std::string& i) {
        const ObsTerm ui = u.has(i) ? u.at(i) : Term::top();
        const ObsTerm vi = v.has(i) ? v.at(i) : Term::bot();
        return engine(i).leq(ui, vi);
      });
      if (!some) return false;
    }
  return true;
}

Representative tauVee(const CoherenceGraph& product, const EngineMap& engines, const ObsTerm& s,
                      const Budget& budget) {
  return ProductEngine(product, engines, budget).tauVee(s);
}

Representative tauWedge(const CoherenceGraph& product, const EngineMap& engines, const ObsTerm& s,
                        const Budget& budget) {
  return ProductEngine(product, engines, budget).tauWedge(s);
}

bool prodLeq(const CoherenceGraph& product, const EngineMap& engines, const ObsTerm& s,
             const ObsTerm& t, const Budget& budget) {
  return ProductEngine(product, engines, budget).leq(s, t);
}

}  // namespace obskit
