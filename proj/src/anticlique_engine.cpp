#include "obskit/anticlique_engine.hpp"

#include "obskit/error.hpp"

namespace obskit {

using Kind = AnticliqueRepr::Kind;

std::string toString(const AnticliqueRepr& r) {
  if (r.kind() == Kind::Top) return "TOP";
  std::string out = r.kind() == Kind::Fin ? "FIN{" : "COFIN{";
  bool first = true;
  for (const Atom& a : r.atoms()) {
    if (!first) out += ",";
    out += a.str();
    first = false;
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const AnticliqueRepr& r) { return os << toString(r); }

AnticliqueRepr oplus(const AnticliqueRepr& r, const AnticliqueRepr& q) {
  if (r.kind() == Kind::Top || q.kind() == Kind::Top) return AnticliqueRepr::top();
  const AtomSet& a = r.atoms();
  const AtomSet& b = q.atoms();
  if (r.kind() == Kind::Fin && q.kind() == Kind::Fin) return AnticliqueRepr::fin(a.unite(b));
  if (r.kind() == Kind::CoFin && q.kind() == Kind::CoFin) return AnticliqueRepr::cofin(a.intersect(b));
  if (r.kind() == Kind::Fin) return AnticliqueRepr::cofin(b.minus(a));
  return AnticliqueRepr::cofin(a.minus(b));
}

AnticliqueRepr otimes(const AnticliqueRepr& r, const AnticliqueRepr& q) {
  if (r.kind() == Kind::Top) return q;
  if (q.kind() == Kind::Top) return r;
  const AtomSet& a = r.atoms();
  const AtomSet& b = q.atoms();
  if (r.kind() == Kind::Fin && q.kind() == Kind::Fin) return AnticliqueRepr::fin(a.intersect(b));
  if (r.kind() == Kind::CoFin && q.kind() == Kind::CoFin) return AnticliqueRepr::cofin(a.unite(b));
  if (r.kind() == Kind::Fin) return AnticliqueRepr::fin(a.minus(b));
  return AnticliqueRepr::fin(b.minus(a));
}

AnticliqueRepr ominus(const AnticliqueRepr& r, const AnticliqueRepr& q) {
  if (q.kind() == Kind::Top) return AnticliqueRepr::top();
  if (r.kind() == Kind::Top) return q;
  const AtomSet& a = r.atoms();
  const AtomSet& b = q.atoms();
  if (r.kind() == Kind::Fin && q.kind() == Kind::Fin) {
    if (a.subsetOf(b)) return AnticliqueRepr::top();
    // Some {x} with x in A \ B refutes every singleton other than itself,
    // so the result is cofinite.
    return AnticliqueRepr::cofin(a.minus(b));
  }
  if (r.kind() == Kind::Fin) {
    if (a.disjointFrom(b)) return AnticliqueRepr::top();
    return AnticliqueRepr::cofin(b.intersect(a));
  }
  if (q.kind() == Kind::CoFin) {
    if (b.subsetOf(a)) return AnticliqueRepr::top();
    return AnticliqueRepr::cofin(b.minus(a));
  }
  return AnticliqueRepr::fin(a.unite(b));
}

AnticliqueRepr tauAC(const CoherenceGraph& omega, const ObsTerm& s) {
  if (omega.kind() != GraphKind::Anticlique)
    throw Unsupported("the anticlique engine needs an anticlique graph");
  switch (s.kind()) {
    case TermKind::Atom:
      omega.requireAtom(s.atomValue());
      return AnticliqueRepr::fin(AtomSet::singleton(s.atomValue()));
    case TermKind::Top: return AnticliqueRepr::top();
    case TermKind::Bot: return AnticliqueRepr::fin({});
    case TermKind::Or: return oplus(tauAC(omega, s.left()), tauAC(omega, s.right()));
    case TermKind::And: return otimes(tauAC(omega, s.left()), tauAC(omega, s.right()));
    case TermKind::Impl: return ominus(tauAC(omega, s.left()), tauAC(omega, s.right()));
  }
  throw std::logic_error("unknown term kind");
}

ObsTerm phiAC(const CoherenceGraph& omega, const AnticliqueRepr& r, const std::optional<Atom>& hint) {
  auto join = [](const AtomSet& atoms) {
    std::vector<Term> ts;
    for (const Atom& a : atoms) ts.push_back(Term::atom(a));
    return bigOr(std::move(ts));
  };
  switch (r.kind()) {
    case Kind::Top: return Term::top();
    case Kind::Fin: return join(r.atoms());
    case Kind::CoFin:
      if (!r.atoms().empty()) return Term::impl(join(r.atoms()), Term::bot());
      break;
  }
  const Atom a = hint ? *hint : omega.anticliqueAtom(0);
  omega.requireAtom(a);
  return Term::disj(Term::atom(a), Term::impl(Term::atom(a), Term::bot()));
}

bool reprLeq(const AnticliqueRepr& r, const AnticliqueRepr& q) {
  if (q.kind() == Kind::Top) return true;
  if (r.kind() == Kind::Top) return false;
  const AtomSet& a = r.atoms();
  const AtomSet& b = q.atoms();
  if (r.kind() == Kind::Fin) return q.kind() == Kind::Fin ? a.subsetOf(b) : a.disjointFrom(b);
  // A cofinite set is never inside a finite one.
  if (q.kind() == Kind::Fin) return false;
  return b.subsetOf(a);
}

bool acLeq(const CoherenceGraph& omega, const ObsTerm& s, const ObsTerm& t) {
  return reprLeq(tauAC(omega, s), tauAC(omega, t));
}

bool acEquiv(const CoherenceGraph& omega, const ObsTerm& s, const ObsTerm& t) {
  return tauAC(omega, s) == tauAC(omega, t);
}

}  // namespace obskit
