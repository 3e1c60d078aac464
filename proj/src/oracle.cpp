#include "obskit/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "obskit/error.hpp"

namespace obskit {

namespace {

constexpr std::size_t kHardAtomCap = 24;

}  // namespace

std::size_t SemSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

bool SemSet::subsetOf(const SemSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

FiniteModel::FiniteModel(const CoherenceGraph& g, std::size_t maxAtoms) : graph_(g) {
  auto atoms = g.atoms();
  if (!atoms) throw Unsupported("the semantic oracle needs a finite graph");
  atoms_ = std::move(*atoms);
  const std::size_t n = atoms_.size();
  if (n > std::min(maxAtoms, kHardAtomCap))
    throw ResourceLimit("graph has " + std::to_string(n) + " atoms; the oracle is limited to " +
                        std::to_string(std::min(maxAtoms, kHardAtomCap)));

  std::vector<std::uint32_t> neighbours(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.coherent(atoms_[i], atoms_[j])) neighbours[i] |= 1u << j;

  // A subset is a clique iff dropping its lowest atom leaves a clique and
  // that atom is coherent with everything in the subset.
  const std::uint32_t subsets = 1u << n;
  std::vector<char> isClique(subsets, 0);
  isClique[0] = 1;
  std::vector<std::uint32_t> cliqueMasks{0};
  for (std::uint32_t m = 1; m < subsets; ++m) {
    const std::uint32_t low = static_cast<std::uint32_t>(__builtin_ctz(m));
    if (isClique[m & (m - 1)] && (neighbours[low] & m) == m) {
      isClique[m] = 1;
      cliqueMasks.push_back(m);
    }
  }

  std::vector<std::pair<Clique, std::uint32_t>> sorted;
  sorted.reserve(cliqueMasks.size());
  for (std::uint32_t m : cliqueMasks) {
    std::vector<Atom> members;
    for (std::size_t i = 0; i < n; ++i)
      if (m & (1u << i)) members.push_back(atoms_[i]);
    sorted.emplace_back(Clique(std::move(members)), m);
  }
  std::sort(sorted.begin(), sorted.end());
  indexOfMask_.assign(subsets, -1);
  for (const auto& [c, m] : sorted) {
    indexOfMask_[m] = static_cast<std::int32_t>(cliques_.size());
    cliques_.push_back(c);
    masks_.push_back(m);
  }
}

std::uint32_t FiniteModel::maskOf(const Clique& c) const {
  std::uint32_t m = 0;
  for (const Atom& a : c) {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
    if (it == atoms_.end() || *it != a) throw ForeignAtom(a.str());
    m |= 1u << static_cast<std::uint32_t>(it - atoms_.begin());
  }
  return m;
}

std::optional<std::size_t> FiniteModel::indexOf(const Clique& c) const {
  const std::int32_t i = indexOfMask_[maskOf(c)];
  if (i < 0) return std::nullopt;
  return static_cast<std::size_t>(i);
}

SemSet FiniteModel::all() const {
  SemSet x = none();
  for (std::size_t i = 0; i < cliques_.size(); ++i) x.insert(i);
  return x;
}

SemSet FiniteModel::fromCliques(const std::vector<Clique>& cliques) const {
  SemSet x = none();
  for (const Clique& c : cliques) {
    auto i = indexOf(c);
    if (!i) throw Error(toString(c) + " is not a clique");
    x.insert(*i);
  }
  return x;
}

std::vector<Clique> FiniteModel::members(const SemSet& x) const {
  std::vector<Clique> out;
  for (std::size_t i = 0; i < cliques_.size(); ++i)
    if (x.contains(i)) out.push_back(cliques_[i]);
  return out;
}

SemSet FiniteModel::downClose(const SemSet& generators) const {
  SemSet out = none();
  for (std::size_t a = 0; a < cliques_.size(); ++a)
    for (std::size_t b = 0; b < cliques_.size(); ++b)
      if (generators.contains(b) && (masks_[b] & ~masks_[a]) == 0) {
        out.insert(a);
        break;
      }
  return out;
}

SemSet FiniteModel::downClose(const std::vector<Clique>& generators) const {
  return downClose(fromCliques(generators));
}

bool FiniteModel::isDownClosed(const SemSet& x) const { return downClose(x) == x; }

SemSet FiniteModel::meet(const SemSet& x, const SemSet& y) const {
  SemSet out = none();
  for (std::size_t i = 0; i < cliques_.size(); ++i)
    if (x.contains(i) && y.contains(i)) out.insert(i);
  return out;
}

SemSet FiniteModel::join(const SemSet& x, const SemSet& y) const {
  SemSet out = none();
  for (std::size_t i = 0; i < cliques_.size(); ++i)
    if (x.contains(i) || y.contains(i)) out.insert(i);
  return out;
}

SemSet FiniteModel::implies(const SemSet& x, const SemSet& y) const {
  SemSet out = none();
  for (std::size_t a = 0; a < cliques_.size(); ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < cliques_.size() && ok; ++b) {
      if (!x.contains(b)) continue;
      const std::int32_t u = indexOfMask_[masks_[a] | masks_[b]];
      if (u >= 0 && !y.contains(static_cast<std::size_t>(u))) ok = false;
    }
    if (ok) out.insert(a);
  }
  return out;
}

SemSet FiniteModel::impliesFinitary(const SemSet& x, const SemSet& y) const {
  SemSet out = none();
  for (std::size_t a = 0; a < cliques_.size(); ++a) {
    bool ok = true;
    for (std::size_t c = 0; c < cliques_.size() && ok; ++c)
      if ((masks_[a] & ~masks_[c]) == 0 && x.contains(c) && !y.contains(c)) ok = false;
    if (ok) out.insert(a);
  }
  return out;
}

SemSet FiniteModel::eval(const Term& s) const {
  switch (s.kind()) {
    case TermKind::Atom: {
      const Atom& a = s.atomValue();
      graph_.requireAtom(a);
      return downClose(std::vector<Clique>{Clique::singleton(a)});
    }
    case TermKind::Top: return all();
    case TermKind::Bot: return none();
    case TermKind::And: return meet(eval(s.left()), eval(s.right()));
    case TermKind::Or: return join(eval(s.left()), eval(s.right()));
    case TermKind::Impl: return implies(eval(s.left()), eval(s.right()));
  }
  return none();
}

std::string FiniteModel::print(const SemSet& x) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < cliques_.size(); ++i) {
    if (!x.contains(i)) continue;
    if (!first) out += ", ";
    out += "{";
    for (std::size_t k = 0; k < cliques_[i].size(); ++k)
      out += (k ? "," : "") + cliques_[i].atoms()[k].str();
    out += "}";
    first = false;
  }
  return out + "}";
}

std::vector<Clique> enumCliques(const CoherenceGraph& g, std::size_t maxAtoms) {
  return FiniteModel(g, maxAtoms).cliques();
}

std::vector<Clique> downClose(const CoherenceGraph& g, const std::vector<Clique>& x) {
  FiniteModel m(g);
  return m.members(m.downClose(x));
}

std::vector<Clique> evalTerm(const CoherenceGraph& g, const Term& s) {
  FiniteModel m(g);
  return m.members(m.eval(s));
}

bool oracleLeq(const CoherenceGraph& g, const Term& s, const Term& t) {
  return FiniteModel(g).leq(s, t);
}

CoherenceGraph anticliqueModelGraph(const AtomSet& atoms) {
  std::vector<std::string> names;
  for (const Atom& a : atoms) {
    if (a.inProduct()) throw ForeignAtom(a.str());
    names.push_back(a.name);
  }
  // Two atoms the terms cannot mention stand in for the rest of the
  // infinite universe.
  for (int fresh = 0, added = 0; added < 2; ++fresh) {
    std::string name = "fresh" + std::to_string(fresh);
    if (!atoms.contains(Atom(name))) {
      names.push_back(std::move(name));
      ++added;
    }
  }
  return CoherenceGraph::finite(std::move(names), {});
}

bool acOracleLeq(const Term& s, const Term& t, const AtomSet& pool) {
  const AtomSet atoms = s.atoms().unite(t.atoms()).unite(pool);
  return oracleLeq(anticliqueModelGraph(atoms), s, t);
}

}  // namespace obskit
