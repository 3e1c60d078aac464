#include "obskit/clique.hpp"

#include <algorithm>

namespace obskit {

CliqueFamily CliqueFamily::minimalOf(std::vector<Clique> members) {
  // Sorting by size first means a member can only be subsumed by one that
  // was already kept.
  std::sort(members.begin(), members.end(), [](const Clique& a, const Clique& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  CliqueFamily out;
  for (auto& m : members) {
    bool subsumed = std::any_of(out.members_.begin(), out.members_.end(),
                                [&](const Clique& kept) { return kept.subsetOf(m); });
    if (!subsumed) out.members_.push_back(std::move(m));
  }
  std::sort(out.members_.begin(), out.members_.end());
  return out;
}

bool isClique(const CoherenceGraph& g, const AtomSet& s) {
  const auto& atoms = s.atoms();
  for (const Atom& a : atoms) g.requireAtom(a);
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      if (!g.coherent(atoms[i], atoms[j])) return false;
  return true;
}

bool moreSpecific(const Clique& alpha, const Clique& beta) { return beta.subsetOf(alpha); }

std::optional<Atom> findIncompatibility(const CoherenceGraph& g, const Clique& alpha,
                                        const Atom& a) {
  g.requireAtom(a);
  for (const Atom& b : alpha)
    if (!g.coherent(a, b)) return b;
  return std::nullopt;
}

CliqueFamily minimalGenerators(std::vector<Clique> family) {
  return CliqueFamily::minimalOf(std::move(family));
}

bool generatorLeq(const CliqueFamily& x, const CliqueFamily& y) {
  return std::all_of(x.begin(), x.end(), [&](const Clique& alpha) {
    return std::any_of(y.begin(), y.end(),
                       [&](const Clique& beta) { return beta.subsetOf(alpha); });
  });
}

std::string toString(const CliqueFamily& f) {
  std::string out = "{";
  bool first = true;
  for (const Clique& c : f) {
    if (!first) out += ", ";
    out += toString(c);
    first = false;
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const CliqueFamily& f) { return os << toString(f); }

}  // namespace obskit
