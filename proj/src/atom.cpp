#include "obskit/atom.hpp"

#include <algorithm>
#include <iterator>

namespace obskit {

bool isIdentifier(std::string_view text) {
  if (text.empty()) return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

std::string Atom::str() const {
  return component.empty() ? name : name + "@" + component;
}

std::ostream& operator<<(std::ostream& os, const Atom& a) { return os << a.str(); }

AtomSet::AtomSet(std::initializer_list<Atom> atoms)
    : AtomSet(std::vector<Atom>(atoms)) {}

AtomSet::AtomSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

AtomSet AtomSet::singleton(Atom a) {
  AtomSet s;
  s.atoms_.push_back(std::move(a));
  return s;
}

bool AtomSet::contains(const Atom& a) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

bool AtomSet::subsetOf(const AtomSet& other) const {
  return size() <= other.size() &&
         std::includes(other.atoms_.begin(), other.atoms_.end(),
                       atoms_.begin(), atoms_.end());
}

bool AtomSet::disjointFrom(const AtomSet& other) const {
  auto i = atoms_.begin();
  auto j = other.atoms_.begin();
  while (i != atoms_.end() && j != other.atoms_.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

AtomSet AtomSet::unite(const AtomSet& other) const {
  AtomSet r;
  r.atoms_.reserve(size() + other.size());
  std::set_union(atoms_.begin(), atoms_.end(), other.atoms_.begin(),
                 other.atoms_.end(), std::back_inserter(r.atoms_));
  return r;
}

AtomSet AtomSet::intersect(const AtomSet& other) const {
  AtomSet r;
  std::set_intersection(atoms_.begin(), atoms_.end(), other.atoms_.begin(),
                        other.atoms_.end(), std::back_inserter(r.atoms_));
  return r;
}

AtomSet AtomSet::minus(const AtomSet& other) const {
  AtomSet r;
  std::set_difference(atoms_.begin(), atoms_.end(), other.atoms_.begin(),
                      other.atoms_.end(), std::back_inserter(r.atoms_));
  return r;
}

AtomSet AtomSet::with(const Atom& a) const {
  if (contains(a)) return *this;
  AtomSet r = *this;
  r.atoms_.insert(std::upper_bound(r.atoms_.begin(), r.atoms_.end(), a), a);
  return r;
}

std::strong_ordering operator<=>(const AtomSet& l, const AtomSet& r) {
  return std::lexicographical_compare_three_way(
      l.atoms_.begin(), l.atoms_.end(), r.atoms_.begin(), r.atoms_.end());
}

std::string toString(const AtomSet& s) {
  std::string out = "{";
  bool first = true;
  for (const Atom& a : s) {
    if (!first) out += ", ";
    out += a.str();
    first = false;
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const AtomSet& s) {
  return os << toString(s);
}

}  // namespace obskit
