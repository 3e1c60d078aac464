#pragma once

#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace obskit {

/// True for nonempty strings over [A-Za-z0-9_].
bool isIdentifier(std::string_view text);

/// An atomic observation. Atoms of base graphs carry only a name; atoms of
/// product graphs also carry the component index and render as `name@index`.
struct Atom {
  std::string name;
  std::string component;

  Atom() = default;
  explicit Atom(std::string name_) : name(std::move(name_)) {}
  Atom(std::string name_, std::string component_)
      : name(std::move(name_)), component(std::move(component_)) {}

  bool inProduct() const { return !component.empty(); }
  /// The component-local atom (drops the index).
  Atom local() const { return Atom(name); }
  std::string str() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;
};

std::ostream& operator<<(std::ostream& os, const Atom& a);

/// A finite set of atoms kept as a sorted, duplicate-free vector.
/// Cliques are atom sets whose members are pairwise coherent in some graph;
/// that property is relative to a graph and is checked by `isClique`.
class AtomSet {
 public:
  using const_iterator = std::vector<Atom>::const_iterator;

  AtomSet() = default;
  AtomSet(std::initializer_list<Atom> atoms);
  explicit AtomSet(std::vector<Atom> atoms);

  static AtomSet singleton(Atom a);

  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }
  const_iterator begin() const { return atoms_.begin(); }
  const_iterator end() const { return atoms_.end(); }
  const std::vector<Atom>& atoms() const { return atoms_; }

  bool contains(const Atom& a) const;
  bool subsetOf(const AtomSet& other) const;
  bool disjointFrom(const AtomSet& other) const;

  AtomSet unite(const AtomSet& other) const;
  AtomSet intersect(const AtomSet& other) const;
  AtomSet minus(const AtomSet& other) const;
  AtomSet with(const Atom& a) const;

  friend bool operator==(const AtomSet&, const AtomSet&) = default;
  friend std::strong_ordering operator<=>(const AtomSet& l, const AtomSet& r);

 private:
  std::vector<Atom> atoms_;
};

using Clique = AtomSet;

/// Renders as `{a, b}`.
std::string toString(const AtomSet& s);
std::ostream& operator<<(std::ostream& os, const AtomSet& s);

}  // namespace obskit
