#include "obskit/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <variant>

#include <json.hpp>

#include "obskit/error.hpp"

namespace obskit {

namespace {

struct FiniteData {
  std::vector<std::string> names;  // sorted
  std::unordered_map<std::string, std::size_t> index;
  std::vector<char> adjacency;  // row-major, names.size()^2

  bool coh(std::size_t i, std::size_t j) const {
    return adjacency[i * names.size() + j] != 0;
  }
};

struct AnticliqueData {
  std::string prefix;
};

struct ProductData {
  std::map<std::string, CoherenceGraph> components;
};

bool isReserved(std::string_view name) { return name == "top" || name == "bot"; }

}  // namespace

struct CoherenceGraph::Impl {
  std::variant<FiniteData, AnticliqueData, ProductData> data;
};

std::string_view toString(GraphKind kind) {
  switch (kind) {
    case GraphKind::Finite: return "finite";
    case GraphKind::Anticlique: return "anticlique";
    case GraphKind::Product: return "product";
  }
  return "?";
}

CoherenceGraph CoherenceGraph::finite(std::vector<std::string> atoms,
                                      const std::vector<Pair>& coherent) {
  FiniteData d;
  std::sort(atoms.begin(), atoms.end());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!isIdentifier(atoms[i]) || isReserved(atoms[i]))
      throw GraphError("invalid atom name `" + atoms[i] + "`");
    if (i > 0 && atoms[i] == atoms[i - 1])
      throw GraphError("duplicate atom `" + atoms[i] + "`");
    d.index.emplace(atoms[i], i);
  }
  d.names = std::move(atoms);
  const std::size_t n = d.names.size();
  d.adjacency.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) d.adjacency[i * n + i] = 1;
  for (const auto& [a, b] : coherent) {
    auto ia = d.index.find(a);
    auto ib = d.index.find(b);
    if (ia == d.index.end()) throw GraphError("unknown atom `" + a + "` in coherence pair");
    if (ib == d.index.end()) throw GraphError("unknown atom `" + b + "` in coherence pair");
    d.adjacency[ia->second * n + ib->second] = 1;
    d.adjacency[ib->second * n + ia->second] = 1;
  }
  return CoherenceGraph(std::make_shared<const Impl>(Impl{std::move(d)}));
}

CoherenceGraph CoherenceGraph::anticlique(std::string prefix) {
  if (!isIdentifier(prefix)) throw GraphError("invalid anticlique prefix `" + prefix + "`");
  return CoherenceGraph(std::make_shared<const Impl>(Impl{AnticliqueData{std::move(prefix)}}));
}

CoherenceGraph CoherenceGraph::product(std::map<std::string, CoherenceGraph> components) {
  for (const auto& [index, g] : components) {
    if (!isIdentifier(index)) throw GraphError("invalid component index `" + index + "`");
    if (g.kind() == GraphKind::Product)
      throw GraphError("component `" + index + "` is a product; only base graphs may be components");
  }
  return CoherenceGraph(std::make_shared<const Impl>(Impl{ProductData{std::move(components)}}));
}

GraphKind CoherenceGraph::kind() const {
  switch (impl_->data.index()) {
    case 0: return GraphKind::Finite;
    case 1: return GraphKind::Anticlique;
    default: return GraphKind::Product;
  }
}

bool CoherenceGraph::hasFan() const {
  switch (kind()) {
    case GraphKind::Finite: return true;
    case GraphKind::Anticlique: return false;
    case GraphKind::Product:
      return std::all_of(components().begin(), components().end(),
                         [](const auto& c) { return c.second.hasFan(); });
  }
  return false;
}

bool CoherenceGraph::isFinite() const {
  switch (kind()) {
    case GraphKind::Finite: return true;
    case GraphKind::Anticlique: return false;
    case GraphKind::Product:
      return std::all_of(components().begin(), components().end(),
                         [](const auto& c) { return c.second.isFinite(); });
  }
  return false;
}

bool CoherenceGraph::contains(const Atom& a) const {
  if (const auto* f = std::get_if<FiniteData>(&impl_->data))
    return !a.inProduct() && f->index.count(a.name) > 0;
  if (const auto* ac = std::get_if<AnticliqueData>(&impl_->data)) {
    if (a.inProduct()) return false;
    const std::string& p = ac->prefix;
    if (a.name.size() <= p.size() || a.name.compare(0, p.size(), p) != 0) return false;
    std::string_view digits = std::string_view(a.name).substr(p.size());
    if (digits.size() > 1 && digits[0] == '0') return false;
    return std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; });
  }
  const auto& p = std::get<ProductData>(impl_->data);
  if (!a.inProduct()) return false;
  auto it = p.components.find(a.component);
  return it != p.components.end() && it->second.contains(a.local());
}

void CoherenceGraph::requireAtom(const Atom& a) const {
  if (!contains(a)) throw ForeignAtom(a.str());
}

bool CoherenceGraph::coherent(const Atom& a, const Atom& b) const {
  requireAtom(a);
  requireAtom(b);
  if (const auto* f = std::get_if<FiniteData>(&impl_->data))
    return f->coh(f->index.at(a.name), f->index.at(b.name));
  if (std::holds_alternative<AnticliqueData>(impl_->data)) return a == b;
  if (a.component != b.component) return true;
  return component(a.component).coherent(a.local(), b.local());
}

std::vector<Atom> CoherenceGraph::antiNeighbourhood(const Atom& a) const {
  if (!hasFan())
    throw Unsupported("anti-neighbourhoods are infinite in " +
                      std::string(toString(kind())) + " graphs without the FAN property");
  requireAtom(a);
  std::vector<Atom> out;
  if (const auto* f = std::get_if<FiniteData>(&impl_->data)) {
    const std::size_t i = f->index.at(a.name);
    for (std::size_t j = 0; j < f->names.size(); ++j)
      if (!f->coh(i, j)) out.emplace_back(f->names[j]);
    return out;
  }
  for (const Atom& b : component(a.component).antiNeighbourhood(a.local()))
    out.emplace_back(b.name, a.component);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Atom>> CoherenceGraph::atoms() const {
  if (!isFinite()) return std::nullopt;
  std::vector<Atom> out;
  if (const auto* f = std::get_if<FiniteData>(&impl_->data)) {
    for (const auto& n : f->names) out.emplace_back(n);
    return out;
  }
  for (const auto& [index, g] : components()) {
    const std::vector<Atom> local = *g.atoms();
    for (const Atom& a : local) out.emplace_back(a.name, index);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::string& CoherenceGraph::prefix() const {
  if (const auto* ac = std::get_if<AnticliqueData>(&impl_->data)) return ac->prefix;
  throw Unsupported("not an anticlique graph");
}

Atom CoherenceGraph::anticliqueAtom(std::size_t index) const {
  return Atom(prefix() + std::to_string(index));
}

const std::map<std::string, CoherenceGraph>& CoherenceGraph::components() const {
  if (const auto* p = std::get_if<ProductData>(&impl_->data)) return p->components;
  throw Unsupported("not a product graph");
}

const CoherenceGraph& CoherenceGraph::component(const std::string& index) const {
  const auto& comps = components();
  auto it = comps.find(index);
  if (it == comps.end()) throw ForeignAtom("@" + index);
  return it->second;
}

namespace {

using nlohmann::json;

std::string requireString(const json& j, const char* what) {
  if (!j.is_string()) throw GraphError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

CoherenceGraph graphFromJson(const json& j, bool allowProduct) {
  if (!j.is_object()) throw GraphError("graph definition must be a JSON object");
  auto kindIt = j.find("kind");
  if (kindIt == j.end()) throw GraphError("missing field `kind`");
  const std::string kind = requireString(*kindIt, "`kind`");

  if (kind == "finite") {
    auto atomsIt = j.find("atoms");
    if (atomsIt == j.end() || !atomsIt->is_array())
      throw GraphError("finite graph needs an `atoms` array");
    std::vector<std::string> atoms;
    for (const auto& a : *atomsIt) atoms.push_back(requireString(a, "atom"));
    std::vector<CoherenceGraph::Pair> pairs;
    if (auto cohIt = j.find("coh"); cohIt != j.end()) {
      if (!cohIt->is_array()) throw GraphError("`coh` must be an array of pairs");
      for (const auto& p : *cohIt) {
        if (!p.is_array() || p.size() != 2) throw GraphError("coherence pairs must have two atoms");
        pairs.emplace_back(requireString(p[0], "atom"), requireString(p[1], "atom"));
      }
    }
    return CoherenceGraph::finite(std::move(atoms), pairs);
  }
  if (kind == "anticlique") {
    auto it = j.find("prefix");
    if (it == j.end()) throw GraphError("anticlique graph needs a `prefix`");
    return CoherenceGraph::anticlique(requireString(*it, "`prefix`"));
  }
  if (kind == "product") {
    if (!allowProduct) throw GraphError("product components must be base graphs");
    auto it = j.find("components");
    if (it == j.end() || !it->is_object())
      throw GraphError("product graph needs a `components` object");
    std::map<std::string, CoherenceGraph> comps;
    for (const auto& [index, sub] : it->items()) comps.emplace(index, graphFromJson(sub, false));
    return CoherenceGraph::product(std::move(comps));
  }
  throw GraphError("unknown graph kind `" + kind + "`");
}

}  // namespace

CoherenceGraph loadGraph(std::string_view document) {
  // nlohmann keeps the last value for repeated keys; track keys per open
  // object so duplicates (e.g. component indices) are reported instead.
  std::vector<std::set<std::string>> open;
  std::string duplicate;
  auto callback = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start: open.emplace_back(); break;
      case json::parse_event_t::object_end: open.pop_back(); break;
      case json::parse_event_t::key:
        if (!open.empty() && !open.back().insert(parsed.get<std::string>()).second &&
            duplicate.empty())
          duplicate = parsed.get<std::string>();
        break;
      default: break;
    }
    return true;
  };
  json j;
  try {
    j = json::parse(document.begin(), document.end(), callback);
  } catch (const json::exception& e) {
    throw GraphError(std::string("graph document is not valid JSON: ") + e.what());
  }
  if (!duplicate.empty()) throw GraphError("duplicate key `" + duplicate + "`");
  return graphFromJson(j, true);
}

CoherenceGraph loadGraphFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot read graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return loadGraph(buf.str());
}

std::string describe(const CoherenceGraph& g) {
  std::string out = "kind: " + std::string(toString(g.kind()));
  if (g.kind() == GraphKind::Product) out += " (" + std::to_string(g.components().size()) + " components)";
  out += "\natoms: ";
  if (auto atoms = g.atoms()) out += std::to_string(atoms->size());
  else out += "unbounded";
  out += "\nfan: ";
  out += g.hasFan() ? "yes" : "no";
  return out;
}

}  // namespace obskit
