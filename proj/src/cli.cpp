#include "obskit/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "obskit/anticlique_engine.hpp"
#include "obskit/error.hpp"
#include "obskit/fan_engine.hpp"
#include "obskit/graph.hpp"
#include "obskit/lattice_engine.hpp"
#include "obskit/oracle.hpp"
#include "obskit/product_engine.hpp"

namespace obskit {

namespace {

enum class EngineChoice { Auto, Lattice, Fan, Anticlique, Product, Oracle };

const std::map<std::string, EngineChoice> kEngineNames{
    {"auto", EngineChoice::Auto},       {"lattice", EngineChoice::Lattice},
    {"fan", EngineChoice::Fan},         {"anticlique", EngineChoice::Anticlique},
    {"product", EngineChoice::Product}, {"oracle", EngineChoice::Oracle},
};

EngineChoice resolve(EngineChoice choice, const CoherenceGraph& g, const std::vector<Term>& terms) {
  if (choice != EngineChoice::Auto) return choice;
  switch (g.kind()) {
    case GraphKind::Anticlique: return EngineChoice::Anticlique;
    case GraphKind::Product: return EngineChoice::Product;
    case GraphKind::Finite: break;
  }
  const bool lattice =
      std::all_of(terms.begin(), terms.end(), [](const Term& t) { return t.isLattice(); });
  return lattice ? EngineChoice::Lattice : EngineChoice::Fan;
}

LatTerm requireLattice(const Term& t) {
  auto l = LatTerm::from(t);
  if (!l) throw Unsupported("the lattice engine does not accept implications: " + printTerm(t));
  return *l;
}

void requireKind(const CoherenceGraph& g, GraphKind kind, const char* engine) {
  if (g.kind() != kind)
    throw Unsupported(std::string("the ") + engine + " engine needs a " +
                      std::string(toString(kind)) + " graph");
}

bool decideLeq(EngineChoice engine, const CoherenceGraph& g, const Term& s, const Term& t,
               const Budget& budget) {
  switch (engine) {
    case EngineChoice::Lattice: return latLeq(g, requireLattice(s), requireLattice(t), budget);
    case EngineChoice::Fan: return fanLeq(g, s, t, budget);
    case EngineChoice::Anticlique:
      requireKind(g, GraphKind::Anticlique, "anticlique");
      return acLeq(g, s, t);
    case EngineChoice::Product:
      requireKind(g, GraphKind::Product, "product");
      return prodLeq(g, defaultEngines(g, budget), s, t, budget);
    case EngineChoice::Oracle: return oracleLeq(g, s, t);
    case EngineChoice::Auto: break;
  }
  throw std::logic_error("engine not resolved");
}

std::string normalForm(EngineChoice engine, const CoherenceGraph& g, const Term& s,
                       const Budget& budget) {
  switch (engine) {
    case EngineChoice::Lattice: return printTerm(dnf(g, requireLattice(s), budget));
    case EngineChoice::Fan: return printTerm(dnf(g, tauFan(g, s, budget), budget));
    case EngineChoice::Anticlique:
      requireKind(g, GraphKind::Anticlique, "anticlique");
      return toString(tauAC(g, s));
    case EngineChoice::Product:
      requireKind(g, GraphKind::Product, "product");
      return toString(ProductEngine(g, defaultEngines(g, budget), budget).tauVee(s));
    case EngineChoice::Oracle: {
      FiniteModel model(g);
      return model.print(model.eval(s));
    }
    case EngineChoice::Auto: break;
  }
  throw std::logic_error("engine not resolved");
}

// The most specific clique on which the two sides disagree in the checked
// direction(s): largest first, then canonical order.
std::optional<Clique> findWitness(const CoherenceGraph& g, const Term& s, const Term& t,
                                  bool equiv) {
  FiniteModel model(g);
  const SemSet x = model.eval(s);
  const SemSet y = model.eval(t);
  std::optional<Clique> best;
  for (std::size_t i = 0; i < model.cliques().size(); ++i) {
    const bool differs = (x.contains(i) && !y.contains(i)) || (equiv && y.contains(i) && !x.contains(i));
    if (!differs) continue;
    const Clique& c = model.cliques()[i];
    if (!best || c.size() > best->size()) best = c;
  }
  return best;
}

struct Options {
  std::string graphFile;
  std::string relation;
  std::string term1;
  std::string term2;
  bool witness = false;
  std::string engine = "auto";
  std::size_t maxBracket = Budget{}.maxBracket;
  std::size_t maxVectors = Budget{}.maxVectors;
};

void addEngineFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--engine", o.engine, "Decision procedure")
      ->check(CLI::IsMember({"auto", "lattice", "fan", "anticlique", "product", "oracle"}));
  cmd->add_option("--max-bracket", o.maxBracket, "Bracket size budget")->check(CLI::PositiveNumber);
  cmd->add_option("--max-vectors", o.maxVectors, "Representative size budget")
      ->check(CLI::PositiveNumber);
}

int check(const Options& o, std::ostream& out, std::ostream& err) {
  const CoherenceGraph g = loadGraphFile(o.graphFile);
  const Term s = parseTerm(o.term1);
  const Term t = parseTerm(o.term2);
  const Budget budget{o.maxBracket, o.maxVectors};
  const EngineChoice engine = resolve(kEngineNames.at(o.engine), g, {s, t});
  const bool equiv = o.relation == "equiv";
  const bool holds = decideLeq(engine, g, s, t, budget) && (!equiv || decideLeq(engine, g, t, s, budget));
  out << (holds ? "HOLDS" : "FAILS") << "\n";
  if (!holds && o.witness) {
    if (!g.isFinite()) {
      err << "note: witnesses are only available for finite graphs\n";
    } else if (auto w = findWitness(g, s, t, equiv)) {
      out << "witness: " << toString(*w) << "\n";
    }
  }
  return holds ? kHolds : kFails;
}

int normalize(const Options& o, std::ostream& out) {
  const CoherenceGraph g = loadGraphFile(o.graphFile);
  const Term s = parseTerm(o.term1);
  const Budget budget{o.maxBracket, o.maxVectors};
  out << normalForm(resolve(kEngineNames.at(o.engine), g, {s}), g, s, budget) << "\n";
  return kHolds;
}

int oracle(const Options& o, std::ostream& out) {
  const CoherenceGraph g = loadGraphFile(o.graphFile);
  const Term s = parseTerm(o.term1);
  FiniteModel model(g);
  out << model.print(model.eval(s)) << "\n";
  return kHolds;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide containment and equivalence of observation terms over coherence graphs",
               "obskit"};
  app.require_subcommand(1);
  Options o;

  auto* checkCmd = app.add_subcommand("check", "Decide s <= t (leq) or s == t (equiv)");
  checkCmd->add_option("graph-file", o.graphFile, "Graph definition (JSON)")->required();
  checkCmd->add_option("relation", o.relation, "leq or equiv")
      ->required()
      ->check(CLI::IsMember({"leq", "equiv"}));
  checkCmd->add_option("term1", o.term1)->required();
  checkCmd->add_option("term2", o.term2)->required();
  checkCmd->add_flag("--witness", o.witness, "Print a distinguishing clique on failure");
  addEngineFlags(checkCmd, o);

  auto* normCmd = app.add_subcommand("normalize", "Print the engine's normal form of a term");
  normCmd->add_option("graph-file", o.graphFile)->required();
  normCmd->add_option("term", o.term1)->required();
  addEngineFlags(normCmd, o);

  auto* oracleCmd = app.add_subcommand("oracle", "Print the meaning of a term on a finite graph");
  oracleCmd->add_option("graph-file", o.graphFile)->required();
  oracleCmd->add_option("term", o.term1)->required();

  auto* infoCmd = app.add_subcommand("info", "Describe a graph");
  infoCmd->add_option("graph-file", o.graphFile)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kError;
  }

  try {
    if (checkCmd->parsed()) return check(o, out, err);
    if (normCmd->parsed()) return normalize(o, out);
    if (oracleCmd->parsed()) return oracle(o, out);
    out << describe(loadGraphFile(o.graphFile)) << "\n";
    return kHolds;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace obskit
