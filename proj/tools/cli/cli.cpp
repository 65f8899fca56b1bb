#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "blockgraph/blockgraph.hpp"
#include "blockgraph/blocks.hpp"
#include "blockgraph/chartab.hpp"
#include "blockgraph/errors.hpp"
#include "blockgraph/lietype.hpp"
#include "blockgraph/numtheory.hpp"
#include "blockgraph/tablegen.hpp"

#ifndef BLOCKGRAPH_DEFAULT_CORPUS
#define BLOCKGRAPH_DEFAULT_CORPUS "corpus"
#endif

namespace blockgraph::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using u64 = std::uint64_t;

namespace {

// Failures that are the caller's fault in a way the parser can detect.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path corpus_dir() {
  if (const char* env = std::getenv("BLOCKGRAPH_CORPUS"); env != nullptr && *env != '\0') return env;
  return BLOCKGRAPH_DEFAULT_CORPUS;
}

// A table argument is a path, or the name of a bundled table.
fs::path resolve_table(const std::string& arg) {
  if (fs::exists(arg)) return arg;
  for (const fs::path& candidate : {corpus_dir() / arg, corpus_dir() / (arg + ".json")}) {
    if (fs::exists(candidate)) return candidate;
  }
  throw UsageError("no such table: " + arg);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CharacterTable load(const std::string& arg) { return parse_table(read_file(resolve_table(arg))); }

json integer_json(const Integer& v) {
  if (v >= 0 && v <= Integer(std::numeric_limits<u64>::max())) return static_cast<u64>(v);
  return v.str();
}

std::string join(const std::vector<u64>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

std::string triple_text(const PrimeTriple& t) {
  return "{" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " + std::to_string(t[2]) + "}";
}

struct Options {
  std::string table;
  std::string input;
  u64 prime = 0;
  bool as_json = false;
  bool as_dot = false;
  std::string family;
  unsigned rank = 0;
  u64 q = 0;
  u64 ell = 0;
  u64 e = 0;
  u64 t = 0;
  u64 n = 0;
  std::string name = "G";
};

int cmd_validate(const Options& o, std::ostream& out) {
  const fs::path path = resolve_table(o.table);
  const std::string text = read_file(path);
  try {
    const CharacterTable t = parse_table(text);
    out << json{{"name", t.name}, {"classes", t.size()}, {"valid", true}, {"violations", json::array()}}.dump() << "\n";
    return kOk;
  } catch (const ValidationError& e) {
    out << json{{"valid", false}, {"violations", e.violations()}}.dump() << "\n";
    return kValidationFailure;
  }
}

int cmd_blocks(const Options& o, std::ostream& out) {
  const CharacterTable t = load(o.table);
  if (!nt::is_prime(o.prime)) throw UsageError(std::to_string(o.prime) + " is not prime");
  const BlockPartition b = block_partition(t, o.prime);
  json doc = json::parse(partition_json(b));
  for (std::size_t i = 0; i < b.blocks.size(); ++i) {
    json degrees = json::array();
    for (std::size_t row : b.blocks[i]) degrees.push_back(integer_json(t.degree(row)));
    doc["blocks"][i]["degrees"] = std::move(degrees);
  }
  out << doc.dump() << "\n";
  return kOk;
}

int cmd_graph(const Options& o, std::ostream& out) {
  if (o.as_json && o.as_dot) throw UsageError("--json and --dot are mutually exclusive");
  const CharacterTable t = load(o.table);
  const BlockGraph g = build_block_graph(t);
  if (o.as_json) {
    out << graph_json(g) << "\n";
  } else if (o.as_dot) {
    out << export_dot(g);
  } else {
    out << "block graph of " << t.name << ": vertices " << join(g.vertices) << "; " << g.edges.size() << " edges";
    out << (is_complete(g) ? "; complete" : "; not complete");
    const auto missing = missing_edges(g);
    if (!missing.empty() && !g.edges.empty()) {
      out << "; missing";
      for (const auto& [p, q] : missing) out << " {" << p << ", " << q << "}";
    }
    out << "\n";
  }
  return kOk;
}

int cmd_psolv(const Options& o, std::ostream& out) {
  const CharacterTable t = load(o.table);
  const BlockGraph g = build_block_graph(t);
  const auto triangles = triangles_containing(g, o.prime);
  if (o.as_json) {
    json tri = json::array();
    for (const auto& x : triangles) tri.push_back(x);
    out << json{{"prime", o.prime},
                {"triangles", tri},
                {"hypothesis_holds", triangles.empty()},
                {"explanation", triangles.empty()
                                    ? "no triangle containing " + std::to_string(o.prime) +
                                          ": the hypothesis of the triangle criterion for " +
                                          std::to_string(o.prime) + "-solvability holds"
                                    : "triangle present; the criterion is one-directional and gives no conclusion"}}
                .dump()
        << "\n";
    return kOk;
  }
  if (triangles.empty()) {
    out << "no triangle containing " << o.prime << ": the hypothesis of the triangle criterion for " << o.prime
        << "-solvability holds\n";
  } else {
    out << triangles.size() << " triangle(s) containing " << o.prime << ", e.g. " << triple_text(triangles.front())
        << ": the criterion is one-directional and gives no conclusion\n";
  }
  return kOk;
}

int cmd_solvable(const Options& o, std::ostream& out) {
  const CharacterTable t = load(o.table);
  const SolvabilityReport r = solvability_criterion(t);
  if (o.as_json) {
    json tri = json::array();
    for (const auto& x : r.triangles) tri.push_back(x);
    out << json{{"two_divides_order", r.two_divides_order},
                {"triangles", tri},
                {"verdict", r.solvable ? "solvable" : "not certified"},
                {"explanation", r.summary}}
                .dump()
        << "\n";
  } else {
    out << r.summary << "\n";
  }
  return kOk;
}

LieGroup lie_group(const Options& o) { return make_lie_group(parse_family(o.family), o.rank, o.q); }

int cmd_steinberg(const Options& o, std::ostream& out) {
  const LieGroup s = lie_group(o);
  const bool in_block = steinberg_in_principal_block(s, o.ell);
  const u64 e = e_of(o.ell, s.q);
  std::ostringstream why;
  why << "e = " << e << " is " << (in_block ? "" : "not ") << "a regular number of " << s.name()
      << ", so the Steinberg character " << (in_block ? "lies" : "does not lie") << " in the principal " << o.ell
      << "-block";
  out << json{{"group", s.name()}, {"ell", o.ell}, {"e", e}, {"regular", in_block}, {"in_principal_block", in_block},
              {"explanation", why.str()}}
             .dump()
      << "\n";
  return kOk;
}

int cmd_regnum(const Options& o, std::ostream& out) {
  const Family f = parse_family(o.family);
  unsigned rank = o.rank == 0 ? fixed_rank(f) : o.rank;
  if (rank == 0) throw UsageError("--rank is required for " + family_name(f));
  const bool regular = is_regular(f, rank, o.e);
  const std::string name = family_name(f) + (is_exceptional(f) ? "" : std::to_string(rank));
  out << json{{"family", family_name(f)}, {"rank", rank}, {"e", o.e}, {"regular", regular},
              {"explanation", "e = " + std::to_string(o.e) + " is " + (regular ? "" : "not ") +
                                  "a regular number of " + name}}
             .dump()
      << "\n";
  return kOk;
}

int cmd_zsigmondy(const Options& o, std::ostream& out) {
  const auto r = zsigmondy(o.t, o.n);
  json doc{{"t", o.t}, {"n", o.n}};
  doc["prime"] = r ? integer_json(*r) : json(nullptr);
  doc["explanation"] = r ? r->str() + " is the smallest Zsigmondy prime of " + std::to_string(o.t) + "^" +
                               std::to_string(o.n) + " - 1"
                         : std::to_string(o.t) + "^" + std::to_string(o.n) + " - 1 has no Zsigmondy prime";
  out << doc.dump() << "\n";
  return kOk;
}

int cmd_order(const Options& o, std::ostream& out) {
  const LieGroup s = lie_group(o);
  const FactoredOrder ord = group_order(s);
  json factors = json::array();
  for (const auto& [p, e] : ord.factors) factors.push_back({integer_json(p), e});
  out << json{{"group", s.name()}, {"order", ord.value.str()}, {"factors", factors},
              {"explanation", "|" + s.name() + "| = " + ord.value.str()}}
             .dump()
      << "\n";
  return kOk;
}

int cmd_dixon(const Options& o, std::ostream& out) {
  const PermGroup g = parse_perm_group(read_file(o.input));
  out << print_table(dixon_table(g, o.name));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brauer p-blocks, block graphs and Lie-type number theory from character tables", "blockgraph"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Parse and check a character table");
  validate->add_option("table", o.table, "Table file or bundled table name")->required();

  auto* blocks = app.add_subcommand("blocks", "p-block partition as JSON");
  blocks->add_option("table", o.table)->required();
  blocks->add_option("-p,--prime", o.prime, "Prime")->required();

  auto* graph = app.add_subcommand("graph", "Block graph");
  graph->add_option("table", o.table)->required();
  auto* json_flag = graph->add_flag("--json", o.as_json, "Emit JSON");
  auto* dot_flag = graph->add_flag("--dot", o.as_dot, "Emit Graphviz DOT");
  json_flag->excludes(dot_flag);

  auto* psolv = app.add_subcommand("psolv", "Triangles containing a prime");
  psolv->add_option("table", o.table)->required();
  psolv->add_option("-p,--prime", o.prime)->required();
  psolv->add_flag("--json", o.as_json);

  auto* solvable = app.add_subcommand("solvable", "Triangle test at 2 on the table of G/S(G)");
  solvable->add_option("table", o.table)->required();
  solvable->add_flag("--json", o.as_json);

  auto* steinberg = app.add_subcommand("steinberg", "Steinberg character in the principal block");
  steinberg->add_option("--family", o.family)->required();
  steinberg->add_option("--rank", o.rank);
  steinberg->add_option("--q", o.q)->required();
  steinberg->add_option("--ell", o.ell)->required();

  auto* regnum = app.add_subcommand("regnum", "Regular number test");
  regnum->add_option("--family", o.family)->required();
  regnum->add_option("--rank", o.rank);
  regnum->add_option("--e", o.e)->required()->check(CLI::PositiveNumber);

  auto* zsig = app.add_subcommand("zsigmondy", "Smallest Zsigmondy prime of t^n - 1");
  zsig->add_option("-t", o.t)->required()->check(CLI::Range(u64{2}, std::numeric_limits<u64>::max()));
  zsig->add_option("-n", o.n)->required()->check(CLI::Range(u64{2}, u64{100000}));

  auto* order = app.add_subcommand("order", "Order of a simple group of Lie type");
  order->add_option("--family", o.family)->required();
  order->add_option("--rank", o.rank);
  order->add_option("--q", o.q)->required();

  auto* dixon = app.add_subcommand("dixon", "Character table of a permutation group");
  dixon->add_option("permgroup", o.input, "JSON {degree, generators}")->required();
  dixon->add_option("--name", o.name, "Table name");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*blocks) return cmd_blocks(o, out);
    if (*graph) return cmd_graph(o, out);
    if (*psolv) return cmd_psolv(o, out);
    if (*solvable) return cmd_solvable(o, out);
    if (*steinberg) return cmd_steinberg(o, out);
    if (*regnum) return cmd_regnum(o, out);
    if (*zsig) return cmd_zsigmondy(o, out);
    if (*order) return cmd_order(o, out);
    if (*dixon) return cmd_dixon(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    // domain preconditions: bad descriptor, wrong prime, missing vertex and the like
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}

}  // namespace blockgraph::cli
