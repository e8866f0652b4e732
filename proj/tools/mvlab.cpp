// mvlab: command-line surface over the library.  JSON in, JSON out.
// Exit codes: 0 ok, 1 semantic negative (--strict check failed or a sweep
// found a counterexample), 2 malformed input or parameters over the caps.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mvlab/catalog.hpp"
#include "mvlab/flag.hpp"
#include "mvlab/json_io.hpp"
#include "mvlab/mv.hpp"
#include "mvlab/parallel.hpp"
#include "mvlab/polynomial.hpp"
#include "mvlab/schubitope.hpp"

using namespace mvlab;
using nlohmann::json;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Value> parse_values(const std::string& csv) {
  std::vector<Value> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw InputError("expected a comma-separated integer list, got '" + csv + "'");
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  for (Value v : parse_values(csv)) out.push_back(static_cast<int>(v));
  return out;
}

Permutation parse_perm(const std::string& csv) { return Permutation(parse_ints(csv)); }

json read_json_source(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
}

// Polytope source options shared by check-mv, crystal and the graph export.
struct PolytopeSource {
  std::string file;
  std::string matroid_bases;
  int n = 0;
  std::string pitman;
  std::string point;

  void attach(CLI::App* cmd) {
    cmd->add_option("--file", file, "PolytopeDoc JSON file ('-' for stdin)");
    cmd->add_option("--matroid-bases", matroid_bases, "bases as a JSON array of arrays");
    cmd->add_option("--n", n, "ground-set size for --matroid-bases");
    cmd->add_option("--pitman-stanley", pitman, "comma-separated nonnegative weights");
    cmd->add_option("--point", point, "comma-separated coordinates");
  }

  GenPermutahedron resolve() const {
    const int sources = !file.empty() + !matroid_bases.empty() + !pitman.empty() + !point.empty();
    if (sources != 1)
      throw InputError("give exactly one of --file, --matroid-bases, --pitman-stanley, --point");
    if (!file.empty()) return polytope_from_json(read_json_source(file));
    if (!matroid_bases.empty()) {
      if (n == 0) throw InputError("--matroid-bases needs --n");
      json doc;
      try {
        doc = json::parse(matroid_bases);
      } catch (const json::exception& e) {
        throw InputError(std::string("bad JSON in --matroid-bases: ") + e.what());
      }
      return matroid_polytope(matroid_from_json(json{{"n", n}, {"bases", doc}}));
    }
    if (!pitman.empty()) return pitman_stanley(parse_values(pitman));
    return GenPermutahedron::point(parse_values(point));
  }
};

json witness_to_json(const PluckerWitness& w) {
  return json{{"S", subset_to_json(w.s)}, {"a", w.a},     {"b", w.b},
              {"c", w.c},                 {"lhs", w.lhs}, {"rhs", w.rhs}};
}

json mv_report(const GenPermutahedron& p) {
  json out;
  out["n"] = p.n();
  out["rank"] = p.rank();
  const auto w = mv_witness(p);
  out["is_mv"] = !w.has_value();
  if (w) out["witness"] = witness_to_json(*w);
  out["lowest"] = point_to_json(vertex(p, Permutation::identity(p.n())));
  out["highest"] = point_to_json(weight(p));
  if (p.n() <= 9) {
    json verts = json::array();
    for (const auto& v : vertices(p)) verts.push_back(point_to_json(v));
    out["vertices"] = verts;
  }
  return out;
}

std::string table_id(const GenPermutahedron& p) {
  std::string id = std::to_string(p.n());
  for (Value v : p.table()) id += "," + std::to_string(v);
  return id;
}

// ---- sweeps ---------------------------------------------------------------

json sweep_matroids(int n, int k) {
  if (n < 2 || n > 6 || k < 1 || k >= n) throw InputError("sweep matroids: need 2<=n<=6, 1<=k<n");
  long checked = 0, violations = 0, lpm = 0;
  const auto matroids = enumerate_matroids(n, k);
  const std::int64_t count = static_cast<std::int64_t>(matroids.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : checked, violations, lpm)
  for (std::int64_t i = 0; i < count; ++i) {
    const bool mv = is_mv(matroid_polytope(matroids[i]));
    const bool is_lpm = is_lattice_path(matroids[i]);
    ++checked;
    if (is_lpm) ++lpm;
    if (mv != is_lpm) ++violations;
  }
  return json{{"family", "matroids"}, {"n", n},           {"k", k},
              {"matroids", checked},  {"lattice_path", lpm}, {"violations", violations}};
}

json sweep_bips(int n) {
  if (n < 2 || n > 5) throw InputError("sweep bips: need 2 <= n <= 5");
  const auto all = all_permutations(n);
  long intervals = 0, violations = 0, weak_violations = 0;
  const std::int64_t total = static_cast<std::int64_t>(all.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : intervals, violations, weak_violations)
  for (std::int64_t ui = 0; ui < total; ++ui) {
    for (const auto& v : all) {
      if (!bruhat_leq(all[ui], v)) continue;
      ++intervals;
      const bool pp = projection_property(all[ui], v);
      if (is_mv(twisted_bip(all[ui], v)) != pp) ++violations;
      if (weak_leq(all[ui], v) && !pp) ++weak_violations;
    }
  }
  return json{{"family", "bips"},
              {"n", n},
              {"intervals", intervals},
              {"violations", violations},
              {"weak_order_violations", weak_violations}};
}

json sweep_graphs(int n, std::uint64_t seed) {
  if (n < 2 || n > 6) throw InputError("sweep graphs: need 2 <= n <= 6");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  long zono_violations = 0, assoc_violations = 0;
  const std::int64_t total = std::int64_t{1} << pairs.size();
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : zono_violations, assoc_violations)
  for (std::int64_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1) edges.push_back(pairs[b]);
    const SimpleGraph g(n, edges);
    if (is_mv(graphic_zonotope(g)) != components_are_interval_cliques(g)) ++zono_violations;
    if (g.connected() && is_mv(graph_associahedron(g)) != (edges.size() == pairs.size()))
      ++assoc_violations;
  }
  std::mt19937_64 rng(seed);
  long ps_violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Value> a(std::uniform_int_distribution<int>(1, 8)(rng));
    for (auto& x : a) x = std::uniform_int_distribution<int>(0, 4)(rng);
    if (!is_mv(pitman_stanley(a))) ++ps_violations;
  }
  return json{{"family", "graphs"},
              {"n", n},
              {"graphs", total},
              {"zonotope_violations", zono_violations},
              {"associahedron_violations", assoc_violations},
              {"pitman_stanley_violations", ps_violations},
              {"seed", seed}};
}

json sweep_schubert(int n) {
  if (n < 2 || n > 6) throw InputError("sweep schubert: need 2 <= n <= 6");
  long checked = 0, violations = 0;
  for (const auto& w : all_permutations(n)) {
    ++checked;
    const auto nt = newton(schubert(w));
    if (!(nt == schubitope(rothe(w))) || !is_mv(nt)) ++violations;
  }
  return json{{"family", "schubert"}, {"n", n}, {"permutations", checked},
              {"violations", violations}};
}

json sweep_keys(int n, int max_part) {
  if (n < 1 || n > 5 || max_part < 0 || max_part > 4)
    throw InputError("sweep keys: need 1 <= n <= 5 and max-part <= 4");
  long checked = 0, violations = 0;
  std::vector<int> alpha(n, 0);
  while (true) {
    ++checked;
    const auto nt = newton(key_polynomial(alpha));
    bool ok = is_mv(nt);
    const bool zero = std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 0; });
    if (zero)
      ok = ok && nt == GenPermutahedron::point(LatticePoint(n, 0));
    else
      ok = ok && nt == schubitope(skyline(alpha));
    if (!ok) ++violations;
    int pos = n - 1;
    while (pos >= 0 && alpha[pos] == max_part) alpha[pos--] = 0;
    if (pos < 0) break;
    ++alpha[pos];
  }
  return json{{"family", "keys"},  {"n", n}, {"max_part", max_part},
              {"compositions", checked}, {"violations", violations}};
}

// ---- crystal graph export --------------------------------------------------

struct CrystalGraph {
  struct Node {
    GenPermutahedron polytope;
    int depth;
  };
  std::vector<Node> nodes;
  std::map<std::string, int> index;
  std::vector<std::tuple<int, int, int>> edges;  // from, to, i
};

CrystalGraph build_crystal_graph(const GenPermutahedron& seed, int depth) {
  CrystalGraph g;
  g.nodes.push_back({seed, 0});
  g.index[table_id(seed)] = 0;
  std::vector<int> frontier{0};
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<int> next;
    for (int id : frontier) {
      for (int i = 1; i < g.nodes[id].polytope.n(); ++i) {
        const auto raised = raise_op(g.nodes[id].polytope, i);
        const std::string key = table_id(raised);
        auto it = g.index.find(key);
        int to;
        if (it == g.index.end()) {
          to = static_cast<int>(g.nodes.size());
          g.index[key] = to;
          g.nodes.push_back({raised, level + 1});
          next.push_back(to);
        } else {
          to = it->second;
        }
        g.edges.emplace_back(id, to, i);
      }
    }
    frontier = std::move(next);
  }
  return g;
}

// ---- main ------------------------------------------------------------------

int run(int argc, char** argv) {
  CLI::App app{"exact computations with generalized permutahedra and their"
               " tropical Plucker certificates"};
  app.require_subcommand(1);

  // check-mv
  auto* check = app.add_subcommand("check-mv", "certify a polytope, report witness and vertices");
  PolytopeSource check_src;
  check_src.attach(check);
  bool strict = false;
  check->add_flag("--strict", strict, "exit 1 when the polytope is not MV");

  // crystal
  auto* crystal = app.add_subcommand("crystal", "apply raising/lowering operators");
  PolytopeSource crystal_src;
  crystal_src.attach(crystal);
  std::string ops;
  crystal->add_option("--ops", ops, "whitespace-separated operators, e.g. 'e1 e1 f2'");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run a classification sweep over a family");
  std::string family;
  sweep->add_option("family", family, "matroids | bips | graphs | schubert | keys")->required();
  int sweep_n = 4, sweep_k = 2, max_part = 3;
  std::uint64_t seed = 12345;
  sweep->add_option("--n", sweep_n, "ground-set size");
  sweep->add_option("--k", sweep_k, "rank (matroids)");
  sweep->add_option("--max-part", max_part, "largest composition part (keys)");
  sweep->add_option("--seed", seed, "seed for the randomized parts");

  // export-crystal-graph
  auto* graph = app.add_subcommand("export-crystal-graph", "raising orbit from a seed polytope");
  PolytopeSource graph_src;
  graph_src.attach(graph);
  int depth = 2;
  std::string format = "dot", outfile;
  graph->add_option("--depth", depth, "BFS depth (<= 8)");
  graph->add_option("--format", format, "dot | json");
  graph->add_option("-o,--output", outfile, "output file (default stdout)");

  // schubitope
  auto* schub = app.add_subcommand("schubitope", "polytope of a diagram");
  std::string diagram_arg, diagram_file;
  schub->add_option("--diagram", diagram_arg, "inline Diagram JSON");
  schub->add_option("--file", diagram_file, "Diagram JSON file ('-' for stdin)");

  // schubert / key
  auto* schcmd = app.add_subcommand("schubert", "schubert polynomial of a permutation");
  std::string w_arg;
  bool want_newton = false;
  schcmd->add_option("--w", w_arg, "one-line permutation, comma-separated")->required();
  schcmd->add_flag("--newton", want_newton, "also emit the Newton polytope");

  auto* keycmd = app.add_subcommand("key", "key polynomial of a composition");
  std::string alpha_arg;
  bool key_newton = false;
  keycmd->add_option("--alpha", alpha_arg, "composition, comma-separated")->required();
  keycmd->add_flag("--newton", key_newton, "also emit the Newton polytope");

  // bip
  auto* bip = app.add_subcommand("bip", "twisted interval polytope and its constituents");
  std::string u_arg, v_arg;
  bip->add_option("--u", u_arg, "one-line permutation")->required();
  bip->add_option("--v", v_arg, "one-line permutation")->required();

  // catalog
  auto* cat = app.add_subcommand("catalog", "classical constructions");
  std::string zono_arg, assoc_arg, nesto_arg, ps_arg;
  int cat_n = 0;
  cat->add_option("--zonotope", zono_arg, "edge list like '1-2,2-3'");
  cat->add_option("--associahedron", assoc_arg, "edge list like '1-2,2-3'");
  cat->add_option("--nestohedron", nesto_arg, "JSON array of member subsets");
  cat->add_option("--pitman-stanley", ps_arg, "comma-separated weights");
  cat->add_option("--n", cat_n, "ground-set size (edge-list and nestohedron inputs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*check) {
      const auto p = check_src.resolve();
      const json out = mv_report(p);
      std::cout << out.dump(2) << "\n";
      return (strict && !out["is_mv"].get<bool>()) ? kExitNegative : 0;
    }

    if (*crystal) {
      auto p = crystal_src.resolve();
      json steps = json::array();
      std::stringstream ss(ops);
      std::string tok;
      bool killed = false;
      while (ss >> tok && !killed) {
        if (tok.size() < 2 || (tok[0] != 'e' && tok[0] != 'f'))
          throw InputError("operator must look like e1 or f2, got '" + tok + "'");
        const int i = std::stoi(tok.substr(1));
        if (tok[0] == 'e') {
          p = raise_op(p, i);
          steps.push_back({{"op", tok}, {"weight", point_to_json(weight(p))}});
        } else {
          auto down = lower_op(p, i);
          if (!down) {
            steps.push_back({{"op", tok}, {"killed", true}});
            killed = true;
          } else {
            p = *down;
            steps.push_back({{"op", tok}, {"weight", point_to_json(weight(p))}});
          }
        }
      }
      json out{{"steps", steps}};
      if (!killed) out["final"] = polytope_to_json(p);
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*sweep) {
      json out;
      if (family == "matroids")
        out = sweep_matroids(sweep_n, sweep_k);
      else if (family == "bips")
        out = sweep_bips(sweep_n);
      else if (family == "graphs")
        out = sweep_graphs(sweep_n, seed);
      else if (family == "schubert")
        out = sweep_schubert(sweep_n);
      else if (family == "keys")
        out = sweep_keys(sweep_n, max_part);
      else
        throw InputError("unknown family '" + family + "'");
      long violations = 0;
      for (const auto& [key, value] : out.items())
        if (key.ends_with("violations")) violations += value.get<long>();
      out["ok"] = violations == 0;
      std::cout << out.dump(2) << "\n";
      return violations == 0 ? 0 : kExitNegative;
    }

    if (*graph) {
      if (depth < 0 || depth > 8) throw InputError("depth must be within [0, 8]");
      const auto seed_p = graph_src.resolve();
      if (const auto w = mv_witness(seed_p))
        throw InputError("seed polytope is not MV (first failing tuple at S=" +
                         w->s.to_string() + ")");
      const auto g = build_crystal_graph(seed_p, depth);
      std::ostringstream body;
      if (format == "dot") {
        body << "digraph crystal {\n";
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
          body << "  n" << i << " [label=\"" << table_id(g.nodes[i].polytope) << "\"];\n";
        for (const auto& [from, to, i] : g.edges)
          body << "  n" << from << " -> n" << to << " [label=\"e" << i << "\"];\n";
        body << "}\n";
      } else if (format == "json") {
        json nodes = json::array(), edges = json::array();
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
          json nd = polytope_to_json(g.nodes[i].polytope);
          nd["id"] = i;
          nd["depth"] = g.nodes[i].depth;
          nd["weight"] = point_to_json(weight(g.nodes[i].polytope));
          nodes.push_back(nd);
        }
        for (const auto& [from, to, i] : g.edges)
          edges.push_back({{"from", from}, {"to", to}, {"op", "e" + std::to_string(i)}});
        body << json{{"nodes", nodes}, {"edges", edges}}.dump(2) << "\n";
      } else {
        throw InputError("format must be dot or json");
      }
      if (outfile.empty()) {
        std::cout << body.str();
      } else {
        std::ofstream out(outfile);
        if (!out) throw InputError("cannot write " + outfile);
        out << body.str();
      }
      return 0;
    }

    if (*schub) {
      if (diagram_arg.empty() == diagram_file.empty())
        throw InputError("give exactly one of --diagram and --file");
      json doc;
      if (!diagram_arg.empty()) {
        try {
          doc = json::parse(diagram_arg);
        } catch (const json::exception& e) {
          throw InputError(std::string("bad JSON in --diagram: ") + e.what());
        }
      } else {
        doc = read_json_source(diagram_file);
      }
      const Diagram d = diagram_from_json(doc);
      const auto p = schubitope(d);
      json out{{"polytope", polytope_to_json(p)},
               {"is_mv", is_mv(p)},
               {"strongly_separated", strongly_separated(d)}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*schcmd) {
      const auto w = parse_perm(w_arg);
      const auto f = schubert(w);
      json out{{"polynomial", polynomial_to_json(f)}};
      if (want_newton) out["newton"] = polytope_to_json(newton(f));
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*keycmd) {
      const auto alpha = parse_ints(alpha_arg);
      const auto f = key_polynomial(alpha);
      json out{{"polynomial", polynomial_to_json(f)}};
      if (key_newton) out["newton"] = polytope_to_json(newton(f));
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*bip) {
      const auto u = parse_perm(u_arg), v = parse_perm(v_arg);
      if (!bruhat_leq(u, v)) throw InputError("u is not below v in the strong order");
      const auto fm = bip_constituents(u, v);
      const auto p = twisted_bip(u, v);
      json consts = json::array();
      for (const auto& m : fm.constituents()) consts.push_back(matroid_to_json(m));
      json out{{"constituents", consts},
               {"polytope", polytope_to_json(p)},
               {"projection_property", projection_property(u, v)},
               {"is_mv", is_mv(p)}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cat) {
      const int sources =
          !zono_arg.empty() + !assoc_arg.empty() + !nesto_arg.empty() + !ps_arg.empty();
      if (sources != 1)
        throw InputError(
            "give exactly one of --zonotope, --associahedron, --nestohedron, --pitman-stanley");
      auto parse_edges = [&](const std::string& arg) {
        if (cat_n == 0) throw InputError("edge-list input needs --n");
        std::vector<std::pair<int, int>> edges;
        std::stringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          const auto dash = tok.find('-');
          if (dash == std::string::npos) throw InputError("edge must look like 1-2");
          edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
        }
        return SimpleGraph(cat_n, edges);
      };
      GenPermutahedron p = GenPermutahedron::point({0});
      std::string label;
      if (!zono_arg.empty()) {
        p = graphic_zonotope(parse_edges(zono_arg));
        label = "graphic-zonotope";
      } else if (!assoc_arg.empty()) {
        p = graph_associahedron(parse_edges(assoc_arg));
        label = "graph-associahedron";
      } else if (!nesto_arg.empty()) {
        if (cat_n == 0) throw InputError("--nestohedron needs --n");
        json doc;
        try {
          doc = json::parse(nesto_arg);
        } catch (const json::exception& e) {
          throw InputError(std::string("bad JSON in --nestohedron: ") + e.what());
        }
        std::vector<Mask> members;
        for (const auto& m : doc) {
          std::vector<int> els;
          for (const auto& x : m) els.push_back(x.get<int>());
          members.push_back(mask_from_elements(els, cat_n));
        }
        p = nestohedron(BuildingSet(cat_n, members));
        label = "nestohedron";
      } else {
        p = pitman_stanley(parse_values(ps_arg));
        label = "pitman-stanley";
      }
      json out = polytope_to_json(p, label);
      out["is_mv"] = is_mv(p);
      std::cout << out.dump(2) << "\n";
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();
  return run(argc, argv);
}
