#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lafr/lafr.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

/// P<n>, C<n>, K<n>, E<n> (edgeless), or a graph6 string.
lafr::Graph graph_spec(const std::string& s) {
  static const std::regex named("([PCKE])([0-9]+)");
  std::smatch m;
  if (std::regex_match(s, m, named)) {
    const auto n = static_cast<std::size_t>(std::stoul(m[2]));
    switch (m[1].str()[0]) {
      case 'P': return lafr::path_graph(n);
      case 'C': return lafr::cycle_graph(n);
      case 'K': return lafr::complete_graph(n);
      default: return lafr::empty_graph(n);
    }
  }
  return lafr::parse_graph6(s);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lafr::DomainError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<lafr::Vertex, lafr::Vertex> parse_pair(const std::string& s) {
  static const std::regex re(R"(\s*([0-9]+)\s*,\s*([0-9]+)\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw lafr::DomainError("pair must look like a,b: " + s);
  return {std::stoul(m[1]), std::stoul(m[2])};
}

void write_json(const nlohmann::json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw lafr::DomainError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian fractional revival analysis"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Exact revival and periodicity report for one graph");
  std::string g6, file, format = "graph6";
  std::vector<std::string> pairs;
  bool as_json = false, no_oracle = false;
  double tol = lafr::oracle::kVerifyTol;
  auto* g6_opt = analyze->add_option("--g6", g6, "Graph in graph6, or P<n>/C<n>/K<n>/E<n>");
  auto* file_opt = analyze->add_option("--file", file, "Read the graph from a file");
  g6_opt->excludes(file_opt);
  analyze->add_option("--format", format, "File format")->check(CLI::IsMember({"graph6", "edgelist"}));
  analyze->add_option("--pairs", pairs, "Decide exactly these pairs (a,b)");
  analyze->add_flag("--json", as_json, "Emit JSON");
  analyze->add_flag("--no-oracle", no_oracle, "Skip numeric verification");
  analyze->add_option("--tol", tol, "Oracle residual tolerance")->check(CLI::PositiveNumber);

  // periodic
  auto* periodic = app.add_subcommand("periodic", "Periodicity of one vertex");
  std::string pg6;
  lafr::Vertex vertex = 0;
  periodic->add_option("--g6", pg6, "Graph in graph6, or P<n>/C<n>/K<n>/E<n>")->required();
  periodic->add_option("--vertex", vertex, "Vertex")->required();

  // construct
  auto* construct = app.add_subcommand("construct", "Build a graph and print it in graph6");
  std::string name;
  std::vector<std::string> params;
  std::string over;
  unsigned sylvester = 0;
  construct->add_option("name", name,
                        "path|cycle|complete|empty N, double-cone --over G, cartesian G H, join G H, union G H, "
                        "complement G, threshold m1 .. m2k, hadamard --sylvester k")
      ->required();
  construct->add_option("params", params, "Constructor parameters");
  construct->add_option("--over", over, "Base graph of a double cone");
  construct->add_option("--sylvester", sylvester, "Sylvester Hadamard matrix of order 2^k");

  // campaign
  auto* campaign = app.add_subcommand("campaign", "Theorem-verification campaign");
  std::string which;
  unsigned workers = 1;
  std::string json_path;
  std::size_t n_max = 10;
  campaign->add_option("which", which, "trees|prime5|prime7|constructions")
      ->required()
      ->check(CLI::IsMember({"trees", "prime5", "prime7", "constructions"}));
  campaign->add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");
  campaign->add_option("--json", json_path, "Write the JSON result here ('-' for stdout)");
  campaign->add_option("--n-max", n_max, "Largest tree order (trees only)")->check(CLI::Range(2, 14));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) {
      if (g6.empty() && file.empty()) throw CLI::RequiredError("--g6 or --file");
      lafr::Graph g = !g6.empty() ? graph_spec(g6)
                      : format == "edgelist" ? lafr::parse_edge_list(read_file(file))
                                             : lafr::parse_graph6(read_file(file));
      lafr::AnalyzeOptions opt;
      opt.tol = tol;
      opt.oracle = !no_oracle;
      for (const auto& p : pairs) opt.pairs.push_back(parse_pair(p));
      const auto report = lafr::analyze(g, opt);
      if (as_json)
        std::cout << lafr::to_json(report).dump(2) << "\n";
      else
        std::cout << lafr::to_text(report);
      for (const auto& e : report.decisions)
        if (e.oracle_residual && *e.oracle_residual > tol) {
          std::cerr << "oracle residual above tolerance for (" << e.decision.a << "," << e.decision.b << ")\n";
          return kExitCounterexample;
        }
      return kExitOk;
    }

    if (*periodic) {
      const lafr::Graph g = graph_spec(pg6);
      if (vertex >= g.order()) throw lafr::DomainError("vertex out of range");
      const auto p = lafr::is_periodic(g, vertex);
      if (!p.periodic)
        std::cout << "vertex " << vertex << ": not periodic\n";
      else if (!p.big_g)
        std::cout << "vertex " << vertex << ": periodic at every time\n";
      else {
        const auto t = *lafr::minimal_period(p);
        std::cout << "vertex " << vertex << ": periodic  G=" << *p.big_g << "  period=" << t.to_string() << " ("
                  << lafr::decimal12(t.value()) << ")\n";
      }
      return kExitOk;
    }

    if (*construct) {
      auto need = [&](std::size_t k) {
        if (params.size() != k) throw lafr::DomainError(name + " takes " + std::to_string(k) + " parameter(s)");
      };
      lafr::Graph g;
      if (name == "path" || name == "cycle" || name == "complete" || name == "empty") {
        need(1);
        g = lafr::standard_graph(name, std::stoul(params[0]));
      } else if (name == "double-cone") {
        if (over.empty() && params.size() == 1) over = params[0];
        if (over.empty()) throw lafr::DomainError("double-cone needs --over G");
        g = lafr::double_cone(graph_spec(over));
      } else if (name == "cartesian" || name == "join" || name == "union") {
        need(2);
        const auto x = graph_spec(params[0]), y = graph_spec(params[1]);
        g = name == "cartesian" ? lafr::cartesian_product(x, y)
            : name == "join"    ? lafr::join(x, y)
                                : lafr::disjoint_union(x, y);
      } else if (name == "complement") {
        need(1);
        g = lafr::complement(graph_spec(params[0]));
      } else if (name == "threshold") {
        std::vector<std::size_t> m;
        for (const auto& p : params) m.push_back(std::stoul(p));
        g = lafr::threshold_graph(m);
      } else if (name == "hadamard") {
        if (sylvester == 0 && params.size() == 1) sylvester = static_cast<unsigned>(std::stoul(params[0]));
        g = lafr::hadamard_graph(lafr::sylvester_hadamard(sylvester));
      } else {
        throw lafr::DomainError("unknown constructor: " + name);
      }
      std::cout << lafr::to_graph6(g) << "\n";
      return kExitOk;
    }

    if (*campaign) {
      if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
      lafr::CampaignResult r = which == "trees"    ? lafr::campaign_trees(n_max, workers)
                               : which == "prime5" ? lafr::campaign_prime(5, workers)
                               : which == "prime7" ? lafr::campaign_prime(7, workers)
                                                   : lafr::campaign_constructions(workers);
      std::cout << r.name << ": corpus " << r.corpus_size << ", positives " << r.positives << ", counterexamples "
                << r.counterexamples.size() << ", " << lafr::decimal12(r.wall_seconds) << " s\n";
      for (const auto& c : r.checks) std::cout << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.name << "  " << c.detail << "\n";
      for (const auto& c : r.counterexamples) std::cout << "  counterexample " << c.graph6 << ": " << c.reason << "\n";
      if (!json_path.empty()) write_json(lafr::to_json(r), json_path);
      return r.ok() ? kExitOk : kExitCounterexample;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lafr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lafr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid number\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: number out of range\n";
    return kExitUsage;
  }
  return kExitUsage;
}
