// hyperacyclic: command-line front end.
//
// Exit codes: 0 ok, 1 internal error, 2 parse or usage error,
// 3 class mismatch, 4 input not acyclic.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hyperacyclic/errors.hpp"
#include "hyperacyclic/generators.hpp"
#include "hyperacyclic/io.hpp"
#include "hyperacyclic/oracle.hpp"
#include "hyperacyclic/recognition.hpp"
#include "hyperacyclic/sperner.hpp"
#include "hyperacyclic/subset_graph.hpp"
#include "hyperacyclic/union_join.hpp"

using namespace hyperacyclic;

namespace {

enum Exit { kOk = 0, kInternal = 1, kParse = 2, kMismatch = 3, kNotAcyclic = 4 };

const char* flag(bool b) { return b ? "true" : "false"; }

DirectedGraph run_subset(const Hypergraph& h, const std::string& algo) {
  if (algo == "naive") return oracle::subset_graph_naive(h);
  if (algo == "baseline") return subset_graph_baseline(h);
  if (algo == "beta") return subset_graph_beta(h);
  if (algo == "gamma") return subset_graph_gamma(h);
  if (algo == "interval") return subset_graph_interval(h);
  // auto
  if (is_interval(h)) return subset_graph_interval(h);
  if (is_gamma_acyclic(h)) return subset_graph_gamma(h);
  if (is_beta_acyclic(h)) return subset_graph_beta(h);
  return subset_graph_baseline(h);
}

SubsetGraphFn subset_fn(const std::string& name) {
  if (name == "naive") return [](const Hypergraph& s) { return oracle::subset_graph_naive(s); };
  if (name == "beta") return [](const Hypergraph& s) { return subset_graph_beta(s); };
  return [](const Hypergraph& s) { return subset_graph_baseline(s); };
}

UnionJoinResult run_union_join(const Hypergraph& h, const std::string& algo, const std::string& subset) {
  if (!is_alpha_acyclic(h)) throw NotAcyclic("union join: hypergraph is not acyclic");
  std::string pick = algo;
  if (pick == "auto") pick = is_interval(h) ? "interval" : is_gamma_acyclic(h) ? "gamma" : "generic";
  if (pick == "interval") return {union_join_interval(h), 0, 0};
  if (pick == "gamma") return {union_join_gamma(h), 0, 0};
  return union_join_via_subset_stats(h, subset_fn(subset));
}

// bench ------------------------------------------------------------------

struct Cell {
  GenClass kind;
  std::string algo;
  GenSpec spec;
};

struct CellResult {
  std::size_t n = 0, m = 0, pins = 0, out = 0;
  double millis = 0;
  std::string error;
};

std::size_t run_algo(const Hypergraph& h, const std::string& algo) {
  if (algo == "sperner") return sperner_acyclic(h) ? 1 : 0;
  if (algo.rfind("union_join_", 0) == 0) {
    const std::string rest = algo.substr(11);
    if (rest == "gamma" || rest == "interval") return run_union_join(h, rest, "baseline").graph.edge_count();
    return run_union_join(h, "generic", rest).graph.edge_count();
  }
  if (algo.rfind("subset_graph_", 0) == 0) return run_subset(h, algo.substr(13)).edge_count();
  throw InvalidInput("unknown bench algorithm '" + algo + "'");
}

CellResult run_cell(const Cell& c, int repeat) {
  CellResult r;
  try {
    const Hypergraph h = generate(c.spec);
    r.n = h.vertex_count();
    r.m = h.edge_count();
    r.pins = h.pin_count();
    std::vector<double> samples;
    for (int i = 0; i < repeat; ++i) {
      const auto t0 = std::chrono::steady_clock::now();
      r.out = run_algo(h, c.algo);
      samples.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
    r.millis = samples[samples.size() / 2];
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

unsigned bench_threads() {
  unsigned t = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HYPERACYCLIC_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) t = std::min<unsigned>(t, static_cast<unsigned>(cap));
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acyclic hypergraphs: recognition, subset graphs and union join graphs"};
  app.require_subcommand(1);
  app.footer(
      "Input: one hyperedge per line, vertex names separated by whitespace, '#' starts a comment.\n"
      "Hyperedges are numbered by line, from 1.\n"
      "Exit codes: 0 ok, 1 internal, 2 parse, 3 class mismatch, 4 not acyclic.");

  std::string path;
  std::string algo = "auto";
  std::string subset = "baseline";
  std::string format = "text";
  bool stats = false;

  auto* classify_cmd = app.add_subcommand("classify", "Print size and class membership");
  classify_cmd->add_option("file", path, "Hypergraph file")->required();

  auto* subset_cmd = app.add_subcommand("subset-graph", "Edges i -> j with hyperedge i contained in hyperedge j");
  subset_cmd->add_option("file", path, "Hypergraph file")->required();
  subset_cmd->add_option("--algo", algo, "auto picks interval, gamma, beta, baseline in that order")
      ->check(CLI::IsMember({"auto", "naive", "baseline", "beta", "gamma", "interval"}));
  subset_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "dot"}));

  auto* union_cmd = app.add_subcommand("union-join", "Edges i j that lie in some join tree");
  union_cmd->add_option("file", path, "Hypergraph file")->required();
  union_cmd->add_option("--algo", algo, "auto picks interval, gamma, generic in that order")
      ->check(CLI::IsMember({"auto", "generic", "gamma", "interval"}));
  union_cmd->add_option("--subset", subset, "Subset-graph routine used by the generic method")
      ->check(CLI::IsMember({"naive", "baseline", "beta"}));
  union_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "dot"}));
  union_cmd->add_flag("--stats", stats, "Print emission counts of the generic method to stderr");

  auto* sperner_cmd = app.add_subcommand("sperner", "Print whether some hyperedge is contained in another");
  sperner_cmd->add_option("file", path, "Hypergraph file")->required();

  auto* bachman_cmd = app.add_subcommand("bachman", "Simplified Bachman diagram of a gamma-acyclic hypergraph");
  bachman_cmd->add_option("file", path, "Hypergraph file")->required();
  bachman_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "dot"}));

  std::string gen_class = "alpha";
  GenSpec spec;
  auto* gen_cmd = app.add_subcommand("gen", "Write a random hypergraph of the given class");
  gen_cmd->add_option("--class", gen_class)->check(CLI::IsMember({"alpha", "beta", "gamma", "interval", "star", "general"}));
  gen_cmd->add_option("--n", spec.n, "Vertices");
  gen_cmd->add_option("--m", spec.m, "Hyperedges");
  gen_cmd->add_option("--seed", spec.seed);
  gen_cmd->add_option("--density", spec.density)->check(CLI::Range(0.0, 1.0));

  std::vector<std::string> bench_classes{"gamma", "interval"};
  std::vector<std::string> bench_algos{"subset_graph_auto", "union_join_generic"};
  std::size_t base = 1000;
  int steps = 5;
  int repeat = 5;
  double bench_density = 0.1;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Size-doubling series, CSV on stdout");
  bench_cmd->add_option("--class", bench_classes, "Generator classes")->delimiter(',');
  bench_cmd->add_option("--algo", bench_algos,
                        "subset_graph_{naive,baseline,beta,gamma,interval,auto}, "
                        "union_join_{generic,baseline,beta,gamma,interval}, sperner")
      ->delimiter(',');
  bench_cmd->add_option("--base", base, "n = m at the first step");
  bench_cmd->add_option("--steps", steps)->check(CLI::Range(1, 30));
  bench_cmd->add_option("--repeat", repeat, "Runs per cell; the median is reported")->check(CLI::Range(1, 1000));
  bench_cmd->add_option("--density", bench_density)->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--seed", bench_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*gen_cmd) {
      spec.kind = parse_gen_class(gen_class);
      write_hypergraph(std::cout, generate(spec));
      return kOk;
    }
    if (*bench_cmd) {
      std::vector<Cell> cells;
      for (const auto& c : bench_classes) {
        const GenClass kind = parse_gen_class(c);
        for (const auto& a : bench_algos) {
          for (int i = 0; i < steps; ++i) {
            // n and m grow by sqrt(2) so that N roughly doubles per step
            const auto size = static_cast<std::size_t>(static_cast<double>(base) * std::pow(2.0, i / 2.0));
            cells.push_back({kind, a, GenSpec{kind, size, size, bench_seed + i, bench_density}});
          }
        }
      }
      std::vector<CellResult> results(cells.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i; (i = next++) < cells.size();) results[i] = run_cell(cells[i], repeat);
      };
      std::vector<std::thread> pool;
      const unsigned threads = std::min<std::size_t>(bench_threads(), cells.size());
      for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();

      std::cout << "class,algo,n,m,N,G_edges,millis\n";
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& r = results[i];
        if (!r.error.empty()) {
          std::cerr << to_string(cells[i].kind) << ' ' << cells[i].algo << ": " << r.error << '\n';
          continue;
        }
        char millis[32];
        std::snprintf(millis, sizeof millis, "%.3f", r.millis);
        std::cout << to_string(cells[i].kind) << ',' << cells[i].algo << ',' << r.n << ',' << r.m << ',' << r.pins
                  << ',' << r.out << ',' << millis << '\n';
      }
      return kOk;
    }

    const Hypergraph h = read_hypergraph_file(path);
    const bool dot = format == "dot";

    if (*classify_cmd) {
      const auto c = classify(h);
      std::cout << "n " << h.vertex_count() << "\nm " << h.edge_count() << "\nN " << h.pin_count() << '\n'
                << "alpha " << flag(c.alpha) << "\nhypertree " << flag(c.hypertree) << "\nbeta " << flag(c.beta)
                << "\ngamma " << flag(c.gamma) << "\ninterval " << flag(c.interval) << '\n';
      if (!c.alpha) std::cout << "not acyclic\n";
    } else if (*subset_cmd) {
      const auto g = run_subset(h, algo);
      dot ? write_dot(std::cout, g, h) : write_edge_list(std::cout, g);
    } else if (*union_cmd) {
      const auto r = run_union_join(h, algo, subset);
      dot ? write_dot(std::cout, r.graph, h) : write_edge_list(std::cout, r.graph);
      if (stats) {
        std::cerr << "edges " << r.graph.edge_count() << "\nraw_emissions " << r.raw_emissions
                  << "\nmax_multiplicity " << r.max_multiplicity << '\n';
      }
    } else if (*sperner_cmd) {
      std::cout << (sperner_acyclic(h) ? "true" : "false") << '\n';
    } else if (*bachman_cmd) {
      const auto b = build_bachman(h);
      dot ? write_bachman_dot(std::cout, b, h) : write_bachman(std::cout, b, h);
    }
    return kOk;
  } catch (const NotAcyclic& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotAcyclic;
  } catch (const ClassMismatch& e) {
    std::cerr << "error: class mismatch (" << e.recognizer() << " recognizer failed): " << e.what() << '\n';
    return kMismatch;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
