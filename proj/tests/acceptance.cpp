// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// `--only N` runs a single criterion, `--quick` shortens the scaling series.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyperacyclic/generators.hpp"
#include "hyperacyclic/join_tree.hpp"
#include "hyperacyclic/oracle.hpp"
#include "hyperacyclic/orderings.hpp"
#include "hyperacyclic/recognition.hpp"
#include "hyperacyclic/sperner.hpp"
#include "hyperacyclic/subset_graph.hpp"
#include "hyperacyclic/union_join.hpp"
#include "support.hpp"

using namespace hyperacyclic;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const SubsetGraphFn kBaseline = [](const Hypergraph& s) { return subset_graph_baseline(s); };

Outcome subset_graphs_vs_oracle() {
  const auto t0 = Clock::now();
  std::size_t instances = 0, mismatches = 0;
  std::string first;
  auto expect = [&](bool ok, const char* what, GenClass c, std::uint64_t seed) {
    if (ok) return;
    if (mismatches++ == 0) first = fmt("%s on %s seed %llu", what, std::string(to_string(c)).c_str(),
                                       static_cast<unsigned long long>(seed));
  };
  for (GenClass c : {GenClass::beta, GenClass::gamma, GenClass::interval}) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      const auto h = testsupport::random_instance(c, seed, 40);
      const auto naive = oracle::subset_graph_naive(h);
      ++instances;
      expect(subset_graph_baseline(h) == naive, "baseline", c, seed);
      expect(subset_graph_beta(h) == naive, "beta", c, seed);
      if (c == GenClass::gamma) expect(subset_graph_gamma(h) == naive, "gamma", c, seed);
      if (c == GenClass::interval) expect(subset_graph_interval(h) == naive, "interval", c, seed);
    }
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = mismatches == 0 && secs < 60.0;
  o.detail = fmt("%zu instances, %zu mismatches, %.1f s", instances, mismatches, secs);
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

struct UnionJoinRun {
  Outcome equivalence;
  Outcome emissions;
};

UnionJoinRun union_join_vs_oracle() {
  const auto t0 = Clock::now();
  std::size_t instances = 0, mismatches = 0, worst = 0, over = 0;
  std::string first;
  auto expect = [&](bool ok, const char* what, std::uint64_t seed) {
    if (ok) return;
    if (mismatches++ == 0) first = fmt("%s seed %llu", what, static_cast<unsigned long long>(seed));
  };
  auto generic = [&](const Hypergraph& h) {
    const auto res = union_join_via_subset_stats(h, kBaseline);
    worst = std::max(worst, res.max_multiplicity);
    if (res.max_multiplicity > 2) ++over;
    return res.graph;
  };
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto h = testsupport::random_instance(GenClass::alpha, seed, 25);
    ++instances;
    expect(generic(h) == oracle::union_join_oracle(h), "generic on alpha", seed);
  }
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    const auto g = testsupport::random_instance(GenClass::gamma, seed, 25);
    const auto want_g = oracle::union_join_oracle(g);
    ++instances;
    expect(generic(g) == want_g, "generic on gamma", seed);
    expect(union_join_gamma(g) == want_g, "gamma method", seed);
    const auto i = testsupport::random_instance(GenClass::interval, seed, 25);
    const auto want_i = oracle::union_join_oracle(i);
    ++instances;
    expect(generic(i) == want_i, "generic on interval", seed);
    expect(union_join_interval(i) == want_i, "interval method", seed);
  }
  const double secs = seconds_since(t0);
  UnionJoinRun r;
  r.equivalence.pass = mismatches == 0 && secs < 120.0;
  r.equivalence.detail = fmt("%zu instances, %zu mismatches, %.1f s", instances, mismatches, secs);
  if (!first.empty()) r.equivalence.detail += "; first: " + first;
  r.emissions.pass = over == 0;
  r.emissions.detail = fmt("largest per-pair emission count %zu over %zu instances", worst, instances);
  return r;
}

Outcome sample_bachman() {
  const auto h = testsupport::sample();
  const auto b = build_bachman(h);
  auto label = [&](std::uint32_t x) {
    std::set<std::string> s;
    for (VertexId v : b.labels[x]) s.insert(h.vertex_name(v));
    return s;
  };
  std::map<std::set<std::string>, std::uint32_t> node;
  for (std::uint32_t x = 0; x < b.node_count(); ++x) node[label(x)] = x;
  Outcome o;
  const std::vector<std::set<std::string>> want_labels{{}, {"b"}, {"d"}, {"e", "f"}, {"a"}, {"c"}};
  bool labels_ok = b.node_count() == 6 && node.size() == 6;
  for (const auto& l : want_labels) labels_ok = labels_ok && node.count(l);
  if (!labels_ok) {
    o.pass = false;
    o.detail = fmt("%zu nodes, labels differ", b.node_count());
    return o;
  }
  const auto x0 = node[{}], xb = node[{"b"}], xd = node[{"d"}], xef = node[{"e", "f"}], xa = node[{"a"}],
             xc = node[{"c"}];
  const std::set<Edge> want_edges{{x0, xb}, {x0, xa}, {xd, xa}, {xb, xc}, {xef, xc}};
  const bool edges_ok = std::set<Edge>(b.edges.begin(), b.edges.end()) == want_edges && b.edges.size() == 5;
  const bool phi_ok = b.phi == std::vector<std::uint32_t>{x0, xd, xb, xef};
  o.pass = edges_ok && phi_ok;
  o.detail = fmt("6 nodes, %zu edges, edges %s, phi %s", b.edges.size(), edges_ok ? "match" : "differ",
                 phi_ok ? "matches" : "differs");
  return o;
}

Outcome star_complete() {
  Outcome o;
  for (std::size_t m : {3, 10, 50}) {
    const auto g = union_join_via_subset(gen_star(m), kBaseline);
    const bool ok = g.edge_count() == m * (m - 1) / 2;
    o.pass = o.pass && ok;
    o.detail += fmt("%sm=%zu: %zu edges", o.detail.empty() ? "" : ", ", m, g.edge_count());
  }
  return o;
}

Outcome gamma_free_iff_beta() {
  std::size_t instances = 0, mismatches = 0;
  auto check = [&](const Hypergraph& h) {
    ++instances;
    const bool free = is_gamma_free(h, doubly_lexical_order(h));
    if (free != oracle::beta_acyclic_naive(h)) ++mismatches;
  };
  testsupport::for_each_small(4, 4, check);
  const std::size_t exhaustive = instances;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GenClass kinds[] = {GenClass::alpha, GenClass::general, GenClass::beta, GenClass::gamma};
    check(testsupport::random_instance(kinds[seed % 4], seed, 12));
  }
  Outcome o;
  o.pass = mismatches == 0;
  o.detail = fmt("%zu exhaustive + %zu random instances, %zu mismatches", exhaustive, instances - exhaustive,
                 mismatches);
  return o;
}

Outcome separators_beta() {
  std::size_t failures = 0, naive_checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto h = testsupport::random_instance(GenClass::beta, seed, 40);
    const auto sep = separator_hypergraph(h);
    if (sep.separators.empty()) continue;
    const auto s = sep.as_hypergraph(h);
    bool ok = is_beta_acyclic(s);
    if (s.edge_count() <= 14) {
      ++naive_checked;
      ok = ok && oracle::beta_acyclic_naive(s);
    }
    if (!ok) ++failures;
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = fmt("200 instances (%zu also by sub-family enumeration), %zu failures", naive_checked, failures);
  return o;
}

Outcome sperner_checks() {
  std::size_t mismatches = 0, reduction_mismatches = 0, with_pair = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto h = testsupport::random_instance(GenClass::alpha, seed, 40);
    if (sperner_acyclic(h) != (oracle::subset_graph_naive(h).edge_count() > 0)) ++mismatches;
  }
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(seed);
    SetFamily f;
    const auto universe = 1 + rng.below(10);
    const auto sets = 1 + rng.below(8);
    for (std::uint64_t i = 0; i < sets; ++i) {
      auto& s = f.sets.emplace_back();
      for (std::uint64_t x = 0; x < universe; ++x) {
        if (rng.chance(0.35)) s.push_back("s" + std::to_string(x));
      }
      if (s.empty()) s.push_back("s" + std::to_string(rng.below(universe)));
    }
    bool pair = false;
    for (std::size_t i = 0; i < f.sets.size() && !pair; ++i) {
      for (std::size_t j = 0; j < f.sets.size() && !pair; ++j) {
        if (i == j) continue;
        const auto& a = f.sets[i];
        const auto& b = f.sets[j];
        pair = std::all_of(a.begin(), a.end(),
                           [&](const std::string& x) { return std::find(b.begin(), b.end(), x) != b.end(); });
      }
    }
    with_pair += pair;
    const auto h = reduce_family_to_acyclic(f);
    const bool tree = union_join_via_subset(h, kBaseline).edge_count() == h.edge_count() - 1;
    if (tree == pair) ++reduction_mismatches;
  }
  Outcome o;
  o.pass = mismatches == 0 && reduction_mismatches == 0;
  o.detail = fmt("500 alpha instances, %zu mismatches; 500 families (%zu with a subset pair), %zu mismatches",
                 mismatches, with_pair, reduction_mismatches);
  return o;
}

// Scaling. Each algorithm runs on a series of generated inputs whose pin
// count doubles; the time of one size is the median of 5 measurements, each
// averaged over enough repetitions to last at least 20 ms.

struct Workload {
  const char* name;
  GenClass gen;
  double density;
  double limit;
  std::function<std::size_t(const Hypergraph&)> run;  // returns |G| or 0
};

double measure(const Workload& w, const Hypergraph& h) {
  std::vector<double> samples;
  for (int r = 0; r < 5; ++r) {
    int reps = 0;
    const auto t0 = Clock::now();
    double secs = 0;
    do {
      w.run(h);
      ++reps;
      secs = seconds_since(t0);
    } while (secs < 0.02);
    samples.push_back(secs / reps);
  }
  std::nth_element(samples.begin(), samples.begin() + 2, samples.end());
  return samples[2];
}

/// Hypergraph with n = m chosen so that the pin count is close to `target`.
Hypergraph sized(GenClass gen, double density, std::size_t target, std::uint64_t seed) {
  GenSpec spec{gen, 1000, 1000, seed, density};
  const auto probe = generate(spec);
  const double per = static_cast<double>(probe.pin_count()) / 1000.0;
  spec.n = spec.m = std::max<std::size_t>(1, static_cast<std::size_t>(target / per));
  if (gen == GenClass::beta) return gen_beta_sample(spec, 2).graph;
  return generate(spec);
}

/// One read of a per-vertex value per pin, in hyperedge order. Linear work
/// with the same scattered access as the algorithms; used as a yardstick
/// for what the memory hierarchy alone does to the ratios.
std::size_t gather_control(const Hypergraph& h) {
  static std::vector<std::uint32_t> value;
  value.assign(h.vertex_count(), 1);
  std::size_t sum = 0;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    for (VertexId v : h.edge(e)) sum += value[v]++;
  }
  return sum == 0 ? 1 : 0;
}

struct Series {
  double worst = 0;   // largest ratio of consecutive sizes, scaled to an exact doubling
  double fitted = 0;  // least-squares slope of log2 time over log2 N, as a ratio
};

Series run_series(const Workload& w, int steps, std::size_t base) {
  std::vector<double> times, pins;
  std::string line = fmt("    %-22s", w.name);
  for (int i = 0; i < steps; ++i) {
    const auto h = sized(w.gen, w.density, base << i, 1000 + i);
    times.push_back(measure(w, h));
    pins.push_back(static_cast<double>(h.pin_count()));
    const std::size_t out = w.run(h);
    line += fmt(" N=%.0f:%.1fms|G|=%zu", pins.back(), times.back() * 1e3, out);
  }
  std::fprintf(stderr, "%s\n", line.c_str());
  Series s;
  for (int i = 1; i < steps; ++i) {
    s.worst = std::max(s.worst, times[i] / times[i - 1] * 2.0 * pins[i - 1] / pins[i]);
  }
  double mx = 0, my = 0;
  for (int i = 0; i < steps; ++i) {
    mx += std::log2(pins[i]) / steps;
    my += std::log2(times[i]) / steps;
  }
  double sxy = 0, sxx = 0;
  for (int i = 0; i < steps; ++i) {
    sxy += (std::log2(pins[i]) - mx) * (std::log2(times[i]) - my);
    sxx += (std::log2(pins[i]) - mx) * (std::log2(pins[i]) - mx);
  }
  s.fitted = std::exp2(sxy / sxx);
  return s;
}

Outcome scaling(bool quick) {
  const std::vector<Workload> loads{
      {"union_join_gamma", GenClass::gamma, 0.1, 2.6, [](const Hypergraph& h) { return union_join_gamma(h).edge_count(); }},
      {"subset_graph_gamma", GenClass::gamma, 0.1, 2.6,
       [](const Hypergraph& h) { return subset_graph_gamma(h).edge_count(); }},
      {"union_join_interval", GenClass::interval, 0.3, 2.6,
       [](const Hypergraph& h) { return union_join_interval(h).edge_count(); }},
      {"subset_graph_interval", GenClass::interval, 0.3, 2.6,
       [](const Hypergraph& h) { return subset_graph_interval(h).edge_count(); }},
      {"sperner_acyclic", GenClass::alpha, 0.3, 2.6,
       [](const Hypergraph& h) { return static_cast<std::size_t>(sperner_acyclic(h)); }},
      {"subset_graph_beta", GenClass::beta, 0.1, 3.0,
       [](const Hypergraph& h) { return subset_graph_beta(h).edge_count(); }},
  };
  const std::size_t base = 15625;  // 2e6 / 2^7
  const int steps = quick ? 4 : 8;
  Outcome o;
  for (const auto& w : loads) {
    const Series s = run_series(w, steps, base);
    const bool ok = s.worst <= w.limit;
    o.pass = o.pass && ok;
    o.detail += fmt("\n    %-22s worst doubling %.2f (limit %.1f) %s, fitted %.2f per doubling", w.name, s.worst,
                    w.limit, ok ? "ok" : "EXCEEDED", s.fitted);
  }
  const Workload control{"control (linear gather)", GenClass::gamma, 0.1, 0, gather_control};
  const Series c = run_series(control, steps, base);
  o.detail += fmt("\n    %-22s worst doubling %.2f, fitted %.2f per doubling (not gated)", control.name, c.worst,
                  c.fitted);
  return o;
}

Outcome bachman_structure() {
  std::size_t failures = 0;
  std::string first;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto h = testsupport::random_instance(GenClass::gamma, seed, 60);
    const auto report = oracle::check_bachman(h, build_bachman(h));
    if (!report.ok() && failures++ == 0) first = report.failure;
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = fmt("500 gamma instances, %zu failures", failures);
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--quick") == 0) {
      quick = true;
    }
  }
  bool all = true;
  auto report = [&](int id, const char* title, const Outcome& o) {
    all = all && o.pass;
    std::printf("criterion %2d %s: %s (%s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str());
    std::fflush(stdout);
  };
  auto want = [&](int id) { return only == 0 || only == id; };

  if (want(1)) report(1, "subset graphs equal the oracle", subset_graphs_vs_oracle());
  UnionJoinRun uj;
  if (want(2) || want(5)) uj = union_join_vs_oracle();
  if (want(2)) report(2, "union join equals the oracle", uj.equivalence);
  if (want(3)) report(3, "sample Bachman diagram", sample_bachman());
  if (want(4)) report(4, "star family gives a complete graph", star_complete());
  if (want(5)) report(5, "each pair emitted at most twice", uj.emissions);
  if (want(6)) report(6, "Gamma-free order iff every sub-family acyclic", gamma_free_iff_beta());
  if (want(7)) report(7, "separator hypergraph of beta input is beta", separators_beta());
  if (want(8)) report(8, "Sperner test and reduction property", sperner_checks());
  if (want(9)) report(9, "scaling per doubling", scaling(quick));
  if (want(10)) report(10, "Bachman structure on gamma input", bachman_structure());
  return all ? 0 : 1;
}
