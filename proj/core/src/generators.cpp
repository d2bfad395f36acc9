#include "hyperacyclic/generators.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "hyperacyclic/errors.hpp"
#include "hyperacyclic/recognition.hpp"

namespace hyperacyclic {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_spec(const GenSpec& spec) {
  if (spec.n == 0 || spec.m == 0) throw InvalidInput("generator: n and m must be positive");
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) throw InvalidInput("generator: density must lie in [0, 1]");
}

std::vector<std::uint32_t> permutation(std::size_t size, Rng& rng) {
  std::vector<std::uint32_t> p(size);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng.engine());
  return p;
}

/// members[x] lists the vertices of slot x. Vertex and slot ids are both
/// renamed by random permutations.
Hypergraph shuffled(std::size_t n, const std::vector<std::vector<VertexId>>& members, Rng& rng) {
  const auto vperm = permutation(n, rng);
  const auto eperm = permutation(members.size(), rng);
  std::vector<std::vector<VertexId>> edges(members.size());
  for (std::size_t x = 0; x < members.size(); ++x) {
    auto& e = edges[eperm[x]];
    e.reserve(members[x].size());
    for (VertexId v : members[x]) e.push_back(vperm[v]);
  }
  return Hypergraph(n, std::move(edges));
}

std::size_t geometric(Rng& rng, double p, std::size_t cap) {
  std::size_t k = 0;
  while (k < cap && rng.chance(p)) ++k;
  return k;
}

}  // namespace

std::string_view to_string(GenClass c) {
  switch (c) {
    case GenClass::alpha: return "alpha";
    case GenClass::beta: return "beta";
    case GenClass::gamma: return "gamma";
    case GenClass::interval: return "interval";
    case GenClass::star: return "star";
    case GenClass::general: return "general";
  }
  return "?";
}

GenClass parse_gen_class(std::string_view name) {
  for (GenClass c : {GenClass::alpha, GenClass::beta, GenClass::gamma, GenClass::interval, GenClass::star,
                     GenClass::general}) {
    if (to_string(c) == name) return c;
  }
  throw InvalidInput("unknown generator class '" + std::string(name) + "'");
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

Rng Rng::substream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
}

bool Rng::chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p; }

Hypergraph gen_alpha(const GenSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  const std::size_t n = spec.n, m = spec.m;

  std::vector<std::vector<std::uint32_t>> adj(m);
  for (std::uint32_t x = 1; x < m; ++x) {
    const auto p = static_cast<std::uint32_t>(rng.below(x));
    adj[x].push_back(p);
    adj[p].push_back(x);
  }

  std::vector<std::vector<VertexId>> members(m);
  std::vector<std::uint32_t> dist(m, kNone);
  std::vector<std::uint32_t> touched;
  for (VertexId v = 0; v < n; ++v) {
    const auto center = static_cast<std::uint32_t>(v < m ? v : rng.below(m));
    const std::size_t radius = geometric(rng, spec.density, m);
    std::deque<std::uint32_t> queue{center};
    dist[center] = 0;
    touched.assign(1, center);
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      members[x].push_back(v);
      if (dist[x] == radius) continue;
      for (auto y : adj[x]) {
        if (dist[y] == kNone) {
          dist[y] = dist[x] + 1;
          touched.push_back(y);
          queue.push_back(y);
        }
      }
    }
    for (auto x : touched) dist[x] = kNone;
  }

  // Fewer vertices than hyperedges: grow a neighbour's vertex into each
  // empty node, which keeps every vertex's nodes connected.
  std::deque<std::uint32_t> queue;
  std::vector<bool> done(m, false);
  for (std::uint32_t x = 0; x < m; ++x) {
    if (!members[x].empty()) {
      done[x] = true;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto y : adj[x]) {
      if (done[y]) continue;
      done[y] = true;
      members[y].push_back(members[x][rng.below(members[x].size())]);
      queue.push_back(y);
    }
  }
  return shuffled(n, members, rng);
}

Hypergraph gen_interval(const GenSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  const std::size_t n = spec.n, m = spec.m;

  std::vector<std::uint32_t> first(n), last(n);
  std::vector<std::vector<VertexId>> ends_at(m);
  std::vector<std::uint32_t> cover(m + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    first[v] = static_cast<std::uint32_t>(v < m ? v : rng.below(m));
    last[v] = static_cast<std::uint32_t>(first[v] + geometric(rng, spec.density, m - 1 - first[v]));
    ends_at[last[v]].push_back(v);
    ++cover[first[v]];
    --cover[last[v] + 1];
  }
  // Position 0 always holds vertex 0; an empty position takes over a vertex
  // that ends just before it.
  std::uint32_t running = 0;
  for (std::uint32_t i = 0; i < m; ++i) {
    running += cover[i];
    if (running > 0) continue;
    auto& prev = ends_at[i - 1];
    const auto pick = rng.below(prev.size());
    const VertexId w = prev[pick];
    prev.erase(prev.begin() + static_cast<std::ptrdiff_t>(pick));
    last[w] = i;
    ends_at[i].push_back(w);
    ++running;
    --cover[i + 1];
  }

  std::vector<std::vector<VertexId>> members(m);
  for (VertexId v = 0; v < n; ++v) {
    for (std::uint32_t i = first[v]; i <= last[v]; ++i) members[i].push_back(v);
  }
  return shuffled(n, members, rng);
}

Hypergraph gen_gamma(const GenSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  const std::size_t n = spec.n, m = spec.m;

  std::vector<std::vector<VertexId>> members(1, {0});  // per hyperedge
  std::vector<std::vector<EdgeId>> incident(1, {0});   // per vertex
  members.reserve(m);
  incident.reserve(n);
  while (incident.size() < n || members.size() < m) {
    const std::size_t need_v = n - incident.size(), need_e = m - members.size();
    const bool add_vertex = rng.below(need_v + need_e) < need_v;
    const bool twin = rng.chance(spec.density);
    if (add_vertex) {
      const auto v = static_cast<VertexId>(incident.size());
      std::vector<EdgeId> edges;
      if (twin) {
        edges = incident[rng.below(incident.size())];
      } else {
        edges.push_back(static_cast<EdgeId>(rng.below(members.size())));
      }
      for (EdgeId e : edges) members[e].push_back(v);
      incident.push_back(std::move(edges));
    } else {
      const auto e = static_cast<EdgeId>(members.size());
      std::vector<VertexId> verts;
      if (twin) {
        verts = members[rng.below(members.size())];
      } else {
        verts.push_back(static_cast<VertexId>(rng.below(incident.size())));
      }
      for (VertexId v : verts) incident[v].push_back(e);
      members.push_back(std::move(verts));
    }
  }
  return shuffled(n, members, rng);
}

BetaSample gen_beta_sample(const GenSpec& spec, unsigned max_attempts) {
  check_spec(spec);
  BetaSample out;
  for (unsigned a = 0; a < max_attempts; ++a) {
    GenSpec attempt = spec;
    attempt.seed = Rng::substream(spec.seed, a).next();
    Hypergraph g = gen_alpha(attempt);
    out.attempts = a + 1;
    if (is_beta_acyclic(g)) {
      out.graph = std::move(g);
      return out;
    }
  }
  out.fell_back = true;
  out.graph = gen_gamma(spec);
  return out;
}

Hypergraph gen_beta(const GenSpec& spec) { return gen_beta_sample(spec).graph; }

Hypergraph gen_star(std::size_t m) {
  if (m == 0) throw InvalidInput("gen_star: m must be positive");
  std::vector<std::vector<std::string>> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) edges.push_back({"u", "v" + std::to_string(i)});
  return Hypergraph::from_named_edges(edges);
}

Hypergraph gen_general(const GenSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  std::vector<std::vector<VertexId>> members(spec.m);
  std::vector<bool> used(spec.n, false);
  for (auto& e : members) {
    for (VertexId v = 0; v < spec.n; ++v) {
      if (rng.chance(spec.density)) {
        e.push_back(v);
        used[v] = true;
      }
    }
    if (e.empty()) {
      const auto v = static_cast<VertexId>(rng.below(spec.n));
      e.push_back(v);
      used[v] = true;
    }
  }
  for (VertexId v = 0; v < spec.n; ++v) {
    if (!used[v]) members[rng.below(spec.m)].push_back(v);
  }
  return shuffled(spec.n, members, rng);
}

Hypergraph generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenClass::alpha: return gen_alpha(spec);
    case GenClass::beta: return gen_beta(spec);
    case GenClass::gamma: return gen_gamma(spec);
    case GenClass::interval: return gen_interval(spec);
    case GenClass::star: return gen_star(spec.m);
    case GenClass::general: return gen_general(spec);
  }
  throw InvalidInput("generate: unknown class");
}

}  // namespace hyperacyclic
