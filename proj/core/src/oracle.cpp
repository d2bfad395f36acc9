#include "hyperacyclic/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "hyperacyclic/errors.hpp"
#include "hyperacyclic/orderings.hpp"

namespace hyperacyclic::oracle {

namespace {

using Set = std::vector<VertexId>;

Set to_set(std::span<const VertexId> s) { return Set(s.begin(), s.end()); }

bool subset_of(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool gyo(std::vector<Set> edges) {
  std::vector<bool> alive(edges.size(), true);
  for (bool changed = true; changed;) {
    changed = false;
    std::map<VertexId, std::size_t> count;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!alive[i]) continue;
      for (VertexId v : edges[i]) ++count[v];
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!alive[i]) continue;
      const auto before = edges[i].size();
      std::erase_if(edges[i], [&](VertexId v) { return count[v] <= 1; });
      changed |= edges[i].size() != before;
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = 0; j < edges.size(); ++j) {
        if (j == i || !alive[j]) continue;
        if (subset_of(edges[i], edges[j])) {
          alive[i] = false;
          changed = true;
          break;
        }
      }
    }
  }
  return std::count(alive.begin(), alive.end(), true) <= 1;
}

}  // namespace

DirectedGraph subset_graph_naive(const Hypergraph& h) {
  std::vector<Edge> out;
  for (EdgeId i = 0; i < h.edge_count(); ++i) {
    const Set a = to_set(h.edge(i));
    for (EdgeId j = 0; j < h.edge_count(); ++j) {
      if (i != j && subset_of(a, to_set(h.edge(j)))) out.emplace_back(i, j);
    }
  }
  return DirectedGraph(h.edge_count(), std::move(out));
}

bool acyclic_gyo(const Hypergraph& h) {
  std::vector<Set> edges;
  for (EdgeId e = 0; e < h.edge_count(); ++e) edges.push_back(to_set(h.edge(e)));
  return gyo(std::move(edges));
}

UndirectedGraph union_join_oracle(const Hypergraph& h) {
  if (!acyclic_gyo(h)) throw NotAcyclic("union_join_oracle: hypergraph is not acyclic");
  const std::size_t n = h.vertex_count();
  const std::size_t m = h.edge_count();
  std::vector<Edge> out;
  std::vector<bool> blocked(n), reached(n), edge_used(m);
  for (EdgeId i = 0; i < m; ++i) {
    for (EdgeId j = i + 1; j < m; ++j) {
      const Set a = to_set(h.edge(i));
      const Set b = to_set(h.edge(j));
      const Set common = intersect(a, b);
      if (common.empty()) continue;
      if (common.size() == a.size() || common.size() == b.size()) {
        out.emplace_back(i, j);
        continue;
      }
      std::fill(blocked.begin(), blocked.end(), false);
      std::fill(reached.begin(), reached.end(), false);
      std::fill(edge_used.begin(), edge_used.end(), false);
      for (VertexId v : common) blocked[v] = true;
      std::deque<VertexId> queue;
      for (VertexId v : a) {
        if (!blocked[v]) {
          reached[v] = true;
          queue.push_back(v);
        }
      }
      while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (EdgeId e : h.incident(v)) {
          if (edge_used[e]) continue;
          edge_used[e] = true;
          for (VertexId w : h.edge(e)) {
            if (!blocked[w] && !reached[w]) {
              reached[w] = true;
              queue.push_back(w);
            }
          }
        }
      }
      const bool separated =
          std::none_of(b.begin(), b.end(), [&](VertexId v) { return !blocked[v] && reached[v]; });
      if (separated) out.emplace_back(i, j);
    }
  }
  return UndirectedGraph(m, std::move(out));
}

bool beta_acyclic_naive(const Hypergraph& h) {
  const std::size_t m = h.edge_count();
  if (m > 20) throw InvalidInput("beta_acyclic_naive: at most 20 hyperedges");
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<Set> edges;
    for (EdgeId e = 0; e < m; ++e) {
      if (mask >> e & 1) edges.push_back(to_set(h.edge(e)));
    }
    if (!gyo(std::move(edges))) return false;
  }
  return true;
}

bool interval_naive(const Hypergraph& h) {
  const std::size_t m = h.edge_count();
  if (m > 10) throw InvalidInput("interval_naive: at most 10 hyperedges");
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), 0);
  do {
    if (make_interval_order(h, order)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

bool gamma_naive(const Hypergraph& h) { return distance_hereditary_naive(incidence_graph(h)); }

bool distance_hereditary_naive(const UndirectedGraph& g) {
  const std::size_t k = g.node_count();
  if (k > 14) throw InvalidInput("distance_hereditary_naive: at most 14 nodes");
  const auto adj = g.adjacency();
  constexpr std::uint32_t kFar = kNone;

  auto bfs = [&](std::uint32_t src, std::uint32_t mask) {
    std::vector<std::uint32_t> dist(k, kFar);
    std::deque<std::uint32_t> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto w : adj[u]) {
        if ((mask >> w & 1) && dist[w] == kFar) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  };

  const std::uint32_t all = k == 0 ? 0 : (1u << k) - 1;
  std::vector<std::vector<std::uint32_t>> full(k);
  for (std::uint32_t u = 0; u < k; ++u) full[u] = bfs(u, all);

  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    for (std::uint32_t u = 0; u < k; ++u) {
      if (!(mask >> u & 1)) continue;
      const auto dist = bfs(u, mask);
      for (std::uint32_t w = 0; w < k; ++w) {
        if ((mask >> w & 1) && dist[w] != kFar && dist[w] != full[u][w]) return false;
      }
    }
  }
  return true;
}

BachmanDiagram bachman_naive(const Hypergraph& h) {
  std::set<Set> closure;
  for (EdgeId e = 0; e < h.edge_count(); ++e) closure.insert(to_set(h.edge(e)));
  for (bool grown = true; grown;) {
    grown = false;
    const std::vector<Set> current(closure.begin(), closure.end());
    for (std::size_t a = 0; a < current.size(); ++a) {
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        Set s = intersect(current[a], current[b]);
        if (!s.empty() && closure.insert(std::move(s)).second) grown = true;
      }
    }
  }
  const std::vector<Set> nodes(closure.begin(), closure.end());
  const std::size_t k = nodes.size();

  BachmanDiagram b;
  b.labels.resize(k);
  b.Phi.resize(k);
  for (std::uint32_t x = 0; x < k; ++x) {
    std::vector<bool> below(h.vertex_count(), false);
    for (std::uint32_t y = 0; y < k; ++y) {
      if (y == x || !subset_of(nodes[y], nodes[x])) continue;
      for (VertexId v : nodes[y]) below[v] = true;
      bool covered = true;  // no z strictly between
      for (std::uint32_t z = 0; z < k; ++z) {
        if (z != x && z != y && subset_of(nodes[y], nodes[z]) && subset_of(nodes[z], nodes[x])) {
          covered = false;
          break;
        }
      }
      if (covered) b.edges.emplace_back(x, y);
    }
    for (VertexId v : nodes[x]) {
      if (!below[v]) b.labels[x].push_back(v);
    }
  }
  std::sort(b.edges.begin(), b.edges.end());

  b.psi.assign(h.vertex_count(), kNone);
  for (std::uint32_t x = 0; x < k; ++x) {
    for (VertexId v : b.labels[x]) b.psi[v] = x;
  }
  b.phi.assign(h.edge_count(), kNone);
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), to_set(h.edge(e)));
    b.phi[e] = static_cast<std::uint32_t>(it - nodes.begin());
    b.Phi[b.phi[e]].push_back(e);
  }
  return b;
}

BachmanReport check_bachman(const Hypergraph& h, const BachmanDiagram& b) {
  BachmanReport r;
  const std::size_t k = b.node_count();
  auto fail = [&](const std::string& what) {
    if (r.failure.empty()) r.failure = what;
  };

  bool edges_valid = b.Phi.size() == k;
  for (const auto& [from, to] : b.edges) edges_valid &= from < k && to < k && from != to;
  if (!edges_valid) {
    fail("node ids out of range");
    return r;
  }

  std::vector<std::uint32_t> uf(k);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](std::uint32_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  r.forest = true;
  for (const auto& [from, to] : b.edges) {
    const auto a = find(from), c = find(to);
    if (a == c) {
      r.forest = false;
    } else {
      uf[a] = c;
    }
  }
  if (!r.forest) fail("diagram has a cycle");
  r.one_tree_per_component = r.forest && k - b.edges.size() == connected_components(h).count;
  if (!r.one_tree_per_component) fail("number of trees differs from the number of components");

  r.labels_partition = b.psi.size() == h.vertex_count();
  if (r.labels_partition) {
    std::vector<std::uint32_t> seen(h.vertex_count(), 0);
    for (std::uint32_t x = 0; x < k; ++x) {
      for (VertexId v : b.labels[x]) {
        if (v >= h.vertex_count() || b.psi[v] != x || seen[v]++ > 0) r.labels_partition = false;
      }
    }
    r.labels_partition &= std::all_of(seen.begin(), seen.end(), [](std::uint32_t c) { return c == 1; });
  }
  if (!r.labels_partition) fail("labels do not partition the vertices");

  r.phi_consistent = b.phi.size() == h.edge_count();
  if (r.phi_consistent) {
    std::vector<std::vector<EdgeId>> expect(k);
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if (b.phi[e] >= k) {
        r.phi_consistent = false;
        break;
      }
      expect[b.phi[e]].push_back(e);
    }
    r.phi_consistent = r.phi_consistent && expect == b.Phi;
  }
  if (!r.phi_consistent) fail("Phi is not the inverse of phi");

  r.reach_matches = r.phi_consistent && r.forest;
  for (EdgeId e = 0; r.reach_matches && e < h.edge_count(); ++e) {
    if (b.reach_vertices(b.phi[e]) != to_set(h.edge(e))) r.reach_matches = false;
  }
  if (!r.reach_matches) fail("reachable labels differ from a hyperedge");

  std::vector<std::uint32_t> indeg(k, 0);
  for (const auto& e : b.edges) ++indeg[e.second];
  r.indegree_ok = true;
  for (std::uint32_t x = 0; x < k; ++x) {
    if (b.Phi[x].empty() && indeg[x] < 2) r.indegree_ok = false;
  }
  if (!r.indegree_ok) fail("node without hyperedges has in-degree below 2");
  return r;
}

bool same_bachman(const BachmanDiagram& a, const BachmanDiagram& b) {
  if (a.node_count() != b.node_count() || a.edges.size() != b.edges.size() || a.phi.size() != b.phi.size() ||
      a.psi.size() != b.psi.size()) {
    return false;
  }
  struct Info {
    Set label;
    std::vector<EdgeId> phi_inv;
  };
  auto describe = [](const BachmanDiagram& d) {
    std::vector<Set> key(d.node_count());
    std::map<Set, Info> nodes;
    for (std::uint32_t x = 0; x < d.node_count(); ++x) {
      key[x] = d.reach_vertices(x);
      nodes[key[x]] = Info{d.labels[x], d.Phi[x]};
    }
    std::set<std::pair<Set, Set>> edges;
    for (const auto& [from, to] : d.edges) edges.emplace(key[from], key[to]);
    return std::pair{std::move(nodes), std::move(edges)};
  };
  const auto [na, ea] = describe(a);
  const auto [nb, eb] = describe(b);
  if (na.size() != a.node_count() || ea != eb || na.size() != nb.size()) return false;
  for (auto ia = na.begin(), ib = nb.begin(); ia != na.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.label != ib->second.label ||
        ia->second.phi_inv != ib->second.phi_inv) {
      return false;
    }
  }
  return true;
}

}  // namespace hyperacyclic::oracle
