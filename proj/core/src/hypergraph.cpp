#include "hyperacyclic/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "hyperacyclic/errors.hpp"

namespace hyperacyclic {

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<std::vector<VertexId>> edges,
                       std::vector<std::string> vertex_names, std::vector<std::string> edge_labels)
    : vertex_names_(std::move(vertex_names)), edge_labels_(std::move(edge_labels)) {
  const std::size_t m = edges.size();
  edge_offsets_.assign(m + 1, 0);
  vertex_offsets_.assign(vertex_count + 2, 0);

  for (std::size_t e = 0; e < m; ++e) {
    auto& list = edges[e];
    if (list.empty()) throw InvalidInput("hyperedge " + std::to_string(e + 1) + " is empty");
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidInput("hyperedge " + std::to_string(e + 1) + " repeats a vertex");
    }
    if (list.back() >= vertex_count) {
      throw InvalidInput("hyperedge " + std::to_string(e + 1) + " references an unknown vertex");
    }
    edge_offsets_[e + 1] = edge_offsets_[e] + list.size();
    for (VertexId v : list) ++vertex_offsets_[v + 2];
  }

  edge_pins_.reserve(edge_offsets_[m]);
  for (const auto& list : edges) edge_pins_.insert(edge_pins_.end(), list.begin(), list.end());

  std::partial_sum(vertex_offsets_.begin(), vertex_offsets_.end(), vertex_offsets_.begin());
  vertex_pins_.resize(edge_pins_.size());
  for (EdgeId e = 0; e < m; ++e) {
    for (VertexId v : edge(e)) vertex_pins_[vertex_offsets_[v + 1]++] = e;
  }
  vertex_offsets_.pop_back();

  for (VertexId v = 0; v < vertex_count; ++v) {
    if (degree(v) == 0) throw InvalidInput("vertex " + std::to_string(v) + " lies in no hyperedge");
  }

  if (vertex_names_.empty()) {
    vertex_names_.reserve(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) vertex_names_.push_back(std::to_string(v));
  } else if (vertex_names_.size() != vertex_count) {
    throw InvalidInput("vertex name count does not match vertex count");
  }
  if (edge_labels_.empty()) {
    edge_labels_.reserve(m);
    for (std::size_t e = 0; e < m; ++e) edge_labels_.push_back("E" + std::to_string(e + 1));
  } else if (edge_labels_.size() != m) {
    throw InvalidInput("edge label count does not match edge count");
  }
}

Hypergraph Hypergraph::from_named_edges(const std::vector<std::vector<std::string>>& edges) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> names;
  std::vector<std::vector<VertexId>> lists;
  lists.reserve(edges.size());
  for (const auto& edge : edges) {
    auto& list = lists.emplace_back();
    list.reserve(edge.size());
    for (const auto& name : edge) {
      auto [it, inserted] = ids.try_emplace(name, static_cast<VertexId>(names.size()));
      if (inserted) names.push_back(name);
      list.push_back(it->second);
    }
  }
  const std::size_t count = names.size();
  return Hypergraph(count, std::move(lists), std::move(names));
}

Hypergraph Hypergraph::compacted(const std::vector<std::vector<VertexId>>& edges,
                                 std::span<const std::string> names) {
  VertexId max_id = 0;
  for (const auto& list : edges) {
    for (VertexId v : list) max_id = std::max(max_id, v + 1);
  }
  std::vector<VertexId> remap(max_id, kNone);
  for (const auto& list : edges) {
    for (VertexId v : list) remap[v] = 0;
  }
  std::vector<std::string> kept_names;
  VertexId next = 0;
  for (VertexId v = 0; v < max_id; ++v) {
    if (remap[v] == kNone) continue;
    remap[v] = next++;
    kept_names.push_back(v < names.size() ? names[v] : std::to_string(v));
  }
  std::vector<std::vector<VertexId>> renamed(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    renamed[e].reserve(edges[e].size());
    for (VertexId v : edges[e]) renamed[e].push_back(remap[v]);
  }
  return Hypergraph(next, std::move(renamed), std::move(kept_names));
}

bool Hypergraph::contains(EdgeId e, VertexId v) const {
  auto pins = edge(e);
  return std::binary_search(pins.begin(), pins.end(), v);
}

std::optional<VertexId> Hypergraph::find_vertex(const std::string& name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertex_names_.begin());
}

std::vector<std::vector<VertexId>> Hypergraph::edge_lists() const {
  std::vector<std::vector<VertexId>> out(edge_count());
  for (EdgeId e = 0; e < edge_count(); ++e) out[e].assign(edge(e).begin(), edge(e).end());
  return out;
}

Hypergraph dual(const Hypergraph& h) {
  std::vector<std::vector<VertexId>> edges(h.vertex_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    auto inc = h.incident(v);
    edges[v].assign(inc.begin(), inc.end());
  }
  return Hypergraph(h.edge_count(), std::move(edges), h.edge_labels(), h.vertex_names());
}

UndirectedGraph two_section(const Hypergraph& h) {
  std::vector<Edge> pairs;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto pins = h.edge(e);
    for (std::size_t a = 0; a < pins.size(); ++a) {
      for (std::size_t b = a + 1; b < pins.size(); ++b) pairs.emplace_back(pins[a], pins[b]);
    }
  }
  return UndirectedGraph(h.vertex_count(), std::move(pairs));
}

UndirectedGraph line_graph(const Hypergraph& h) {
  std::vector<Edge> pairs;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    auto inc = h.incident(v);
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) pairs.emplace_back(inc[a], inc[b]);
    }
  }
  return UndirectedGraph(h.edge_count(), std::move(pairs));
}

UndirectedGraph incidence_graph(const Hypergraph& h) {
  const auto n = static_cast<NodeId>(h.vertex_count());
  std::vector<Edge> pairs;
  pairs.reserve(h.pin_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    for (VertexId v : h.edge(e)) pairs.emplace_back(v, n + e);
  }
  return UndirectedGraph(h.vertex_count() + h.edge_count(), std::move(pairs));
}

Components connected_components(const Hypergraph& h) {
  Components c;
  c.of_edge.assign(h.edge_count(), kNone);
  c.of_vertex.assign(h.vertex_count(), kNone);
  std::vector<EdgeId> stack;
  for (EdgeId start = 0; start < h.edge_count(); ++start) {
    if (c.of_edge[start] != kNone) continue;
    const auto id = static_cast<std::uint32_t>(c.count++);
    auto& members = c.edges.emplace_back();
    c.of_edge[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      EdgeId e = stack.back();
      stack.pop_back();
      members.push_back(e);
      for (VertexId v : h.edge(e)) {
        if (c.of_vertex[v] != kNone) continue;
        c.of_vertex[v] = id;
        for (EdgeId f : h.incident(v)) {
          if (c.of_edge[f] == kNone) {
            c.of_edge[f] = id;
            stack.push_back(f);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
  }
  return c;
}

SubHypergraph induced_by_edges(const Hypergraph& h, std::span<const EdgeId> edges) {
  SubHypergraph sub;
  std::vector<VertexId> remap(h.vertex_count(), kNone);
  for (EdgeId e : edges) {
    for (VertexId v : h.edge(e)) remap[v] = 0;
  }
  std::vector<std::string> names;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (remap[v] == kNone) continue;
    remap[v] = static_cast<VertexId>(sub.vertex_origin.size());
    sub.vertex_origin.push_back(v);
    names.push_back(h.vertex_name(v));
  }
  std::vector<std::vector<VertexId>> lists;
  std::vector<std::string> labels;
  lists.reserve(edges.size());
  for (EdgeId e : edges) {
    auto& list = lists.emplace_back();
    for (VertexId v : h.edge(e)) list.push_back(remap[v]);
    labels.push_back(h.edge_label(e));
    sub.edge_origin.push_back(e);
  }
  const std::size_t count = names.size();
  sub.graph = Hypergraph(count, std::move(lists), std::move(names), std::move(labels));
  return sub;
}

}  // namespace hyperacyclic
