#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperacyclic/graph.hpp"

namespace hyperacyclic {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

/// A finite hypergraph stored as its incidence graph in two CSR arrays.
///
/// Vertices are dense ids 0..n-1 carrying a name; hyperedges are dense ids
/// 0..m-1 carrying a label. Every hyperedge is non-empty and free of
/// duplicate pins, and every vertex lies in at least one hyperedge. Two
/// hyperedges may hold the same vertex set; they stay distinct ids.
///
/// Pin lists are sorted: `edge(e)` by vertex id, `incident(v)` by edge id.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws InvalidInput on an empty hyperedge, a repeated pin, an id out of
  /// range or a vertex that no hyperedge contains. Missing names default to
  /// the decimal vertex id, missing labels to "E<id+1>".
  Hypergraph(std::size_t vertex_count, std::vector<std::vector<VertexId>> edges,
             std::vector<std::string> vertex_names = {}, std::vector<std::string> edge_labels = {});

  /// Interns names in order of first appearance.
  static Hypergraph from_named_edges(const std::vector<std::vector<std::string>>& edges);

  /// Builds a hypergraph over the vertices that actually occur in `edges`,
  /// renumbered densely in increasing id order. Names are taken from
  /// `names` (indexed by the original ids) when given.
  static Hypergraph compacted(const std::vector<std::vector<VertexId>>& edges,
                              std::span<const std::string> names = {});

  std::size_t vertex_count() const noexcept { return vertex_offsets_.empty() ? 0 : vertex_offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edge_offsets_.empty() ? 0 : edge_offsets_.size() - 1; }
  /// N, the number of (vertex, hyperedge) incidences.
  std::size_t pin_count() const noexcept { return edge_pins_.size(); }

  std::span<const VertexId> edge(EdgeId e) const {
    return {edge_pins_.data() + edge_offsets_[e], edge_pins_.data() + edge_offsets_[e + 1]};
  }
  std::span<const EdgeId> incident(VertexId v) const {
    return {vertex_pins_.data() + vertex_offsets_[v], vertex_pins_.data() + vertex_offsets_[v + 1]};
  }
  std::size_t edge_size(EdgeId e) const { return edge_offsets_[e + 1] - edge_offsets_[e]; }
  std::size_t degree(VertexId v) const { return vertex_offsets_[v + 1] - vertex_offsets_[v]; }

  bool contains(EdgeId e, VertexId v) const;

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::string& edge_label(EdgeId e) const { return edge_labels_[e]; }
  const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }
  const std::vector<std::string>& edge_labels() const noexcept { return edge_labels_; }
  std::optional<VertexId> find_vertex(const std::string& name) const;

  /// Copies the hyperedges out as plain vectors.
  std::vector<std::vector<VertexId>> edge_lists() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<std::size_t> edge_offsets_;
  std::vector<VertexId> edge_pins_;
  std::vector<std::size_t> vertex_offsets_;
  std::vector<EdgeId> vertex_pins_;
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_labels_;
};

/// Exchanges vertices and hyperedges. Vertex j of the result is hyperedge j
/// of `h`, hyperedge v of the result is `h.incident(v)`. Names and labels
/// swap roles, so `dual(dual(h)) == h`.
Hypergraph dual(const Hypergraph& h);

/// Graph on the vertices; u ~ v iff some hyperedge holds both.
UndirectedGraph two_section(const Hypergraph& h);

/// Intersection graph of the hyperedges.
UndirectedGraph line_graph(const Hypergraph& h);

/// Bipartite incidence graph: node v for vertex v, node n + e for hyperedge e.
UndirectedGraph incidence_graph(const Hypergraph& h);

/// Connected components of the incidence graph.
struct Components {
  std::size_t count = 0;
  std::vector<std::uint32_t> of_edge;
  std::vector<std::uint32_t> of_vertex;
  /// Hyperedges of each component, ascending.
  std::vector<std::vector<EdgeId>> edges;
};

Components connected_components(const Hypergraph& h);

/// Sub-hypergraph formed by a set of hyperedges, with the maps back to the
/// ids of the parent hypergraph.
struct SubHypergraph {
  Hypergraph graph;
  std::vector<VertexId> vertex_origin;
  std::vector<EdgeId> edge_origin;
};

/// Restricts `h` to the given hyperedges (kept in the given order) and the
/// vertices they cover, renumbered in increasing original id. Names and
/// labels carry over.
SubHypergraph induced_by_edges(const Hypergraph& h, std::span<const EdgeId> edges);

}  // namespace hyperacyclic
