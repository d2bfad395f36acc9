#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hyperacyclic {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Simple undirected graph. Edges are stored as sorted, unique pairs (i, j)
/// with i < j.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  /// Accepts pairs in any orientation and with repetitions; self-loops are
  /// rejected with InvalidInput.
  UndirectedGraph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(NodeId a, NodeId b) const;

  /// Adjacency lists, sorted.
  std::vector<std::vector<NodeId>> adjacency() const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
};

/// Simple directed graph. Edges are sorted, unique ordered pairs.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(NodeId from, NodeId to) const;

  /// Out-neighbour lists, sorted.
  std::vector<std::vector<NodeId>> out_adjacency() const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace hyperacyclic
