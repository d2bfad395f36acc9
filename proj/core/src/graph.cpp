#include "hyperacyclic/graph.hpp"

#include <algorithm>
#include <string>

#include "hyperacyclic/errors.hpp"

namespace hyperacyclic {

namespace {

void check_endpoints(std::size_t node_count, const Edge& e) {
  if (e.first >= node_count || e.second >= node_count) {
    throw InvalidInput("edge endpoint out of range: " + std::to_string(e.first) + "," +
                       std::to_string(e.second));
  }
  if (e.first == e.second) {
    throw InvalidInput("self-loop on node " + std::to_string(e.first));
  }
}

void sort_unique(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace

UndirectedGraph::UndirectedGraph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    check_endpoints(node_count_, e);
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  sort_unique(edges_);
}

bool UndirectedGraph::has_edge(NodeId a, NodeId b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::vector<std::vector<NodeId>> UndirectedGraph::adjacency() const {
  std::vector<std::vector<NodeId>> adj(node_count_);
  for (const auto& [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

DirectedGraph::DirectedGraph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  for (const auto& e : edges_) check_endpoints(node_count_, e);
  sort_unique(edges_);
}

bool DirectedGraph::has_edge(NodeId from, NodeId to) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

std::vector<std::vector<NodeId>> DirectedGraph::out_adjacency() const {
  std::vector<std::vector<NodeId>> adj(node_count_);
  // edges_ is sorted, so each list comes out sorted.
  for (const auto& [a, b] : edges_) adj[a].push_back(b);
  return adj;
}

}  // namespace hyperacyclic
