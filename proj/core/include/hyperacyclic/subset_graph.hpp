#pragma once

#include <vector>

#include "hyperacyclic/graph.hpp"
#include "hyperacyclic/hypergraph.hpp"
#include "hyperacyclic/orderings.hpp"

namespace hyperacyclic {

/// Simplified Bachman diagram.
///
/// Node X stands for the vertex set V(X), the union of the labels of all
/// nodes reachable from X (X included). An edge X -> Y means V(X) strictly
/// contains V(Y) with nothing in between. Each vertex sits in the label of
/// the smallest node containing it.
struct BachmanDiagram {
  /// Label of each node, sorted. May be empty.
  std::vector<std::vector<VertexId>> labels;
  /// Edges (X, Y), sorted.
  std::vector<Edge> edges;
  /// Node representing each hyperedge.
  std::vector<std::uint32_t> phi;
  /// Node whose label holds each vertex.
  std::vector<std::uint32_t> psi;
  /// Hyperedges represented by each node, ascending.
  std::vector<std::vector<EdgeId>> Phi;

  std::size_t node_count() const noexcept { return labels.size(); }
  DirectedGraph graph() const { return DirectedGraph(labels.size(), edges); }
  /// V(x), sorted.
  std::vector<VertexId> reach_vertices(std::uint32_t x) const;
};

/// Edge (i, j) iff E_i is a subset of E_j, i != j. Any hypergraph.
///
/// Word-parallel: ANDs per-vertex bit rows over the hyperedges, O(N m / w).
/// Falls back to candidate marking when the n*m bit matrix would exceed
/// 2^30 bits.
DirectedGraph subset_graph_baseline(const Hypergraph& h);

/// Subset graph through a doubly lexical order: E is contained in E' iff
/// E' holds the topmost vertex of E and E's column precedes-or-equals E''s.
/// Throws ClassMismatch("beta") when the ordered matrix contains Gamma.
DirectedGraph subset_graph_beta(const Hypergraph& h);

/// Same with a caller-supplied doubly lexical order. The order is checked
/// to be Gamma-free, not to be doubly lexical. Missing ranks are derived
/// from the column order.
DirectedGraph subset_graph_beta(const Hypergraph& h, const DoublyLexOrder& order);

/// Builds the simplified Bachman diagram from a pruning sequence of the
/// incidence graph. Several components give a forest with one tree each.
/// Throws ClassMismatch("gamma") if the incidence graph is not
/// distance-hereditary.
BachmanDiagram build_bachman(const Hypergraph& h);
BachmanDiagram build_bachman(const Hypergraph& h, const PruningSequence& seq);

/// Edge (E, E') iff phi(E') reaches phi(E) in the Bachman diagram.
/// Throws ClassMismatch("gamma").
DirectedGraph subset_graph_gamma(const Hypergraph& h);
DirectedGraph subset_graph_from_bachman(const BachmanDiagram& b);

/// Subset graph from a consecutive hyperedge order: E_i is contained in
/// every E_j between the leftmost start of its vertices and i, and likewise
/// to the right. Throws ClassMismatch("interval").
DirectedGraph subset_graph_interval(const Hypergraph& h);
DirectedGraph subset_graph_interval(const Hypergraph& h, const IntervalOrder& order);

}  // namespace hyperacyclic
