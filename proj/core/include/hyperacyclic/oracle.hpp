#pragma once

#include <string>
#include <vector>

#include "hyperacyclic/graph.hpp"
#include "hyperacyclic/hypergraph.hpp"
#include "hyperacyclic/subset_graph.hpp"

/// Brute-force reference implementations for tests. Small inputs only.
namespace hyperacyclic::oracle {

/// Pairwise inclusion tests, O(m^2 n).
DirectedGraph subset_graph_naive(const Hypergraph& h);

/// E_i E_j is an edge iff E_i and E_j meet and their intersection separates
/// E_i \ E_j from E_j \ E_i in the 2-section. An empty difference on either
/// side counts as separated. Throws NotAcyclic.
UndirectedGraph union_join_oracle(const Hypergraph& h);

/// GYO reduction: drop vertices in at most one hyperedge and hyperedges
/// contained in another until nothing changes.
bool acyclic_gyo(const Hypergraph& h);

/// Every non-empty sub-family is acyclic. m <= 20.
bool beta_acyclic_naive(const Hypergraph& h);

/// Some order of the hyperedges keeps each vertex's hyperedges contiguous.
/// m <= 10.
bool interval_naive(const Hypergraph& h);

/// Incidence graph is distance-hereditary. n + m <= 14.
bool gamma_naive(const Hypergraph& h);

/// Every connected induced subgraph preserves distances. At most 14 nodes.
bool distance_hereditary_naive(const UndirectedGraph& g);

/// Intersection closure of the hyperedges, Hasse edges of strict inclusion
/// and labels left after removing everything below. Nodes are listed in
/// increasing order of their vertex sets.
BachmanDiagram bachman_naive(const Hypergraph& h);

/// Structural checks of a diagram against the hypergraph it claims to
/// describe.
struct BachmanReport {
  bool forest = false;            // underlying undirected graph is acyclic
  bool one_tree_per_component = false;
  bool labels_partition = false;  // labels disjoint, cover V, agree with psi
  bool phi_consistent = false;    // Phi is the inverse of phi
  bool reach_matches = false;     // V(phi(E)) == E for every E
  bool indegree_ok = false;       // nodes with empty Phi have in-degree >= 2
  std::string failure;            // first failed check, empty if none

  bool ok() const {
    return forest && one_tree_per_component && labels_partition && phi_consistent && reach_matches &&
           indegree_ok;
  }
};

BachmanReport check_bachman(const Hypergraph& h, const BachmanDiagram& b);

/// Same nodes (keyed by their vertex sets), labels, Phi lists and edges.
bool same_bachman(const BachmanDiagram& a, const BachmanDiagram& b);

}  // namespace hyperacyclic::oracle
