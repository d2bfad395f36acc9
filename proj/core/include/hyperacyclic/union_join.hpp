#pragma once

#include <functional>

#include "hyperacyclic/graph.hpp"
#include "hyperacyclic/hypergraph.hpp"
#include "hyperacyclic/orderings.hpp"

namespace hyperacyclic {

/// Subset-graph routine applied to the separator hypergraph.
using SubsetGraphFn = std::function<DirectedGraph(const Hypergraph&)>;

struct UnionJoinResult {
  UndirectedGraph graph;
  /// Pairs emitted before deduplication.
  std::size_t raw_emissions = 0;
  /// Largest number of times a single pair was emitted.
  std::size_t max_multiplicity = 0;
};

/// Union join graph through the separator hypergraph of the canonical join
/// tree: for every separator S, the hyperedges behind each separator
/// containing S are split by the side of S they lie on and all cross pairs
/// become edges. Hyperedges in different components are never joined.
/// Throws NotAcyclic; errors of `subset` propagate.
UnionJoinResult union_join_via_subset_stats(const Hypergraph& h, const SubsetGraphFn& subset);
UndirectedGraph union_join_via_subset(const Hypergraph& h, const SubsetGraphFn& subset);

/// Line graph through the 2-section of the dual, built along a join tree of
/// the dual so that no pair is produced twice. Throws ClassMismatch("gamma").
UndirectedGraph union_join_gamma(const Hypergraph& h);

/// Union join graph from a consecutive hyperedge order. Throws
/// ClassMismatch("interval").
UndirectedGraph union_join_interval(const Hypergraph& h);
UndirectedGraph union_join_interval(const Hypergraph& h, const IntervalOrder& order);

}  // namespace hyperacyclic
