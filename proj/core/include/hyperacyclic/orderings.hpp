#pragma once

#include <optional>
#include <vector>

#include "hyperacyclic/hypergraph.hpp"

namespace hyperacyclic {

/// Row (vertex) and column (hyperedge) order of the incidence matrix.
///
/// Rows read top to bottom and columns left to right are lexicographically
/// non-decreasing, where inside a row the rightmost entry is the most
/// significant and inside a column the bottom entry is.
struct DoublyLexOrder {
  std::vector<VertexId> vertex_order;
  std::vector<EdgeId> edge_order;
  /// Per hyperedge: rank of its column among the distinct columns, so that
  /// E_i precedes-or-equals E_j in column order iff rank[i] <= rank[j].
  /// Hyperedges with equal vertex sets share a rank. May be left empty by
  /// callers that build an order by hand.
  std::vector<std::uint32_t> edge_rank;
};

/// Ordered partition refinement of rows and columns. Row parts are finished
/// front to back; a part whose rows disagree on the first non-constant
/// column block is split by row kind, otherwise the block is cut by a row
/// of largest count. Per-part pin pools, count buckets and a log of cuts per
/// column part keep the work near O(N log N) on the inputs we measured; no
/// worst-case bound is claimed.
DoublyLexOrder doubly_lexical_order(const Hypergraph& h);

/// Checks both monotonicity conditions. Requires permutations of the ids.
bool is_doubly_lexical(const Hypergraph& h, const DoublyLexOrder& ord);

/// True iff the ordered incidence matrix has no submatrix [[1,1],[1,0]].
/// Only the 1-entry to the right of and the 1-entry below each 1-entry are
/// inspected, which suffices for a minimal occurrence.
bool is_gamma_free(const Hypergraph& h, const DoublyLexOrder& ord);

/// Node of the incidence graph: a vertex or a hyperedge of the hypergraph.
struct IncidenceNode {
  bool is_edge = false;
  std::uint32_t id = kNone;

  friend bool operator==(const IncidenceNode&, const IncidenceNode&) = default;
};

enum class PruneKind { base, pendant, false_twin, true_twin };

struct PruningStep {
  IncidenceNode node;
  PruneKind kind = PruneKind::base;
  /// Twin for twin steps, the single neighbour for pendant steps, the first
  /// base node for the second base node, unset for the first base node.
  IncidenceNode witness;
};

/// Steps in the order nodes are added. Each connected component contributes
/// a base pair (vertex, hyperedge) followed by its pendant and twin steps;
/// components follow each other in order of their smallest hyperedge id.
struct PruningSequence {
  std::vector<PruningStep> steps;
};

/// Pruning sequence of the incidence graph, or nullopt when it is not
/// distance-hereditary. Twins are witnessed by the smallest eligible id.
std::optional<PruningSequence> pruning_sequence(const Hypergraph& h);

/// Hyperedge order in which every vertex occupies a contiguous block.
struct IntervalOrder {
  std::vector<EdgeId> edge_order;
  /// Position in edge_order of each hyperedge.
  std::vector<std::uint32_t> position;
  /// Per vertex: first and last position of a hyperedge containing it.
  std::vector<std::uint32_t> leftmost;
  std::vector<std::uint32_t> rightmost;
};

/// Builds leftmost/rightmost for a given order. Returns nullopt if some
/// vertex's hyperedges are not contiguous in it.
std::optional<IntervalOrder> make_interval_order(const Hypergraph& h, std::vector<EdgeId> order);

/// Consecutive-ones test over the hyperedges (PQ-tree). nullopt iff `h` is
/// not an interval hypergraph.
std::optional<IntervalOrder> interval_order(const Hypergraph& h);

}  // namespace hyperacyclic
