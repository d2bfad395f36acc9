#pragma once

#include <optional>
#include <vector>

#include "hyperacyclic/hypergraph.hpp"

namespace hyperacyclic {

/// Rooted forest on the hyperedge ids, one tree per connected component of
/// the incidence graph (a single tree spanning several components is also
/// accepted by the functions below).
struct JoinTree {
  /// parent[e] is the parent hyperedge of e, or kNone for a root.
  std::vector<EdgeId> parent;

  std::size_t size() const noexcept { return parent.size(); }
  std::vector<EdgeId> roots() const;
  /// Children lists, ascending.
  std::vector<std::vector<EdgeId>> children() const;

  /// Path E_order[0] - E_order[1] - ... rooted at order[0].
  static JoinTree path(std::span<const EdgeId> order);

  friend bool operator==(const JoinTree&, const JoinTree&) = default;
};

/// Join tree after re-hanging every hyperedge onto its highest admissible
/// ancestor.
struct CanonicalJoinTree {
  JoinTree tree;
  /// Pre-order of the input tree; components follow each other, each rooted
  /// at its smallest hyperedge id.
  std::vector<EdgeId> preorder;
  /// Position of each hyperedge in `preorder`.
  std::vector<std::uint32_t> preorder_index;
  /// For each vertex, the smallest pre-order position of a hyperedge holding it.
  std::vector<std::uint32_t> lambda;
};

struct Separator {
  std::vector<VertexId> vertices;  // sorted
  EdgeId parent = kNone;
  EdgeId child = kNone;
};

/// One separator per non-root hyperedge: its up-separator in the canonical
/// tree, linked to the tree edge (parent, child). Ordered by the child's
/// pre-order position.
struct SeparatorHypergraph {
  std::vector<Separator> separators;

  /// The separators as hyperedges (same order) over the vertices they cover.
  Hypergraph as_hypergraph(const Hypergraph& source) const;
};

/// Maximum cardinality search over the hyperedges followed by the
/// running-intersection check. Returns a join tree iff `h` is alpha-acyclic.
/// Ties in the search go to the smallest hyperedge id.
std::optional<JoinTree> build_join_tree(const Hypergraph& h);

/// True iff `t` is a forest over exactly h's hyperedges in which, for every
/// vertex, the hyperedges holding it induce a connected subtree.
bool verify_join_tree(const Hypergraph& h, const JoinTree& t);

struct CanonicalizeResult {
  CanonicalJoinTree tree;
  SeparatorHypergraph separators;
};

/// Re-hangs each hyperedge under its highest admissible ancestor and reads
/// off the separator hypergraph. Throws InvalidInput if `t` is not a join
/// tree of `h`.
CanonicalizeResult canonicalize(const Hypergraph& h, const JoinTree& t);

/// build_join_tree followed by canonicalize. Throws NotAcyclic.
SeparatorHypergraph separator_hypergraph(const Hypergraph& h);

}  // namespace hyperacyclic
