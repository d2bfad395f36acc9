#include "hyperacyclic/union_join.hpp"

#include <algorithm>

#include "hyperacyclic/errors.hpp"
#include "hyperacyclic/join_tree.hpp"

namespace hyperacyclic {

UnionJoinResult union_join_via_subset_stats(const Hypergraph& h, const SubsetGraphFn& subset) {
  const auto tree = build_join_tree(h);
  if (!tree) throw NotAcyclic("union join: hypergraph is not acyclic");
  const auto canon = canonicalize(h, *tree);
  const auto& seps = canon.separators.separators;
  const auto m = static_cast<std::uint32_t>(h.edge_count());
  const auto k = static_cast<std::uint32_t>(seps.size());

  UnionJoinResult result;
  if (k == 0) {
    result.graph = UndirectedGraph(m, {});
    return result;
  }
  const auto supersets = subset(canon.separators.as_hypergraph(h)).out_adjacency();

  // Tree with every separator spliced in between its two hyperedges: node
  // ids 0..m-1 are hyperedges, m+s is separator s.
  std::vector<std::vector<std::uint32_t>> below(m + k);
  for (std::uint32_t s = 0; s < k; ++s) {
    below[seps[s].parent].push_back(m + s);
    below[m + s].push_back(seps[s].child);
  }
  std::vector<std::uint32_t> pre(m + k, kNone), post(m + k, kNone);
  {
    std::uint32_t pre_clock = 0, post_clock = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;
    for (EdgeId root = 0; root < m; ++root) {
      if (canon.tree.tree.parent[root] != kNone) continue;
      stack.emplace_back(root, 0);
      pre[root] = pre_clock++;
      while (!stack.empty()) {
        auto& [x, next] = stack.back();
        if (next < below[x].size()) {
          const std::uint32_t y = below[x][next++];
          pre[y] = pre_clock++;
          stack.emplace_back(y, 0);
        } else {
          post[x] = post_clock++;
          stack.pop_back();
        }
      }
    }
  }
  auto descendant = [&](std::uint32_t x, std::uint32_t y) { return pre[x] > pre[y] && post[x] < post[y]; };

  std::vector<Edge> emitted;
  std::vector<EdgeId> side1, side2;
  for (std::uint32_t s = 0; s < k; ++s) {
    const std::uint32_t node = m + s;
    side1.assign(1, seps[s].child);
    side2.assign(1, seps[s].parent);
    for (std::uint32_t t : supersets[s]) {
      // The far hyperedge of t as seen from s: its parent when t lies above
      // s, its child otherwise.
      const EdgeId far = descendant(node, m + t) ? seps[t].parent : seps[t].child;
      (descendant(far, node) ? side1 : side2).push_back(far);
    }
    for (EdgeId a : side1) {
      for (EdgeId b : side2) emitted.emplace_back(std::min(a, b), std::max(a, b));
    }
  }

  result.raw_emissions = emitted.size();
  std::sort(emitted.begin(), emitted.end());
  std::size_t run = 0;
  for (std::size_t i = 0; i < emitted.size(); ++i) {
    run = (i > 0 && emitted[i] == emitted[i - 1]) ? run + 1 : 1;
    result.max_multiplicity = std::max(result.max_multiplicity, run);
  }
  emitted.erase(std::unique(emitted.begin(), emitted.end()), emitted.end());
  result.graph = UndirectedGraph(m, std::move(emitted));
  return result;
}

UndirectedGraph union_join_via_subset(const Hypergraph& h, const SubsetGraphFn& subset) {
  return union_join_via_subset_stats(h, subset).graph;
}

UndirectedGraph union_join_gamma(const Hypergraph& h) {
  if (!pruning_sequence(h)) throw ClassMismatch("gamma", "union_join_gamma: hypergraph is not gamma-acyclic");
  const Hypergraph d = dual(h);
  const auto tree = build_join_tree(d);
  if (!tree) throw ClassMismatch("gamma", "union_join_gamma: dual hypergraph is not acyclic");

  // Pre-order over the join tree of the dual; within each of its hyperedges
  // the not yet flagged members are joined to everything flagged so far.
  const auto children = tree->children();
  std::vector<bool> flagged(d.vertex_count(), false);
  std::vector<Edge> out;
  std::vector<VertexId> old_members, new_members;
  std::vector<EdgeId> stack;
  for (EdgeId root : tree->roots()) {
    stack.push_back(root);
    while (!stack.empty()) {
      const EdgeId x = stack.back();
      stack.pop_back();
      old_members.clear();
      new_members.clear();
      for (VertexId v : d.edge(x)) (flagged[v] ? old_members : new_members).push_back(v);
      for (std::size_t i = 0; i < new_members.size(); ++i) {
        const VertexId v = new_members[i];
        for (VertexId u : old_members) out.emplace_back(u, v);
        for (std::size_t j = 0; j < i; ++j) out.emplace_back(new_members[j], v);
        flagged[v] = true;
      }
      for (auto it = children[x].rbegin(); it != children[x].rend(); ++it) stack.push_back(*it);
    }
  }
  return UndirectedGraph(h.edge_count(), std::move(out));
}

UndirectedGraph union_join_interval(const Hypergraph& h) {
  auto order = interval_order(h);
  if (!order) throw ClassMismatch("interval", "union_join_interval: no consecutive hyperedge order");
  return union_join_interval(h, *order);
}

UndirectedGraph union_join_interval(const Hypergraph& h, const IntervalOrder& order) {
  const auto m = static_cast<std::uint32_t>(h.edge_count());
  if (order.edge_order.size() != m || order.leftmost.size() != h.vertex_count()) {
    throw InvalidInput("union_join_interval: order does not match the hypergraph");
  }
  // For the separator S_k between positions k-1 and k, the pairs (j, i) with
  // j < k <= i whose intersection equals S_k are exactly L_k <= j and
  // i <= R_k, where L_k is the largest start and R_k the smallest end of a
  // vertex of S_k. Position i collects the union of [L_k, k-1] over the
  // k <= i still open, walking them from the right.
  std::vector<std::uint32_t> low(m, kNone), high(m, kNone);
  std::vector<std::vector<std::uint32_t>> expires(m);
  for (std::uint32_t k = 1; k < m; ++k) {
    std::uint32_t lo = 0, hi = m - 1;
    bool any = false;
    for (VertexId v : h.edge(order.edge_order[k])) {
      if (order.leftmost[v] < k) {
        any = true;
        lo = std::max(lo, order.leftmost[v]);
        hi = std::min(hi, order.rightmost[v]);
      }
    }
    if (!any) continue;
    low[k] = lo;
    high[k] = hi;
    expires[hi].push_back(k);
  }

  // Doubly linked list of open k in increasing order; kNone terminates.
  std::vector<std::uint32_t> prev(m, kNone), next(m, kNone);
  std::uint32_t last = kNone;
  auto unlink = [&](std::uint32_t k) {
    if (prev[k] != kNone) next[prev[k]] = next[k];
    if (next[k] != kNone) {
      prev[next[k]] = prev[k];
    } else {
      last = prev[k];
    }
  };

  std::vector<Edge> out;
  for (std::uint32_t i = 1; i < m; ++i) {
    if (low[i] != kNone) {
      prev[i] = last;
      if (last != kNone) next[last] = i;
      last = i;
    }
    const EdgeId ei = order.edge_order[i];
    std::uint32_t cover = i;  // positions >= cover are already emitted
    for (std::uint32_t k = last; k != kNone; k = prev[k]) {
      const std::uint32_t top = std::min(k, cover);
      for (std::uint32_t j = low[k]; j < top; ++j) out.emplace_back(order.edge_order[j], ei);
      cover = std::min(cover, low[k]);
    }
    for (std::uint32_t k : expires[i]) unlink(k);
  }
  return UndirectedGraph(m, std::move(out));
}

}  // namespace hyperacyclic
