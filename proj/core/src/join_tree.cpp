#include "hyperacyclic/join_tree.hpp"

#include <algorithm>

#include "hyperacyclic/errors.hpp"

namespace hyperacyclic {

std::vector<EdgeId> JoinTree::roots() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < parent.size(); ++e) {
    if (parent[e] == kNone) out.push_back(e);
  }
  return out;
}

std::vector<std::vector<EdgeId>> JoinTree::children() const {
  std::vector<std::vector<EdgeId>> out(parent.size());
  for (EdgeId e = 0; e < parent.size(); ++e) {
    if (parent[e] != kNone) out[parent[e]].push_back(e);
  }
  return out;
}

JoinTree JoinTree::path(std::span<const EdgeId> order) {
  JoinTree t;
  t.parent.assign(order.size(), kNone);
  for (std::size_t i = 1; i < order.size(); ++i) t.parent[order[i]] = order[i - 1];
  return t;
}

Hypergraph SeparatorHypergraph::as_hypergraph(const Hypergraph& source) const {
  std::vector<std::vector<VertexId>> lists;
  lists.reserve(separators.size());
  for (const auto& s : separators) lists.push_back(s.vertices);
  return Hypergraph::compacted(lists, source.vertex_names());
}

namespace {

/// Max-heap of hyperedges keyed by (marked pins, lower id first) with
/// in-place key increments.
class SearchHeap {
 public:
  explicit SearchHeap(std::size_t m) : heap_(m), pos_(m), count_(m, 0) {
    for (EdgeId e = 0; e < m; ++e) heap_[e] = pos_[e] = e;  // ids ascending is a valid heap
  }

  bool empty() const { return heap_.empty(); }
  std::uint32_t count(EdgeId e) const { return count_[e]; }

  EdgeId pop() {
    const EdgeId top = heap_.front();
    pos_[top] = kNone;
    const EdgeId last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_[0] = last;
      pos_[last] = 0;
      down(0);
    }
    return top;
  }

  void increment(EdgeId e) {
    ++count_[e];
    up(pos_[e]);
  }

 private:
  bool before(EdgeId a, EdgeId b) const { return count_[a] != count_[b] ? count_[a] > count_[b] : a < b; }

  void up(std::uint32_t i) {
    const EdgeId e = heap_[i];
    while (i > 0) {
      const std::uint32_t p = (i - 1) / 2;
      if (!before(e, heap_[p])) break;
      heap_[i] = heap_[p];
      pos_[heap_[i]] = i;
      i = p;
    }
    heap_[i] = e;
    pos_[e] = i;
  }

  void down(std::uint32_t i) {
    const EdgeId e = heap_[i];
    const auto size = static_cast<std::uint32_t>(heap_.size());
    for (;;) {
      std::uint32_t c = 2 * i + 1;
      if (c >= size) break;
      if (c + 1 < size && before(heap_[c + 1], heap_[c])) ++c;
      if (!before(heap_[c], e)) break;
      heap_[i] = heap_[c];
      pos_[heap_[i]] = i;
      i = c;
    }
    heap_[i] = e;
    pos_[e] = i;
  }

  std::vector<EdgeId> heap_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> count_;
};

}  // namespace

std::optional<JoinTree> build_join_tree(const Hypergraph& h) {
  const std::size_t m = h.edge_count();
  const std::size_t n = h.vertex_count();

  SearchHeap heap(m);
  std::vector<EdgeId> order;
  order.reserve(m);
  std::vector<std::uint32_t> first(n, kNone);  // order position that marked v
  std::vector<std::uint32_t> parent_pos(m, kNone);

  while (!heap.empty()) {
    const EdgeId e = heap.pop();
    const auto pos = static_cast<std::uint32_t>(order.size());
    order.push_back(e);

    std::uint32_t j = kNone;
    for (VertexId v : h.edge(e)) {
      if (first[v] != kNone) {
        j = (j == kNone) ? first[v] : std::max(j, first[v]);
      }
    }
    parent_pos[pos] = j;
    for (VertexId v : h.edge(e)) {
      if (first[v] != kNone) continue;
      first[v] = pos;
      for (EdgeId f : h.incident(v)) {
        if (f != e) heap.increment(f);
      }
    }
  }

  // Running intersection: the already-seen part of E_i must lie inside the
  // hyperedge chosen as its parent. Children grouped by parent position.
  std::vector<std::uint32_t> start(m + 1, 0);
  for (std::uint32_t pos = 0; pos < m; ++pos) {
    if (parent_pos[pos] != kNone) ++start[parent_pos[pos] + 1];
  }
  for (std::size_t j = 0; j < m; ++j) start[j + 1] += start[j];
  std::vector<std::uint32_t> kids(start[m]);
  {
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (std::uint32_t pos = 0; pos < m; ++pos) {
      if (parent_pos[pos] != kNone) kids[fill[parent_pos[pos]]++] = pos;
    }
  }
  std::vector<std::uint32_t> stamp(n, kNone);
  for (std::uint32_t j = 0; j < m; ++j) {
    if (start[j] == start[j + 1]) continue;
    for (VertexId v : h.edge(order[j])) stamp[v] = j;
    for (std::uint32_t k = start[j]; k < start[j + 1]; ++k) {
      const std::uint32_t pos = kids[k];
      for (VertexId v : h.edge(order[pos])) {
        if (first[v] < pos && stamp[v] != j) return std::nullopt;
      }
    }
  }

  JoinTree t;
  t.parent.assign(m, kNone);
  for (std::uint32_t pos = 0; pos < m; ++pos) {
    if (parent_pos[pos] != kNone) t.parent[order[pos]] = order[parent_pos[pos]];
  }
  return t;
}

namespace {

bool is_forest(const JoinTree& t) {
  const std::size_t m = t.size();
  // 0 = unvisited, 1 = on current walk, 2 = known to reach a root.
  std::vector<std::uint8_t> state(m, 0);
  std::vector<EdgeId> walk;
  for (EdgeId start = 0; start < m; ++start) {
    EdgeId e = start;
    while (e != kNone && state[e] == 0) {
      state[e] = 1;
      walk.push_back(e);
      e = t.parent[e];
      if (e != kNone && e >= m) return false;
    }
    if (e != kNone && state[e] == 1) return false;
    for (EdgeId w : walk) state[w] = 2;
    walk.clear();
  }
  return true;
}

}  // namespace

bool verify_join_tree(const Hypergraph& h, const JoinTree& t) {
  const std::size_t m = h.edge_count();
  if (t.size() != m) return false;
  if (!is_forest(t)) return false;

  // A vertex's hyperedges induce a subtree iff they span exactly |S_v| - 1
  // tree edges.
  std::vector<VertexId> stamp(m, kNone);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    auto inc = h.incident(v);
    for (EdgeId e : inc) stamp[e] = v;
    std::size_t inner = 0;
    for (EdgeId e : inc) {
      const EdgeId p = t.parent[e];
      if (p != kNone && stamp[p] == v) ++inner;
    }
    if (inner + 1 != inc.size()) return false;
  }
  return true;
}

CanonicalizeResult canonicalize(const Hypergraph& h, const JoinTree& t) {
  if (!verify_join_tree(h, t)) throw InvalidInput("canonicalize: not a join tree of the hypergraph");
  const std::size_t m = h.edge_count();
  const Components comps = connected_components(h);

  // Undirected tree adjacency restricted to edges inside a component; a tree
  // spanning several components splits into one tree per component.
  std::vector<std::vector<EdgeId>> adj(m);
  for (EdgeId e = 0; e < m; ++e) {
    const EdgeId p = t.parent[e];
    if (p == kNone || comps.of_edge[p] != comps.of_edge[e]) continue;
    adj[e].push_back(p);
    adj[p].push_back(e);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  CanonicalizeResult out;
  auto& ct = out.tree;
  ct.preorder.reserve(m);
  ct.preorder_index.assign(m, kNone);

  std::vector<EdgeId> stack;
  for (const auto& members : comps.edges) {
    stack.push_back(members.front());
    ct.preorder_index[members.front()] = 0;  // visited marker, fixed below
    while (!stack.empty()) {
      const EdgeId e = stack.back();
      stack.pop_back();
      ct.preorder_index[e] = static_cast<std::uint32_t>(ct.preorder.size());
      ct.preorder.push_back(e);
      for (auto it = adj[e].rbegin(); it != adj[e].rend(); ++it) {
        if (ct.preorder_index[*it] == kNone) {
          ct.preorder_index[*it] = 0;
          stack.push_back(*it);
        }
      }
    }
  }

  ct.lambda.assign(h.vertex_count(), kNone);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (VertexId v : h.edge(ct.preorder[i])) {
      if (ct.lambda[v] == kNone) ct.lambda[v] = i;
    }
  }

  ct.tree.parent.assign(m, kNone);
  for (std::uint32_t i = 0; i < m; ++i) {
    const EdgeId e = ct.preorder[i];
    Separator sep;
    std::uint32_t j = kNone;
    for (VertexId v : h.edge(e)) {
      if (ct.lambda[v] < i) {
        sep.vertices.push_back(v);
        j = (j == kNone) ? ct.lambda[v] : std::max(j, ct.lambda[v]);
      }
    }
    if (j == kNone) continue;  // component root
    sep.parent = ct.preorder[j];
    sep.child = e;
    ct.tree.parent[e] = sep.parent;
    out.separators.separators.push_back(std::move(sep));
  }
  return out;
}

SeparatorHypergraph separator_hypergraph(const Hypergraph& h) {
  auto t = build_join_tree(h);
  if (!t) throw NotAcyclic("separator hypergraph requires an alpha-acyclic hypergraph");
  return canonicalize(h, *t).separators;
}

}  // namespace hyperacyclic
