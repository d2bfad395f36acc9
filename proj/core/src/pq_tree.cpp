#include "pq_tree.hpp"

#include <algorithm>
#include <utility>

namespace hyperacyclic::detail {

namespace {

void set_nil_slot(std::uint32_t (&sib)[2], std::uint32_t value, std::uint32_t nil) {
  if (sib[0] == nil) {
    sib[0] = value;
  } else {
    sib[1] = value;
  }
}

}  // namespace

PQTree::PQTree(std::size_t size) : size_(size) {
  nodes_.reserve(2 * size + 1);
  for (std::size_t i = 0; i < size; ++i) new_node(Type::leaf);
  if (size == 1) {
    root_ = 0;
  } else if (size >= 2) {
    root_ = new_node(Type::p);
    for (std::size_t i = size; i-- > 0;) p_add(root_, static_cast<std::uint32_t>(i));
  }
}

std::uint32_t PQTree::new_node(Type type) {
  nodes_.emplace_back();
  nodes_.back().type = type;
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t PQTree::find(std::uint32_t h) {
  while (uf_parent_[h] != h) {
    uf_parent_[h] = uf_parent_[uf_parent_[h]];
    h = uf_parent_[h];
  }
  return h;
}

std::uint32_t PQTree::new_handle(std::uint32_t q) {
  const auto h = static_cast<std::uint32_t>(uf_parent_.size());
  uf_parent_.push_back(h);
  uf_owner_.push_back(q);
  if (nodes_[q].set == kNil) {
    nodes_[q].set = h;
  } else {
    uf_parent_[h] = find(nodes_[q].set);
  }
  return h;
}

void PQTree::merge_sets(std::uint32_t into_q, std::uint32_t from_q) {
  const std::uint32_t from = nodes_[from_q].set;
  if (from == kNil) return;
  if (nodes_[into_q].set == kNil) {
    nodes_[into_q].set = from;
    uf_owner_[find(from)] = into_q;
    return;
  }
  const std::uint32_t a = find(nodes_[into_q].set);
  const std::uint32_t b = find(from);
  if (a != b) uf_parent_[b] = a;
  uf_owner_[a] = into_q;
}

std::uint32_t PQTree::parent_of(std::uint32_t x) {
  switch (nodes_[x].slot) {
    case Slot::in_p: return nodes_[x].parent;
    case Slot::in_q: return uf_owner_[find(nodes_[x].handle)];
    case Slot::root: break;
  }
  return kNil;
}

void PQTree::p_add(std::uint32_t p, std::uint32_t child) {
  Node& c = nodes_[child];
  c.slot = Slot::in_p;
  c.parent = p;
  c.handle = kNil;
  c.sib[0] = kNil;
  c.sib[1] = nodes_[p].first;
  if (nodes_[p].first != kNil) nodes_[nodes_[p].first].sib[0] = child;
  nodes_[p].first = child;
  ++nodes_[p].child_count;
}

void PQTree::p_remove(std::uint32_t child) {
  Node& c = nodes_[child];
  const std::uint32_t p = c.parent;
  const std::uint32_t prev = c.sib[0];
  const std::uint32_t next = c.sib[1];
  if (prev == kNil) {
    nodes_[p].first = next;
  } else {
    nodes_[prev].sib[1] = next;
  }
  if (next != kNil) nodes_[next].sib[0] = prev;
  --nodes_[p].child_count;
  c.sib[0] = c.sib[1] = kNil;
  c.slot = Slot::root;
  c.parent = kNil;
}

void PQTree::q_append(std::uint32_t q, int side, std::uint32_t child) {
  const std::uint32_t h = new_handle(q);
  Node& c = nodes_[child];
  c.slot = Slot::in_q;
  c.handle = h;
  c.parent = kNil;
  const std::uint32_t old = nodes_[q].end[side];
  c.sib[0] = old;
  c.sib[1] = kNil;
  if (old == kNil) {
    nodes_[q].end[0] = nodes_[q].end[1] = child;
  } else {
    set_nil_slot(nodes_[old].sib, child, kNil);
    nodes_[q].end[side] = child;
  }
  ++nodes_[q].child_count;
}

void PQTree::replace_sib(std::uint32_t node, std::uint32_t old_sib, std::uint32_t new_sib) {
  auto& sib = nodes_[node].sib;
  if (sib[0] == old_sib) {
    sib[0] = new_sib;
  } else if (sib[1] == old_sib) {
    sib[1] = new_sib;
  }
}

void PQTree::replace_in_parent(std::uint32_t old_node, std::uint32_t new_node) {
  const Slot slot = nodes_[old_node].slot;
  const std::uint32_t s0 = nodes_[old_node].sib[0];
  const std::uint32_t s1 = nodes_[old_node].sib[1];
  nodes_[new_node].slot = slot;
  nodes_[new_node].sib[0] = s0;
  nodes_[new_node].sib[1] = s1;
  switch (slot) {
    case Slot::root:
      root_ = new_node;
      break;
    case Slot::in_p: {
      const std::uint32_t p = nodes_[old_node].parent;
      nodes_[new_node].parent = p;
      if (s0 == kNil) {
        nodes_[p].first = new_node;
      } else {
        nodes_[s0].sib[1] = new_node;
      }
      if (s1 != kNil) nodes_[s1].sib[0] = new_node;
      break;
    }
    case Slot::in_q: {
      const std::uint32_t q = parent_of(old_node);
      nodes_[new_node].handle = nodes_[old_node].handle;
      if (s0 != kNil) replace_sib(s0, old_node, new_node);
      if (s1 != kNil) replace_sib(s1, old_node, new_node);
      for (auto& e : nodes_[q].end) {
        if (e == old_node) e = new_node;
      }
      break;
    }
  }
  Node& o = nodes_[old_node];
  o.slot = Slot::root;
  o.sib[0] = o.sib[1] = kNil;
  o.parent = o.handle = kNil;
}

void PQTree::splice(std::uint32_t q, std::uint32_t child, std::uint32_t toward) {
  const std::uint32_t other = nodes_[child].sib[0] == toward ? nodes_[child].sib[1] : nodes_[child].sib[0];
  const std::uint32_t n1 = nodes_[child].end[1];
  const std::uint32_t n0 = nodes_[child].end[0];
  int end_index = -1;
  if (nodes_[q].end[0] == child) end_index = 0;
  if (nodes_[q].end[1] == child) end_index = 1;

  if (toward != kNil) {
    set_nil_slot(nodes_[n1].sib, toward, kNil);
    replace_sib(toward, child, n1);
  } else {
    nodes_[q].end[end_index] = n1;
  }
  if (other != kNil) {
    set_nil_slot(nodes_[n0].sib, other, kNil);
    replace_sib(other, child, n0);
  } else {
    nodes_[q].end[end_index] = n0;
  }
  merge_sets(q, child);
  nodes_[q].child_count += nodes_[child].child_count - 1;
  Node& c = nodes_[child];
  c.child_count = 0;
  c.end[0] = c.end[1] = kNil;
  c.slot = Slot::root;
  c.sib[0] = c.sib[1] = kNil;
}

std::uint32_t PQTree::group_full(std::uint32_t p) {
  const std::uint32_t count = nodes_[p].full_count;
  if (count == 0) return kNil;
  const std::uint32_t head = nodes_[p].full_head;
  if (count == 1) {
    p_remove(head);
    return head;
  }
  const std::uint32_t y = new_node(Type::p);
  for (std::uint32_t f = head; f != kNil;) {
    const std::uint32_t next = nodes_[f].next_in_list;
    p_remove(f);
    p_add(y, f);
    f = next;
  }
  nodes_[y].stamp = round_;
  nodes_[y].label = Label::full;
  return y;
}

std::uint32_t PQTree::single_empty_child(std::uint32_t p) {
  if (nodes_[p].child_count != 1) return kNil;
  const std::uint32_t e = nodes_[p].first;
  p_remove(e);
  return e;
}

bool PQTree::is_pertinent(std::uint32_t x) const {
  return x != kNil && nodes_[x].stamp == round_ && nodes_[x].label != Label::empty;
}

// Returns the node that now stands for x in its parent, or kNil on failure.
// Templates P0-P6 and Q0-Q3; the Q cases share one consecutive-block check.
std::uint32_t PQTree::apply_template(std::uint32_t x, bool is_root) {
  if (nodes_[x].type == Type::leaf) {
    nodes_[x].label = Label::full;
    return x;
  }
  return nodes_[x].type == Type::p ? template_p(x, is_root) : template_q(x, is_root);
}

std::uint32_t PQTree::template_p(std::uint32_t x, bool is_root) {
  if (nodes_[x].partial_count == 0 && nodes_[x].full_count == nodes_[x].child_count) {
    nodes_[x].label = Label::full;
    return x;
  }
  const std::uint32_t partials = nodes_[x].partial_count;
  if (partials > 2 || (!is_root && partials > 1)) return kNil;

  if (is_root) {
    if (partials == 0) {
      if (nodes_[x].full_count >= 2) {
        const std::uint32_t f = group_full(x);
        p_add(x, f);
      }
      return x;
    }
    const std::uint32_t f = group_full(x);
    const std::uint32_t c1 = nodes_[x].partial[0];
    if (f != kNil) q_append(c1, 1, f);
    if (partials == 2) {
      const std::uint32_t c2 = nodes_[x].partial[1];
      p_remove(c2);
      const std::uint32_t a = nodes_[c1].end[1];
      const std::uint32_t b = nodes_[c2].end[1];
      set_nil_slot(nodes_[a].sib, b, kNil);
      set_nil_slot(nodes_[b].sib, a, kNil);
      nodes_[c1].end[1] = nodes_[c2].end[0];
      merge_sets(c1, c2);
      nodes_[c1].child_count += nodes_[c2].child_count;
      nodes_[c2].child_count = 0;
    }
    if (nodes_[x].child_count == 1) {
      p_remove(c1);
      replace_in_parent(x, c1);
    }
    return c1;
  }

  const std::uint32_t f = group_full(x);
  if (partials == 0) {
    const std::uint32_t z = new_node(Type::q);
    replace_in_parent(x, z);
    std::uint32_t e = single_empty_child(x);
    if (e == kNil) e = x;
    q_append(z, 0, e);
    q_append(z, 1, f);
    nodes_[z].stamp = round_;
    nodes_[z].label = Label::partial;
    return z;
  }
  const std::uint32_t c = nodes_[x].partial[0];
  p_remove(c);
  replace_in_parent(x, c);
  if (nodes_[x].child_count > 0) {
    std::uint32_t e = single_empty_child(x);
    if (e == kNil) e = x;
    q_append(c, 0, e);
  }
  if (f != kNil) q_append(c, 1, f);
  nodes_[c].label = Label::partial;
  return c;
}

std::uint32_t PQTree::template_q(std::uint32_t x, bool is_root) {
  Node& nx = nodes_[x];
  if (nx.partial_count == 0 && nx.full_count == nx.child_count) {
    nx.label = Label::full;
    return x;
  }
  const std::uint32_t partials = nx.partial_count;
  if (partials > 2 || (!is_root && partials > 1)) return kNil;

  std::uint32_t pert[2] = {kNil, kNil};  // block boundaries
  std::uint32_t boundary_count = 0;
  std::uint64_t adjacency = 0;
  std::uint32_t k = 0;
  auto visit = [&](std::uint32_t y) -> bool {
    ++k;
    const std::uint32_t nb = static_cast<std::uint32_t>(is_pertinent(nodes_[y].sib[0])) +
                             static_cast<std::uint32_t>(is_pertinent(nodes_[y].sib[1]));
    adjacency += nb;
    if (nb < 2) {
      if (boundary_count == 2) return false;
      pert[boundary_count++] = y;
    } else if (nodes_[y].label != Label::full) {
      return false;
    }
    return true;
  };
  for (std::uint32_t y = nx.full_head; y != kNil; y = nodes_[y].next_in_list) {
    if (!visit(y)) return kNil;
  }
  for (std::uint32_t i = 0; i < partials; ++i) {
    if (!visit(nodes_[x].partial[i])) return kNil;
  }
  if (adjacency != 2 * (static_cast<std::uint64_t>(k) - 1)) return kNil;

  auto pertinent_sibling = [&](std::uint32_t y) {
    return is_pertinent(nodes_[y].sib[0]) ? nodes_[y].sib[0] : nodes_[y].sib[1];
  };
  auto is_end = [&](std::uint32_t y) { return nodes_[y].sib[0] == kNil || nodes_[y].sib[1] == kNil; };

  if (is_root) {
    if (k < 2) return kNil;
    for (std::uint32_t i = 0; i < boundary_count; ++i) {
      const std::uint32_t y = pert[i];
      if (nodes_[y].label == Label::partial) splice(x, y, pertinent_sibling(y));
    }
    return x;
  }

  std::uint32_t outer = kNil;
  std::uint32_t inner = kNil;
  if (k == 1) {
    if (!is_end(pert[0])) return kNil;
    outer = pert[0];
  } else {
    for (std::uint32_t i = 0; i < 2; ++i) {
      if (outer == kNil && is_end(pert[i]) && nodes_[pert[i]].label == Label::full) {
        outer = pert[i];
        inner = pert[1 - i];
      }
    }
    if (outer == kNil) return kNil;
  }
  const int side = nodes_[x].end[0] == outer ? 0 : 1;
  if (k == 1) {
    if (nodes_[outer].label == Label::partial) splice(x, outer, kNil);
  } else if (nodes_[inner].label == Label::partial) {
    splice(x, inner, pertinent_sibling(inner));
  }
  if (side == 0) std::swap(nodes_[x].end[0], nodes_[x].end[1]);
  nodes_[x].label = Label::partial;
  return x;
}

bool PQTree::reduce(std::span<const std::uint32_t> elements) {
  if (elements.size() <= 1) return true;
  ++round_;
  const auto target = static_cast<std::uint32_t>(elements.size());

  auto init = [&](std::uint32_t x) {
    Node& n = nodes_[x];
    n.stamp = round_;
    n.label = Label::empty;
    n.pparent = kNil;
    n.expected = n.reported = n.leaves = 0;
    n.full_head = kNil;
    n.full_count = 0;
    n.partial[0] = n.partial[1] = kNil;
    n.partial_count = 0;
    n.next_in_list = kNil;
  };

  // Bubble: climb from the leaves one step per queued node until every
  // path has met another; parents are resolved through the handles.
  std::vector<std::uint32_t> queue;
  queue.reserve(2 * elements.size());
  for (std::uint32_t e : elements) {
    init(e);
    nodes_[e].leaves = 1;
    queue.push_back(e);
  }
  for (std::size_t head = 0;;) {
    const std::uint32_t x = queue[head++];
    if (head == queue.size()) break;
    const std::uint32_t p = parent_of(x);
    if (p == kNil) {
      queue.push_back(x);
      continue;
    }
    nodes_[x].pparent = p;
    if (nodes_[p].stamp != round_) {
      init(p);
      queue.push_back(p);
    }
    ++nodes_[p].expected;
  }

  // Reduce bottom-up; a node is ready once all its pertinent children are.
  std::vector<std::uint32_t> ready(elements.begin(), elements.end());
  while (!ready.empty()) {
    const std::uint32_t x = ready.back();
    ready.pop_back();
    const bool is_root = nodes_[x].leaves == target;
    const std::uint32_t result = apply_template(x, is_root);
    if (result == kNil) return false;
    if (is_root) return true;

    const std::uint32_t p = nodes_[x].pparent;
    nodes_[p].leaves += nodes_[x].leaves;
    if (nodes_[result].label == Label::full) {
      nodes_[result].next_in_list = nodes_[p].full_head;
      nodes_[p].full_head = result;
      ++nodes_[p].full_count;
    } else {
      nodes_[p].partial[nodes_[p].partial_count++ & 1] = result;
      if (nodes_[p].partial_count > 2) return false;
    }
    if (++nodes_[p].reported == nodes_[p].expected) ready.push_back(p);
  }
  return false;
}

std::vector<std::uint32_t> PQTree::frontier() const {
  std::vector<std::uint32_t> out;
  out.reserve(size_);
  if (root_ == kNil) return out;
  std::vector<std::uint32_t> stack{root_};
  std::vector<std::uint32_t> kids;
  while (!stack.empty()) {
    const std::uint32_t x = stack.back();
    stack.pop_back();
    const Node& n = nodes_[x];
    if (n.type == Type::leaf) {
      out.push_back(x);
      continue;
    }
    kids.clear();
    if (n.type == Type::p) {
      for (std::uint32_t c = n.first; c != kNil; c = nodes_[c].sib[1]) kids.push_back(c);
    } else {
      std::uint32_t prev = kNil;
      for (std::uint32_t c = n.end[0]; c != kNil;) {
        kids.push_back(c);
        const std::uint32_t next = nodes_[c].sib[0] == prev ? nodes_[c].sib[1] : nodes_[c].sib[0];
        prev = c;
        c = next;
      }
    }
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

}  // namespace hyperacyclic::detail
