#include "hyperacyclic/subset_graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hyperacyclic/errors.hpp"

namespace hyperacyclic {

std::vector<VertexId> BachmanDiagram::reach_vertices(std::uint32_t x) const {
  std::vector<std::vector<std::uint32_t>> out(labels.size());
  for (const auto& [a, b] : edges) out[a].push_back(b);
  std::vector<bool> seen(labels.size(), false);
  std::vector<std::uint32_t> stack{x};
  seen[x] = true;
  std::vector<VertexId> result;
  while (!stack.empty()) {
    const std::uint32_t y = stack.back();
    stack.pop_back();
    result.insert(result.end(), labels[y].begin(), labels[y].end());
    for (std::uint32_t z : out[y]) {
      if (!seen[z]) {
        seen[z] = true;
        stack.push_back(z);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

// ---------------------------------------------------------------------------
// Baseline.

namespace {

constexpr std::size_t kBitMatrixLimit = std::size_t{1} << 30;

DirectedGraph subset_graph_by_candidates(const Hypergraph& h) {
  std::vector<Edge> out;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto pins = h.edge(e);
    const VertexId pivot = *std::min_element(pins.begin(), pins.end(), [&](VertexId a, VertexId b) {
      return h.degree(a) < h.degree(b);
    });
    for (EdgeId f : h.incident(pivot)) {
      if (f == e || h.edge_size(f) < pins.size()) continue;
      if (std::all_of(pins.begin(), pins.end(), [&](VertexId v) { return h.contains(f, v); })) {
        out.emplace_back(e, f);
      }
    }
  }
  return DirectedGraph(h.edge_count(), std::move(out));
}

}  // namespace

DirectedGraph subset_graph_baseline(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  const std::size_t m = h.edge_count();
  if (n * m > kBitMatrixLimit) return subset_graph_by_candidates(h);

  const std::size_t words = (m + 63) / 64;
  std::vector<std::uint64_t> rows(n * words, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (EdgeId e : h.incident(v)) rows[v * words + e / 64] |= std::uint64_t{1} << (e % 64);
  }

  std::vector<Edge> out;
  std::vector<std::uint64_t> acc(words);
  for (EdgeId e = 0; e < m; ++e) {
    const auto pins = h.edge(e);
    std::copy_n(rows.begin() + static_cast<std::ptrdiff_t>(pins[0] * words), words, acc.begin());
    for (std::size_t k = 1; k < pins.size(); ++k) {
      const std::uint64_t* row = rows.data() + pins[k] * words;
      for (std::size_t w = 0; w < words; ++w) acc[w] &= row[w];
    }
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = acc[w]; bits != 0; bits &= bits - 1) {
        const auto f = static_cast<EdgeId>(w * 64 + std::countr_zero(bits));
        if (f != e) out.emplace_back(e, f);
      }
    }
  }
  return DirectedGraph(m, std::move(out));
}

// ---------------------------------------------------------------------------
// Beta.

DirectedGraph subset_graph_beta(const Hypergraph& h) {
  return subset_graph_beta(h, doubly_lexical_order(h));
}

DirectedGraph subset_graph_beta(const Hypergraph& h, const DoublyLexOrder& order) {
  if (!is_gamma_free(h, order)) {
    throw ClassMismatch("beta", "subset_graph_beta: ordered incidence matrix contains Gamma");
  }
  const std::size_t n = h.vertex_count();
  const std::size_t m = h.edge_count();

  std::vector<std::uint32_t> rank = order.edge_rank;
  if (rank.size() != m) {
    rank.assign(m, 0);
    std::uint32_t r = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const EdgeId e = order.edge_order[k];
      if (k > 0) {
        const auto a = h.edge(order.edge_order[k - 1]);
        const auto b = h.edge(e);
        if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) ++r;
      }
      rank[e] = r;
    }
  }

  std::vector<std::uint32_t> row_pos(n);
  for (std::uint32_t i = 0; i < n; ++i) row_pos[order.vertex_order[i]] = i;

  // Incidences of each vertex in column order.
  std::vector<std::size_t> offset(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) offset[v + 1] = offset[v] + h.degree(v);
  std::vector<EdgeId> by_column(h.pin_count());
  std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
  for (EdgeId e : order.edge_order) {
    for (VertexId v : h.edge(e)) by_column[fill[v]++] = e;
  }

  std::vector<Edge> out;
  for (EdgeId e = 0; e < m; ++e) {
    const auto pins = h.edge(e);
    const VertexId top = *std::min_element(pins.begin(), pins.end(), [&](VertexId a, VertexId b) {
      return row_pos[a] < row_pos[b];
    });
    for (std::size_t k = offset[top + 1]; k-- > offset[top];) {
      const EdgeId f = by_column[k];
      if (rank[f] < rank[e]) break;
      if (f != e) out.emplace_back(e, f);
    }
  }
  return DirectedGraph(m, std::move(out));
}

// ---------------------------------------------------------------------------
// Gamma: Bachman diagram.

namespace {

class BachmanBuilder {
 public:
  explicit BachmanBuilder(const Hypergraph& h)
      : n_(h.vertex_count()), m_(h.edge_count()), psi_(n_, kNone), slot_(n_, 0), phi_(m_, kNone) {}

  void apply(const PruningStep& step);
  BachmanDiagram finish() &&;

 private:
  std::uint32_t new_node() {
    members_.emplace_back();
    phi_count_.push_back(0);
    in_deg_.push_back(0);
    out_deg_.push_back(0);
    return static_cast<std::uint32_t>(members_.size() - 1);
  }
  void put_vertex(VertexId v, std::uint32_t x) {
    psi_[v] = x;
    slot_[v] = static_cast<std::uint32_t>(members_[x].size());
    members_[x].push_back(v);
  }
  void take_vertex(VertexId v) {
    auto& list = members_[psi_[v]];
    const VertexId last = list.back();
    list[slot_[v]] = last;
    slot_[last] = slot_[v];
    list.pop_back();
    psi_[v] = kNone;
  }
  void set_phi(EdgeId e, std::uint32_t x) {
    if (phi_[e] != kNone) --phi_count_[phi_[e]];
    phi_[e] = x;
    ++phi_count_[x];
  }
  void add_edge(std::uint32_t from, std::uint32_t to) {
    edges_.emplace_back(from, to);
    ++out_deg_[from];
    ++in_deg_[to];
  }
  void check(bool ok, const char* what) const {
    if (!ok) throw InvalidInput(std::string("build_bachman: malformed pruning sequence: ") + what);
  }

  std::size_t n_, m_;
  std::vector<std::uint32_t> psi_, slot_, phi_;
  std::vector<std::vector<VertexId>> members_;
  std::vector<std::uint32_t> phi_count_, in_deg_, out_deg_;
  std::vector<Edge> edges_;
};

void BachmanBuilder::apply(const PruningStep& step) {
  const IncidenceNode x = step.node;
  const IncidenceNode w = step.witness;
  check(x.id < (x.is_edge ? m_ : n_), "node id out of range");
  check(x.is_edge ? phi_[x.id] == kNone : psi_[x.id] == kNone, "node added twice");

  switch (step.kind) {
    case PruneKind::base:
      if (!x.is_edge) {
        put_vertex(x.id, new_node());
      } else {
        check(!w.is_edge && w.id < n_ && psi_[w.id] != kNone, "base hyperedge without its base vertex");
        set_phi(x.id, psi_[w.id]);
      }
      return;
    case PruneKind::false_twin:
      check(w.is_edge == x.is_edge, "twin of the other kind");
      if (!x.is_edge) {
        check(w.id < n_ && psi_[w.id] != kNone, "twin not yet added");
        put_vertex(x.id, psi_[w.id]);
      } else {
        check(w.id < m_ && phi_[w.id] != kNone, "twin not yet added");
        set_phi(x.id, phi_[w.id]);
      }
      return;
    case PruneKind::pendant:
      check(w.is_edge != x.is_edge, "pendant neighbour of the same kind");
      if (!x.is_edge) {
        check(w.id < m_ && phi_[w.id] != kNone, "neighbour not yet added");
        const std::uint32_t X = phi_[w.id];
        if (phi_count_[X] == 1 && in_deg_[X] == 0) {
          put_vertex(x.id, X);
        } else {
          const std::uint32_t Y = new_node();
          put_vertex(x.id, Y);
          set_phi(w.id, Y);
          add_edge(Y, X);
        }
      } else {
        check(w.id < n_ && psi_[w.id] != kNone, "neighbour not yet added");
        const VertexId v = w.id;
        const std::uint32_t X = psi_[v];
        if (members_[X].size() == 1 && out_deg_[X] == 0) {
          set_phi(x.id, X);
        } else {
          const std::uint32_t Y = new_node();
          take_vertex(v);
          put_vertex(v, Y);
          set_phi(x.id, Y);
          add_edge(X, Y);
        }
      }
      return;
    case PruneKind::true_twin:
      check(false, "true twins cannot occur in a bipartite graph");
  }
}

BachmanDiagram BachmanBuilder::finish() && {
  for (VertexId v = 0; v < n_; ++v) check(psi_[v] != kNone, "vertex missing");
  for (EdgeId e = 0; e < m_; ++e) check(phi_[e] != kNone, "hyperedge missing");

  BachmanDiagram b;
  const std::size_t k = members_.size();
  b.labels.resize(k);
  b.Phi.resize(k);
  for (VertexId v = 0; v < n_; ++v) b.labels[psi_[v]].push_back(v);
  for (EdgeId e = 0; e < m_; ++e) b.Phi[phi_[e]].push_back(e);
  b.psi = std::move(psi_);
  b.phi = std::move(phi_);
  b.edges = std::move(edges_);
  std::sort(b.edges.begin(), b.edges.end());
  return b;
}

}  // namespace

BachmanDiagram build_bachman(const Hypergraph& h) {
  auto seq = pruning_sequence(h);
  if (!seq) throw ClassMismatch("gamma", "build_bachman: incidence graph is not distance-hereditary");
  return build_bachman(h, *seq);
}

BachmanDiagram build_bachman(const Hypergraph& h, const PruningSequence& seq) {
  BachmanBuilder builder(h);
  for (const auto& step : seq.steps) builder.apply(step);
  return std::move(builder).finish();
}

DirectedGraph subset_graph_from_bachman(const BachmanDiagram& b) {
  const std::size_t k = b.node_count();
  std::vector<std::uint32_t> in_offset(k + 1, 0);
  for (const auto& e : b.edges) ++in_offset[e.second + 1];
  for (std::size_t x = 0; x < k; ++x) in_offset[x + 1] += in_offset[x];
  std::vector<std::uint32_t> in_adj(b.edges.size());
  {
    std::vector<std::uint32_t> fill(in_offset.begin(), in_offset.end() - 1);
    for (const auto& [from, to] : b.edges) in_adj[fill[to]++] = from;
  }

  std::vector<Edge> out;
  std::vector<std::uint32_t> seen(k, kNone);
  std::vector<std::uint32_t> stack;
  std::vector<EdgeId> supersets;
  for (std::uint32_t x = 0; x < k; ++x) {
    if (b.Phi[x].empty()) continue;
    supersets.clear();
    stack.assign(1, x);
    seen[x] = x;
    while (!stack.empty()) {
      const std::uint32_t y = stack.back();
      stack.pop_back();
      supersets.insert(supersets.end(), b.Phi[y].begin(), b.Phi[y].end());
      for (std::uint32_t i = in_offset[y]; i < in_offset[y + 1]; ++i) {
        const std::uint32_t z = in_adj[i];
        if (seen[z] != x) {
          seen[z] = x;
          stack.push_back(z);
        }
      }
    }
    for (EdgeId e : b.Phi[x]) {
      for (EdgeId f : supersets) {
        if (f != e) out.emplace_back(e, f);
      }
    }
  }
  return DirectedGraph(b.phi.size(), std::move(out));
}

DirectedGraph subset_graph_gamma(const Hypergraph& h) { return subset_graph_from_bachman(build_bachman(h)); }

// ---------------------------------------------------------------------------
// Interval.

DirectedGraph subset_graph_interval(const Hypergraph& h) {
  auto order = interval_order(h);
  if (!order) throw ClassMismatch("interval", "subset_graph_interval: no consecutive hyperedge order");
  return subset_graph_interval(h, *order);
}

DirectedGraph subset_graph_interval(const Hypergraph& h, const IntervalOrder& order) {
  const std::size_t m = h.edge_count();
  if (order.edge_order.size() != m || order.leftmost.size() != h.vertex_count()) {
    throw InvalidInput("subset_graph_interval: order does not match the hypergraph");
  }
  std::vector<Edge> out;
  for (std::uint32_t i = 0; i < m; ++i) {
    const EdgeId e = order.edge_order[i];
    // E_i lies inside its left neighbour iff every vertex starts further
    // left; the common part then reaches back to the largest start.
    bool left = true, right = true;
    std::uint32_t lo = 0, hi = static_cast<std::uint32_t>(m - 1);
    for (VertexId v : h.edge(e)) {
      if (order.leftmost[v] < i) {
        lo = std::max(lo, order.leftmost[v]);
      } else {
        left = false;
      }
      if (order.rightmost[v] > i) {
        hi = std::min(hi, order.rightmost[v]);
      } else {
        right = false;
      }
    }
    if (left) {
      for (std::uint32_t j = lo; j < i; ++j) out.emplace_back(e, order.edge_order[j]);
    }
    if (right) {
      for (std::uint32_t j = i + 1; j <= hi; ++j) out.emplace_back(e, order.edge_order[j]);
    }
  }
  return DirectedGraph(m, std::move(out));
}

}  // namespace hyperacyclic
