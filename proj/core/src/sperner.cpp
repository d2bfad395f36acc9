#include "hyperacyclic/sperner.hpp"

#include <unordered_set>

#include "hyperacyclic/errors.hpp"
#include "hyperacyclic/join_tree.hpp"

namespace hyperacyclic {

bool sperner_acyclic(const Hypergraph& h) {
  const auto tree = build_join_tree(h);
  if (!tree) throw NotAcyclic("sperner_acyclic: hypergraph is not acyclic");
  // On the tree path from E_i to a superset E_j, the separator next to E_i
  // is E_i itself, so checking every separator against both ends suffices.
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const EdgeId p = tree->parent[e];
    if (p == kNone) continue;
    std::size_t common = 0;
    const auto a = h.edge(e);
    const auto b = h.edge(p);
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
      if (a[i] < b[j]) {
        ++i;
      } else if (b[j] < a[i]) {
        ++j;
      } else {
        ++common, ++i, ++j;
      }
    }
    if (common == a.size() || common == b.size()) return true;
  }
  return false;
}

namespace {

std::vector<std::vector<std::string>> with_new_vertex(const SetFamily& f) {
  if (f.sets.empty()) throw InvalidInput("set family is empty");
  std::vector<std::vector<std::string>> out;
  out.reserve(f.sets.size() + 1);
  for (const auto& s : f.sets) {
    if (s.empty()) throw InvalidInput("set family contains an empty set");
    for (const auto& x : s) {
      if (x == kReductionVertex) {
        throw InvalidInput(std::string("element name '") + kReductionVertex + "' is reserved");
      }
    }
    auto& e = out.emplace_back(s);
    e.emplace_back(kReductionVertex);
  }
  return out;
}

}  // namespace

Hypergraph reduce_family_to_acyclic(const SetFamily& f) {
  auto edges = with_new_vertex(f);
  std::vector<std::string> all;
  std::unordered_set<std::string> seen;
  for (const auto& s : f.sets) {
    for (const auto& x : s) {
      if (seen.insert(x).second) all.push_back(x);
    }
  }
  all.emplace_back(kReductionVertex);
  edges.push_back(std::move(all));
  return Hypergraph::from_named_edges(edges);
}

Hypergraph reduce_family_to_hypertree(const SetFamily& f) { return Hypergraph::from_named_edges(with_new_vertex(f)); }

}  // namespace hyperacyclic
