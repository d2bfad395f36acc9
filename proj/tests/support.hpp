#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperacyclic/generators.hpp"
#include "hyperacyclic/hypergraph.hpp"

namespace testsupport {

using hyperacyclic::Hypergraph;

inline Hypergraph from_lists(const std::vector<std::vector<std::string>>& edges) {
  return Hypergraph::from_named_edges(edges);
}

/// E1={a,b,c}, E2={a,d}, E3={b,c}, E4={c,e,f}.
inline Hypergraph sample() { return from_lists({{"a", "b", "c"}, {"a", "d"}, {"b", "c"}, {"c", "e", "f"}}); }

/// {1} < {1,2} < {1,2,3}.
inline Hypergraph subset_chain() { return from_lists({{"1"}, {"1", "2"}, {"1", "2", "3"}}); }

/// E1={1,2}, E2={2,3}, E3={3,4}.
inline Hypergraph path_chain() { return from_lists({{"1", "2"}, {"2", "3"}, {"3", "4"}}); }

inline Hypergraph triangle() { return from_lists({{"1", "2"}, {"2", "3"}, {"1", "3"}}); }

/// Hypergraph from bit masks over vertices 0..31; unused vertices dropped.
inline Hypergraph from_masks(const std::vector<std::uint32_t>& masks) {
  std::vector<std::vector<hyperacyclic::VertexId>> edges;
  for (auto mask : masks) {
    auto& e = edges.emplace_back();
    for (hyperacyclic::VertexId v = 0; v < 32; ++v) {
      if (mask >> v & 1) e.push_back(v);
    }
  }
  return Hypergraph::compacted(edges);
}

/// Calls fn on every hypergraph with at most `max_n` vertices and between 1
/// and `max_m` hyperedges, hyperedges listed in non-decreasing mask order
/// (each multiset of hyperedges once, up to renaming of hyperedges).
inline void for_each_small(unsigned max_n, unsigned max_m, const std::function<void(const Hypergraph&)>& fn) {
  const std::uint32_t top = (1u << max_n) - 1;
  std::vector<std::uint32_t> masks;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t from) {
    if (!masks.empty()) fn(from_masks(masks));
    if (masks.size() == max_m) return;
    for (std::uint32_t mask = from; mask <= top; ++mask) {
      masks.push_back(mask);
      rec(mask);
      masks.pop_back();
    }
  };
  rec(1);
}

/// Random hypergraph of a class with n, m drawn in [1, max_nm].
inline Hypergraph random_instance(hyperacyclic::GenClass kind, std::uint64_t seed, std::size_t max_nm,
                                  double max_density = 0.6) {
  hyperacyclic::Rng rng = hyperacyclic::Rng::substream(seed, static_cast<std::uint64_t>(kind) + 101);
  hyperacyclic::GenSpec spec;
  spec.kind = kind;
  spec.n = 1 + rng.below(max_nm);
  spec.m = 1 + rng.below(max_nm);
  spec.seed = rng.next();
  spec.density = max_density * static_cast<double>(rng.below(1001)) / 1000.0;
  return hyperacyclic::generate(spec);
}

}  // namespace testsupport
