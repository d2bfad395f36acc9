#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "hyperacyclic/errors.hpp"
#include "hyperacyclic/oracle.hpp"
#include "hyperacyclic/orderings.hpp"
#include "pq_tree.hpp"
#include "support.hpp"

using namespace hyperacyclic;
using testsupport::for_each_small;
using testsupport::random_instance;

namespace {

/// Dense 0/1 matrix in the given order, rows = vertices.
std::vector<std::vector<int>> ordered_matrix(const Hypergraph& h, const DoublyLexOrder& ord) {
  std::vector<std::vector<int>> a(h.vertex_count(), std::vector<int>(h.edge_count(), 0));
  for (std::size_t r = 0; r < ord.vertex_order.size(); ++r) {
    for (std::size_t c = 0; c < ord.edge_order.size(); ++c) {
      a[r][c] = h.contains(ord.edge_order[c], ord.vertex_order[r]) ? 1 : 0;
    }
  }
  return a;
}

/// Lexicographic comparison with the last entry most significant.
bool lex_le_from_back(const std::vector<int>& x, const std::vector<int>& y) {
  return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend()) || x == y;
}

bool doubly_lexical_by_matrix(const std::vector<std::vector<int>>& a) {
  if (a.empty()) return true;
  for (std::size_t r = 1; r < a.size(); ++r) {
    if (!lex_le_from_back(a[r - 1], a[r])) return false;
  }
  const std::size_t cols = a[0].size();
  for (std::size_t c = 1; c < cols; ++c) {
    std::vector<int> x, y;
    for (const auto& row : a) {
      x.push_back(row[c - 1]);
      y.push_back(row[c]);
    }
    if (!lex_le_from_back(x, y)) return false;
  }
  return true;
}

bool gamma_free_by_matrix(const std::vector<std::vector<int>>& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t r1 = 0; r1 < rows; ++r1)
    for (std::size_t r2 = r1 + 1; r2 < rows; ++r2)
      for (std::size_t c1 = 0; c1 < cols; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < cols; ++c2)
          if (a[r1][c1] && a[r1][c2] && a[r2][c1] && !a[r2][c2]) return false;
  return true;
}

/// Replays a pruning sequence on the incidence graph.
void check_pruning_sequence(const Hypergraph& h, const PruningSequence& seq) {
  const std::size_t n = h.vertex_count();
  auto id = [&](IncidenceNode x) { return x.is_edge ? n + x.id : x.id; };
  const auto adj = incidence_graph(h).adjacency();
  REQUIRE(seq.steps.size() == n + h.edge_count());
  std::vector<bool> added(n + h.edge_count(), false);
  auto live = [&](std::size_t x) {
    std::vector<NodeId> out;
    for (auto y : adj[x]) {
      if (added[y]) out.push_back(y);
    }
    return out;
  };
  for (const auto& step : seq.steps) {
    const auto x = id(step.node);
    REQUIRE(!added[x]);
    switch (step.kind) {
      case PruneKind::base:
        if (step.witness.id != kNone) CHECK(live(x) == std::vector<NodeId>{static_cast<NodeId>(id(step.witness))});
        else CHECK(live(x).empty());
        break;
      case PruneKind::pendant:
        CHECK(live(x) == std::vector<NodeId>{static_cast<NodeId>(id(step.witness))});
        break;
      case PruneKind::false_twin:
        CHECK(added[id(step.witness)]);
        CHECK(live(x) == live(id(step.witness)));
        break;
      case PruneKind::true_twin:
        FAIL("true twin in a bipartite graph");
    }
    added[x] = true;
  }
}

}  // namespace

TEST_CASE("doubly lexical order is doubly lexical on all small hypergraphs") {
  std::size_t count = 0;
  for_each_small(4, 4, [&](const Hypergraph& h) {
    const auto ord = doubly_lexical_order(h);
    const auto a = ordered_matrix(h, ord);
    REQUIRE(doubly_lexical_by_matrix(a));
    REQUIRE(is_doubly_lexical(h, ord));
    REQUIRE(is_gamma_free(h, ord) == gamma_free_by_matrix(a));
    ++count;
  });
  CHECK(count > 3000);
}

TEST_CASE("doubly lexical order on random hypergraphs") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto h = random_instance(seed % 2 ? GenClass::general : GenClass::alpha, seed, 30);
    const auto ord = doubly_lexical_order(h);
    const auto a = ordered_matrix(h, ord);
    REQUIRE(doubly_lexical_by_matrix(a));
    REQUIRE(is_gamma_free(h, ord) == gamma_free_by_matrix(a));
    // Ranks: equal ranks exactly for equal columns, non-decreasing.
    for (std::size_t c = 1; c < ord.edge_order.size(); ++c) {
      const auto e = ord.edge_order[c - 1], f = ord.edge_order[c];
      const bool same = std::ranges::equal(h.edge(e), h.edge(f));
      REQUIRE(ord.edge_rank[f] == ord.edge_rank[e] + (same ? 0 : 1));
    }
  }
}

TEST_CASE("doubly lexical order on larger instances of every class") {
  const GenClass kinds[] = {GenClass::alpha, GenClass::gamma, GenClass::interval, GenClass::general, GenClass::beta};
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    const auto kind = kinds[seed % 5];
    const auto h = random_instance(kind, seed, 90, kind == GenClass::general ? 0.2 : 0.9);
    const auto ord = doubly_lexical_order(h);
    REQUIRE(doubly_lexical_by_matrix(ordered_matrix(h, ord)));
    REQUIRE(is_doubly_lexical(h, ord));
  }
}

TEST_CASE("is_doubly_lexical rejects a wrong order") {
  const auto h = testsupport::subset_chain();
  DoublyLexOrder bad{{0, 1, 2}, {0, 1, 2}, {}};
  DoublyLexOrder good{{2, 1, 0}, {0, 1, 2}, {}};
  CHECK(is_doubly_lexical(h, good));
  CHECK(!is_doubly_lexical(h, bad));
  DoublyLexOrder broken{{0, 0, 1}, {0, 1, 2}, {}};
  CHECK_THROWS_AS(is_gamma_free(h, broken), InvalidInput);
}

TEST_CASE("pruning sequence exists iff the incidence graph is distance-hereditary") {
  std::size_t yes = 0, no = 0;
  for_each_small(4, 4, [&](const Hypergraph& h) {
    if (h.vertex_count() + h.edge_count() > 14) return;
    const auto seq = pruning_sequence(h);
    REQUIRE(seq.has_value() == oracle::gamma_naive(h));
    if (seq) {
      check_pruning_sequence(h, *seq);
      ++yes;
    } else {
      ++no;
    }
  });
  CHECK(yes > 0);
  CHECK(no > 0);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto kind = seed % 3 == 0 ? GenClass::gamma : (seed % 3 == 1 ? GenClass::alpha : GenClass::general);
    const auto h = random_instance(kind, seed, 7);
    if (h.vertex_count() + h.edge_count() > 14) continue;
    const auto seq = pruning_sequence(h);
    REQUIRE(seq.has_value() == oracle::gamma_naive(h));
    if (seq) check_pruning_sequence(h, *seq);
  }
}

TEST_CASE("pruning sequence on larger gamma instances replays") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto h = random_instance(GenClass::gamma, seed, 60, 0.9);
    const auto seq = pruning_sequence(h);
    REQUIRE(seq.has_value());
    check_pruning_sequence(h, *seq);
  }
}

TEST_CASE("pruning sequence fails on C6 incidence") {
  // Three hyperedges pairwise sharing one vertex form a 6-cycle.
  CHECK(!pruning_sequence(testsupport::triangle()).has_value());
}

TEST_CASE("interval order exists iff some permutation is consecutive") {
  std::size_t yes = 0, no = 0;
  for_each_small(4, 5, [&](const Hypergraph& h) {
    const auto ord = interval_order(h);
    REQUIRE(ord.has_value() == oracle::interval_naive(h));
    if (ord) {
      REQUIRE(make_interval_order(h, ord->edge_order).has_value());
      ++yes;
    } else {
      ++no;
    }
  });
  CHECK(yes > 0);
  CHECK(no > 0);
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto kind = seed % 2 ? GenClass::interval : GenClass::alpha;
    const auto h = random_instance(kind, seed, 8);
    const auto ord = interval_order(h);
    REQUIRE(ord.has_value() == oracle::interval_naive(h));
    if (kind == GenClass::interval) REQUIRE(ord.has_value());
  }
}

TEST_CASE("interval order of generated interval hypergraphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto h = random_instance(GenClass::interval, seed, 200, 0.9);
    const auto ord = interval_order(h);
    REQUIRE(ord.has_value());
  }
}

TEST_CASE("PQ tree agrees with brute force over permutations") {
  Rng rng(7);
  for (int round = 0; round < 3000; ++round) {
    const std::size_t size = 1 + rng.below(6);
    const std::size_t constraints = rng.below(5);
    std::vector<std::vector<std::uint32_t>> sets;
    for (std::size_t c = 0; c < constraints; ++c) {
      std::vector<std::uint32_t> s;
      for (std::uint32_t x = 0; x < size; ++x) {
        if (rng.chance(0.5)) s.push_back(x);
      }
      if (!s.empty()) sets.push_back(std::move(s));
    }

    auto satisfies = [&](const std::vector<std::uint32_t>& order) {
      std::vector<std::uint32_t> pos(size);
      for (std::uint32_t i = 0; i < size; ++i) pos[order[i]] = i;
      for (const auto& s : sets) {
        std::uint32_t lo = size, hi = 0;
        for (auto x : s) {
          lo = std::min(lo, pos[x]);
          hi = std::max(hi, pos[x]);
        }
        if (hi - lo + 1 != s.size()) return false;
      }
      return true;
    };
    std::vector<std::uint32_t> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    bool exists = false;
    do {
      exists = exists || satisfies(perm);
    } while (!exists && std::next_permutation(perm.begin(), perm.end()));

    detail::PQTree tree(size);
    bool ok = true;
    for (const auto& s : sets) ok = ok && tree.reduce(s);
    REQUIRE(ok == exists);
    if (ok) {
      const auto front = tree.frontier();
      REQUIRE(front.size() == size);
      REQUIRE(satisfies(front));
    }
  }
}

TEST_CASE("PQ tree on larger random interval systems") {
  Rng rng(11);
  for (int round = 0; round < 300; ++round) {
    const std::size_t size = 2 + rng.below(60);
    std::vector<std::uint32_t> hidden(size);
    std::iota(hidden.begin(), hidden.end(), 0);
    std::shuffle(hidden.begin(), hidden.end(), rng.engine());
    detail::PQTree tree(size);
    std::vector<std::vector<std::uint32_t>> sets;
    for (int c = 0; c < 40; ++c) {
      const auto a = rng.below(size);
      const auto len = 1 + rng.below(std::min<std::size_t>(size - a, 8));
      std::vector<std::uint32_t> s(hidden.begin() + a, hidden.begin() + a + len);
      std::sort(s.begin(), s.end());
      REQUIRE(tree.reduce(s));
      sets.push_back(std::move(s));
    }
    const auto front = tree.frontier();
    std::vector<std::uint32_t> pos(size);
    for (std::uint32_t i = 0; i < size; ++i) pos[front[i]] = i;
    for (const auto& s : sets) {
      std::uint32_t lo = size, hi = 0;
      for (auto x : s) {
        lo = std::min(lo, pos[x]);
        hi = std::max(hi, pos[x]);
      }
      REQUIRE(hi - lo + 1 == s.size());
    }
  }
}
