#include <algorithm>

#include "doctest.h"
#include "hyperacyclic/errors.hpp"
#include "hyperacyclic/generators.hpp"
#include "hyperacyclic/join_tree.hpp"
#include "hyperacyclic/oracle.hpp"
#include "hyperacyclic/sperner.hpp"
#include "hyperacyclic/subset_graph.hpp"
#include "hyperacyclic/union_join.hpp"
#include "support.hpp"

using namespace hyperacyclic;
using testsupport::from_lists;

namespace {

std::vector<std::vector<std::string>> sorted_edges(const Hypergraph& h) {
  std::vector<std::vector<std::string>> out;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto& s = out.emplace_back();
    for (VertexId v : h.edge(e)) s.push_back(h.vertex_name(v));
    std::sort(s.begin(), s.end());
  }
  return out;
}

SetFamily random_family(std::uint64_t seed) {
  Rng rng(seed);
  SetFamily f;
  const auto universe = 1 + rng.below(8);
  const auto sets = 1 + rng.below(7);
  for (std::uint64_t i = 0; i < sets; ++i) {
    auto& s = f.sets.emplace_back();
    for (std::uint64_t x = 0; x < universe; ++x) {
      if (rng.chance(0.4)) s.push_back("s" + std::to_string(x));
    }
    if (s.empty()) s.push_back("s" + std::to_string(rng.below(universe)));
  }
  return f;
}

std::size_t subset_pairs(const SetFamily& f) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    for (std::size_t j = 0; j < f.sets.size(); ++j) {
      if (i == j) continue;
      const auto& a = f.sets[i];
      const auto& b = f.sets[j];
      if (std::all_of(a.begin(), a.end(), [&](const auto& x) { return std::find(b.begin(), b.end(), x) != b.end(); }))
        ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("sperner examples") {
  CHECK(sperner_acyclic(testsupport::sample()));
  CHECK_FALSE(sperner_acyclic(gen_star(3)));
  CHECK_FALSE(sperner_acyclic(from_lists({{"x", "y"}})));
  CHECK(sperner_acyclic(from_lists({{"x"}, {"x"}})));
  CHECK_THROWS_AS(sperner_acyclic(testsupport::triangle()), NotAcyclic);
}

TEST_CASE("sperner agrees with the naive subset graph") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto h = testsupport::random_instance(GenClass::alpha, seed, 30);
    CHECK(sperner_acyclic(h) == (oracle::subset_graph_naive(h).edge_count() > 0));
  }
}

TEST_CASE("reduction to an acyclic hypergraph") {
  const auto h = reduce_family_to_acyclic({{{"1"}, {"2"}}});
  const std::vector<std::vector<std::string>> expected{{"1", "__u"}, {"2", "__u"}, {"1", "2", "__u"}};
  CHECK(sorted_edges(h) == expected);
  JoinTree star;
  star.parent = {2, 2, kNone};
  CHECK(verify_join_tree(h, star));

  const auto nested = reduce_family_to_acyclic({{{"1"}, {"1", "2"}}});
  const auto g = union_join_via_subset(nested, [](const Hypergraph& s) { return subset_graph_baseline(s); });
  CHECK(g.edge_count() > nested.edge_count() - 1);

  CHECK_THROWS_AS(reduce_family_to_acyclic({}), InvalidInput);
  CHECK_THROWS_AS(reduce_family_to_acyclic({{{"1"}, {}}}), InvalidInput);
  CHECK_THROWS_AS(reduce_family_to_acyclic({{{"1", "1"}}}), InvalidInput);
  CHECK_THROWS_AS(reduce_family_to_acyclic({{{kReductionVertex}}}), InvalidInput);
}

TEST_CASE("reduction to a hypertree") {
  const auto h = reduce_family_to_hypertree({{{"1"}, {"2"}}});
  const std::vector<std::vector<std::string>> expected{{"1", "__u"}, {"2", "__u"}};
  CHECK(sorted_edges(h) == expected);
  const auto twins = reduce_family_to_hypertree({{{"1"}, {"1"}}});
  CHECK(twins.edge_count() == 2);
  CHECK(sperner_acyclic(twins));
}

TEST_CASE("reductions preserve the subset structure") {
  const SubsetGraphFn baseline = [](const Hypergraph& s) { return subset_graph_baseline(s); };
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto f = random_family(seed);
    const bool pair = subset_pairs(f) > 0;

    const auto a = reduce_family_to_acyclic(f);
    REQUIRE(build_join_tree(a));
    const auto g = union_join_via_subset(a, baseline);
    CHECK((g.edge_count() == a.edge_count() - 1) == !pair);

    const auto t = reduce_family_to_hypertree(f);
    CHECK(build_join_tree(dual(t)));
    CHECK(oracle::subset_graph_naive(t).edge_count() == subset_pairs(f));
    CHECK(sperner_acyclic(reduce_family_to_acyclic(f)));
  }
}
