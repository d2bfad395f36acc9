#pragma once

#include <string>
#include <vector>

#include "hyperacyclic/hypergraph.hpp"

namespace hyperacyclic {

/// Named sets over a shared universe.
struct SetFamily {
  std::vector<std::vector<std::string>> sets;
};

/// Name of the vertex added by the reductions below.
inline constexpr const char* kReductionVertex = "__u";

/// True iff two distinct hyperedges satisfy E_i contained in E_j. Checks, for
/// every separator of a join tree, whether it equals one of its two
/// hyperedges. Throws NotAcyclic.
bool sperner_acyclic(const Hypergraph& h);

/// E_i = S_i plus a new vertex u for every set, followed by one hyperedge
/// holding the whole universe plus u. The star around the last hyperedge is
/// a join tree. Throws InvalidInput on an empty family, an empty set, a
/// repeated element or an element named like u.
Hypergraph reduce_family_to_acyclic(const SetFamily& f);

/// E_i = S_i plus a new vertex u. The result is a hypertree with the same
/// subset relations as the family. Same errors.
Hypergraph reduce_family_to_hypertree(const SetFamily& f);

}  // namespace hyperacyclic
