#pragma once

#include "hyperacyclic/hypergraph.hpp"

namespace hyperacyclic {

struct HypergraphClass {
  bool alpha = false;
  bool hypertree = false;
  bool beta = false;
  bool gamma = false;
  bool interval = false;

  friend bool operator==(const HypergraphClass&, const HypergraphClass&) = default;
};

bool is_alpha_acyclic(const Hypergraph& h);
/// The dual is alpha-acyclic.
bool is_hypertree(const Hypergraph& h);
/// The doubly lexically ordered incidence matrix is Gamma-free.
bool is_beta_acyclic(const Hypergraph& h);
/// The incidence graph has a pruning sequence.
bool is_gamma_acyclic(const Hypergraph& h);
/// The hyperedges have a consecutive order.
bool is_interval(const Hypergraph& h);

/// All five flags. Each test is closed under disjoint union, so running it
/// on the whole hypergraph equals the conjunction over components.
HypergraphClass classify(const Hypergraph& h);

}  // namespace hyperacyclic
