#include "hyperacyclic/recognition.hpp"

#include "hyperacyclic/join_tree.hpp"
#include "hyperacyclic/orderings.hpp"

namespace hyperacyclic {

bool is_alpha_acyclic(const Hypergraph& h) { return build_join_tree(h).has_value(); }

bool is_hypertree(const Hypergraph& h) { return build_join_tree(dual(h)).has_value(); }

bool is_beta_acyclic(const Hypergraph& h) { return is_gamma_free(h, doubly_lexical_order(h)); }

bool is_gamma_acyclic(const Hypergraph& h) { return pruning_sequence(h).has_value(); }

bool is_interval(const Hypergraph& h) { return interval_order(h).has_value(); }

HypergraphClass classify(const Hypergraph& h) {
  HypergraphClass c;
  c.alpha = is_alpha_acyclic(h);
  c.hypertree = is_hypertree(h);
  c.beta = is_beta_acyclic(h);
  c.gamma = is_gamma_acyclic(h);
  c.interval = is_interval(h);
  return c;
}

}  // namespace hyperacyclic
