#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "hyperacyclic/hypergraph.hpp"

namespace hyperacyclic {

enum class GenClass { alpha, beta, gamma, interval, star, general };

std::string_view to_string(GenClass c);
/// Throws InvalidInput on an unknown name.
GenClass parse_gen_class(std::string_view name);

struct GenSpec {
  GenClass kind = GenClass::alpha;
  std::size_t n = 8;  // vertices
  std::size_t m = 8;  // hyperedges
  std::uint64_t seed = 0;
  /// In [0, 1]. Meaning per class: subtree radius (alpha), block length
  /// (interval), twin probability (gamma), pin probability (general).
  double density = 0.3;
};

/// Seeded 64-bit generator; `substream(k)` derives independent generators.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  static Rng substream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  bool chance(double p);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Random tree on the hyperedges; each vertex gets a random ball in it.
/// n vertices exactly, hyperedge ids shuffled. Throws InvalidInput if
/// n or m is 0 or density is outside [0, 1].
Hypergraph gen_alpha(const GenSpec& spec);

/// Each vertex gets a random block of consecutive positions; hyperedge ids
/// are a random permutation of the positions.
Hypergraph gen_interval(const GenSpec& spec);

/// Incidence graph grown from one vertex-hyperedge pair by pendant and
/// false-twin additions; density is the twin probability.
Hypergraph gen_gamma(const GenSpec& spec);

struct BetaSample {
  Hypergraph graph;
  unsigned attempts = 0;
  /// Every alpha sample was rejected and the gamma generator was used.
  bool fell_back = false;
};

/// Rejection-samples gen_alpha (with derived seeds) through the beta
/// recognizer, at most `max_attempts` times, then falls back to gen_gamma.
BetaSample gen_beta_sample(const GenSpec& spec, unsigned max_attempts = 64);
Hypergraph gen_beta(const GenSpec& spec);

/// E_i = {u, v_i}, i = 1..m, with vertex names u, v1, ..., vm.
Hypergraph gen_star(std::size_t m);

/// Each (vertex, hyperedge) pin present with probability density; empty
/// hyperedges and isolated vertices are patched with one random pin.
Hypergraph gen_general(const GenSpec& spec);

/// Dispatch on spec.kind (star uses spec.m only).
Hypergraph generate(const GenSpec& spec);

}  // namespace hyperacyclic
