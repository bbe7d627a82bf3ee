#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "plumbkit/embeddings.hpp"

// Property X_k decisions, the embedding-extension constructions, vertex
// shallow/deep classification, and bounded mining of minimal forbidden
// configurations.

namespace plumbkit {

struct XkVerdict {
  std::vector<LensSpace> lens_spaces;  // empty when run directly on a graph
  int k = 0;
  long long n_k = 0;
  bool satisfies = false;
  std::optional<Embedding> witness;  // present iff satisfies == false
};

XkVerdict property_xk(const std::vector<LensSpace>& lens, int k);
XkVerdict property_xk_graph(const LinearGraph& plumbing, int k);

// One plumbing-side vertex added to the graph, phrased as the corresponding
// operation on a dual-side embedding (the four cases of the extension
// construction):
//   Isolated(w)      new plumbing component of weight -w
//   Leaf(at, w)      new leaf next to the plumbing chain end whose dual leaf is `at`
//   Bridge(u1,u2,w)  new vertex of weight -w (w >= 3) joining two components
//   Merge(u1,u2)     new -2 vertex joining two components; dual leaves merge
struct ExtIsolated {
  int w;
};
struct ExtLeaf {
  VertexId at;
  int w;
};
struct ExtBridge {
  VertexId u1, u2;
  int w;
};
struct ExtMerge {
  VertexId u1, u2;
};
using Extension = std::variant<ExtIsolated, ExtLeaf, ExtBridge, ExtMerge>;

Embedding extend_embedding(const Embedding& e, const Extension& ext);

enum class VertexClass { Shallow, Deep, Neither1, Neither2 };

std::vector<VertexClass> classify_vertices(const LinearGraph& plumbing);  // flat order

// Fails X_k while every proper induced subgraph satisfies it.
bool verify_minimal_forbidden(const LinearGraph& config, int k);

// All canonical-form configurations within the bounds that are minimal
// forbidden for X_k.
std::vector<LinearGraph> mine_forbidden(int k, int max_weight, int max_vertices);

int kprime(int k);

// k' disjoint -2 vertices.
LinearGraph c_kprime(int k);

// Configurations with k' components, each one of [2], [3,3], [4].
std::vector<LinearGraph> d_kprime(int k);

// All nonempty induced subgraphs of g, in canonical form, deduplicated.
std::vector<LinearGraph> induced_subgraphs(const LinearGraph& g, bool proper_only);

}  // namespace plumbkit
