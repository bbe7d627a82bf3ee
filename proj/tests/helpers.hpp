#pragma once

#include <random>
#include <vector>

#include "plumbkit/duality.hpp"
#include "plumbkit/embeddings.hpp"
#include "plumbkit/graphs.hpp"

// Shared test utilities: independent re-validation of embeddings straight
// from the definition, and seeded random graph generators.

namespace plumbkit::testing {

// Checks the Gram constraints of an embedding by direct dot products,
// independently of the enumeration path.
inline bool valid_embedding(const Embedding& e) {
  const LinearGraph& g = e.graph;
  int r = g.vertex_count();
  if (static_cast<int>(e.vectors.size()) != r) return false;
  auto weight_flat = [&](int v) { return g.weight(g.unflat(v)); };
  auto adjacent = [&](int u, int v) {
    VertexId a = g.unflat(u), b = g.unflat(v);
    return a.comp == b.comp && std::abs(a.pos - b.pos) == 1;
  };
  for (int u = 0; u < r; ++u) {
    if (static_cast<int>(e.vectors[u].size()) != e.dim) return false;
    for (int v = u; v < r; ++v) {
      long long dot = 0;
      for (int k = 0; k < e.dim; ++k) dot += static_cast<long long>(e.vectors[u][k]) * e.vectors[v][k];
      long long want = (u == v) ? weight_flat(u) : (adjacent(u, v) ? -1 : 0);
      if (dot != want) return false;
    }
  }
  // full support
  for (int k = 0; k < e.dim; ++k) {
    bool used = false;
    for (int v = 0; v < r && !used; ++v) used = e.vectors[v][k] != 0;
    if (!used) return false;
  }
  return true;
}

inline LinearGraph random_graph(std::mt19937_64& rng, int max_comps, int max_len, int max_weight,
                                Convention conv) {
  std::uniform_int_distribution<int> comps_dist(1, max_comps);
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> w_dist(2, max_weight);
  std::vector<std::vector<int>> comps;
  int n = comps_dist(rng);
  for (int c = 0; c < n; ++c) {
    std::vector<int> comp(len_dist(rng));
    for (auto& w : comp) w = w_dist(rng);
    comps.push_back(std::move(comp));
  }
  return LinearGraph(std::move(comps), conv);
}

}  // namespace plumbkit::testing
