#pragma once

#include <compare>
#include <string>
#include <vector>

#include "plumbkit/contfrac.hpp"

// Disjoint unions of weighted paths. Weights are stored as positive
// magnitudes (>= 2) on both sides of the duality; the convention tag says
// whether they are magnitudes of negative plumbing weights or the positive
// dual-side weights.

namespace plumbkit {

enum class Convention { Plumbing, Dual };

struct VertexId {
  int comp = 0;
  int pos = 0;
  auto operator<=>(const VertexId&) const = default;
};

struct LinearGraph {
  std::vector<std::vector<int>> components;
  Convention convention = Convention::Plumbing;

  LinearGraph() = default;
  LinearGraph(std::vector<std::vector<int>> comps, Convention conv);

  int vertex_count() const;
  int weight(VertexId v) const { return components[v.comp][v.pos]; }
  int degree(VertexId v) const;
  bool is_leaf(VertexId v) const { return degree(v) <= 1; }

  // flat index <-> vertex id, component-major
  int flat(VertexId v) const;
  VertexId unflat(int idx) const;
  std::vector<VertexId> vertices() const;

  bool operator==(const LinearGraph&) const = default;
  auto operator<=>(const LinearGraph&) const = default;
};

struct AdjustedView {
  LinearGraph graph;
  std::vector<std::vector<int>> adjusted;  // w'(v) = w(v) - d(v)
};

using Pattern = LinearGraph;

AdjustedView adjusted_weights(const LinearGraph& g);
std::vector<VertexId> bad_vertices(const LinearGraph& g);

// Induced subgraph containment/counting: a vertex subset S of the host
// matches the pattern when the components of host|S (the maximal runs of S)
// equal the pattern's components as a multiset, up to reversing each path.
bool contains_induced(const LinearGraph& host, const Pattern& pattern);
std::vector<std::vector<int>> induced_occurrences(const LinearGraph& host,
                                                  const Pattern& pattern);  // sorted flat-id subsets
long long count_induced(const LinearGraph& host, const std::vector<Pattern>& patterns);

// Each component replaced by min(itself, reversal), components sorted.
LinearGraph canonical_form(const LinearGraph& g);

// Text format: components separated by ';', weights by ','. Leading '-' on a
// weight is accepted and ignored (magnitudes are stored).
LinearGraph parse_graph(const std::string& text, Convention conv);
std::string format_graph(const LinearGraph& g);

LinearGraph chain(const ChainWeights& weights, Convention conv);

}  // namespace plumbkit
