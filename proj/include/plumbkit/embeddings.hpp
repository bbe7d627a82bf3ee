#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "plumbkit/graphs.hpp"

// Exhaustive enumeration of embeddings of a dual graph into standard diagonal
// lattices, one representative per orbit of the signed coordinate
// permutations, aggregated over all full-support ambient dimensions; the
// standard / semi-standard classification; and the appendix batch driver.

namespace plumbkit {

struct Embedding {
  LinearGraph graph;  // Dual convention
  int dim = 0;
  std::vector<std::vector<int>> vectors;  // per flat vertex, length dim
};

enum class EmbeddingKind { Standard, SemiStandard, Neither };

struct Classification {
  EmbeddingKind kind = EmbeddingKind::Neither;
  std::optional<VertexId> at;  // the bad vertex witnessing semi-standardness
};

// All embedding classes with ambient dimension <= max_dim (default: the
// trace bound, which is exhaustive). Deterministically ordered.
std::vector<Embedding> enumerate_embeddings(const LinearGraph& dual, int max_dim = -1);

// First embedding of minimal ambient dimension <= max_dim, if any.
std::optional<Embedding> find_embedding(const LinearGraph& dual, int max_dim);

// Classification over the whole graph, or restricted to an induced vertex
// subset (flat ids) with a prescribed set of bad vertices to test.
Classification classify(const Embedding& e);
Classification classify(const Embedding& e, const std::vector<int>& scope,
                        const std::vector<int>& bads);

struct AllConfigReport {
  long long total = 0;
  long long standard = 0;
  long long semi_standard = 0;
  long long neither = 0;
  struct PerConfig {
    std::vector<int> weights;
    long long total = 0, standard = 0, semi_standard = 0, neither = 0;
  };
  std::vector<PerConfig> configs;
};

// One assembled batch configuration: a single chain with its declared bad
// vertices and the extended-bad-part classification scope.
struct BatchConfig {
  std::vector<int> weights;
  std::vector<int> bads;       // flat chain positions
  std::pair<int, int> scope;   // inclusive extended-bad-part interval
};

// Every (left, right) pair from the extension lists, with the empty
// extension always included on both sides; the bad part's end weight is
// bumped by one on each side that gets an extension. bad_pos is 1-based.
std::vector<BatchConfig> batch_configs(const std::vector<int>& bad,
                                       const std::vector<int>& bad_pos,
                                       const std::vector<std::vector<int>>& lefts,
                                       const std::vector<std::vector<int>>& rights);

// The appendix batch driver: enumerate the embeddings of every batch
// configuration and classify each on the extended bad part.
AllConfigReport all_config(const std::vector<int>& bad, const std::vector<int>& bad_pos,
                           const std::vector<std::vector<int>>& lefts,
                           const std::vector<std::vector<int>>& rights, int threads = 1);

struct AppendixCase {
  int number = 0;
  std::vector<int> bad;
  std::vector<int> bad_pos;
  std::vector<std::vector<int>> lefts;
  std::vector<std::vector<int>> rights;
  std::array<long long, 4> published{};  // total / standard / semi / neither
};

const std::vector<AppendixCase>& appendix_cases();

struct AppendixResult {
  int number = 0;
  AllConfigReport report;
  std::array<long long, 4> published{};
  bool match = false;
};

std::vector<AppendixResult> verify_appendix(int threads = 1);

}  // namespace plumbkit
