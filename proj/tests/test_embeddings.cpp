#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "helpers.hpp"
#include "plumbkit/embeddings.hpp"
#include "plumbkit/lattice.hpp"

using namespace plumbkit;
using plumbkit::testing::valid_embedding;

namespace {

LinearGraph dg(std::vector<std::vector<int>> comps) {
  return LinearGraph(std::move(comps), Convention::Dual);
}

// Column-by-column brute-force oracle with no symmetry pruning: enumerate all
// matrices whose columns have the prescribed norms and pairings, keep the
// full-support ones, and quotient by signed permutations afterwards via an
// independently coded canonical form (rows sorted descending, sign fixed by
// the last nonzero entry).
long long oracle_class_count(const LinearGraph& g) {
  int r = g.vertex_count();
  std::vector<int> w;
  for (const auto& comp : g.components)
    for (int x : comp) w.push_back(x);
  auto adjacent = [&](int u, int v) {
    VertexId a = g.unflat(u), b = g.unflat(v);
    return a.comp == b.comp && std::abs(a.pos - b.pos) == 1;
  };
  long long trace = 0;
  for (int x : w) trace += x;

  std::set<std::vector<std::vector<int>>> classes;
  for (int n = r; n <= trace; ++n) {
    // all vectors of each needed norm
    std::map<int, std::vector<std::vector<int>>> by_norm;
    for (int x : w) by_norm[x];
    std::vector<int> vec(n, 0);
    auto gen = [&](auto&& self, int pos, int left) -> void {
      if (pos == n) {
        if (left == 0)
          for (auto& [norm, list] : by_norm) {
            int s = 0;
            for (int v : vec) s += v * v;
            if (s == norm) list.push_back(vec);
          }
        return;
      }
      int bound = static_cast<int>(std::sqrt(double(left)) + 1e-9);
      for (int v = -bound; v <= bound; ++v) {
        vec[pos] = v;
        self(self, pos + 1, left - v * v);
      }
      vec[pos] = 0;
    };
    // generate once per norm value by filtering a master list of bounded vectors
    int max_norm = *std::max_element(w.begin(), w.end());
    std::vector<std::vector<int>> all;
    std::vector<int> cur(n, 0);
    auto gen_all = [&](auto&& self, int pos, int left) -> void {
      if (pos == n) {
        all.push_back(cur);
        return;
      }
      int bound = static_cast<int>(std::sqrt(double(left)) + 1e-9);
      for (int v = -bound; v <= bound; ++v) {
        cur[pos] = v;
        self(self, pos + 1, left - v * v);
      }
      cur[pos] = 0;
    };
    gen_all(gen_all, 0, max_norm);
    (void)gen;
    for (const auto& v : all) {
      int s = 0;
      for (int x : v) s += x * x;
      if (by_norm.count(s)) by_norm[s].push_back(v);
    }

    std::vector<std::vector<int>> cols(r);
    auto rec = [&](auto&& self, int idx) -> void {
      if (idx == r) {
        // full support check
        for (int k = 0; k < n; ++k) {
          bool used = false;
          for (int v = 0; v < r && !used; ++v) used = cols[v][k] != 0;
          if (!used) return;
        }
        // canonicalize rows: sign by last nonzero, sorted descending
        std::vector<std::vector<int>> rows(n, std::vector<int>(r));
        for (int k = 0; k < n; ++k)
          for (int v = 0; v < r; ++v) rows[k][v] = cols[v][k];
        for (auto& row : rows) {
          int last = r - 1;
          while (last >= 0 && row[last] == 0) --last;
          if (last >= 0 && row[last] < 0)
            for (auto& x : row) x = -x;
        }
        std::sort(rows.begin(), rows.end(), std::greater<>());
        classes.insert(rows);
        return;
      }
      for (const auto& v : by_norm[w[idx]]) {
        bool ok = true;
        for (int prev = 0; prev < idx && ok; ++prev) {
          long long dot = 0;
          for (int k = 0; k < n; ++k) dot += static_cast<long long>(cols[prev][k]) * v[k];
          ok = dot == (adjacent(prev, idx) ? -1 : 0);
        }
        if (!ok) continue;
        cols[idx] = v;
        self(self, idx + 1);
      }
      cols[idx].clear();
    };
    rec(rec, 0);
  }
  return static_cast<long long>(classes.size());
}

}  // namespace

TEST_CASE("single norm-2 vertex has one class") {
  auto classes = enumerate_embeddings(dg({{2}}));
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].dim == 2);
  CHECK(valid_embedding(classes[0]));
}

TEST_CASE("the chain 2,2,2 has exactly two classes") {
  auto classes = enumerate_embeddings(dg({{2, 2, 2}}));
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].dim == 3);
  CHECK(classes[1].dim == 4);
  for (const auto& e : classes) CHECK(valid_embedding(e));
  CHECK(classify(classes[0]).kind == EmbeddingKind::SemiStandard);
  CHECK(classify(classes[0]).at == VertexId{0, 1});
  CHECK(classify(classes[1]).kind == EmbeddingKind::Standard);
}

TEST_CASE("classification of hand-built embeddings") {
  Embedding std2;
  std2.graph = dg({{2, 2}});
  std2.dim = 3;
  std2.vectors = {{1, -1, 0}, {0, 1, -1}};
  CHECK(valid_embedding(std2));
  CHECK(classify(std2).kind == EmbeddingKind::Standard);

  Embedding semi;
  semi.graph = dg({{2, 2, 2}});
  semi.dim = 3;
  semi.vectors = {{1, 1, 0}, {0, -1, 1}, {-1, 1, 0}};
  CHECK(valid_embedding(semi));
  auto c = classify(semi);
  CHECK(c.kind == EmbeddingKind::SemiStandard);
  CHECK(c.at == VertexId{0, 1});

  Embedding std3;
  std3.graph = dg({{2, 2, 2}});
  std3.dim = 4;
  std3.vectors = {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}};
  CHECK(classify(std3).kind == EmbeddingKind::Standard);
}

TEST_CASE("enumeration agrees with the unpruned column oracle") {
  std::vector<LinearGraph> graphs = {
      dg({{2}}),          dg({{3}}),           dg({{4}}),          dg({{2, 2}}),
      dg({{2, 3}}),       dg({{3, 3}}),        dg({{2, 2, 2}}),    dg({{2, 3, 2}}),
      dg({{2}, {2}}),     dg({{3}, {2}}),      dg({{2, 4}}),       dg({{2, 2}, {2}}),
      dg({{4, 3}}),       dg({{2, 2, 3}}),
  };
  for (const auto& g : graphs) {
    CAPTURE(format_graph(g));
    CHECK(static_cast<long long>(enumerate_embeddings(g).size()) == oracle_class_count(g));
  }
}

TEST_CASE("every enumerated embedding is valid and distinct") {
  std::mt19937_64 rng(3141);
  for (int trial = 0; trial < 30; ++trial) {
    LinearGraph g = testing::random_graph(rng, 2, 3, 4, Convention::Dual);
    auto classes = enumerate_embeddings(g);
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& e : classes) {
      CHECK(valid_embedding(e));
      CHECK(seen.insert(e.vectors).second);
    }
    // determinism
    auto again = enumerate_embeddings(g);
    REQUIRE(again.size() == classes.size());
    for (size_t i = 0; i < classes.size(); ++i) CHECK(again[i].vectors == classes[i].vectors);
  }
}

TEST_CASE("at most one standard class per graph") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    LinearGraph g = testing::random_graph(rng, 2, 4, 4, Convention::Dual);
    int standard = 0;
    for (const auto& e : enumerate_embeddings(g))
      if (classify(e).kind == EmbeddingKind::Standard) ++standard;
    CHECK(standard <= 1);
  }
}

TEST_CASE("find_embedding returns the minimal dimension") {
  CHECK_FALSE(find_embedding(dg({{2, 2, 2}}), 2).has_value());
  auto e3 = find_embedding(dg({{2, 2, 2}}), 3);
  REQUIRE(e3.has_value());
  CHECK(e3->dim == 3);
  auto e4 = find_embedding(dg({{2, 2, 2}}), 10);
  REQUIRE(e4.has_value());
  CHECK(e4->dim == 3);
  CHECK(valid_embedding(*e4));
  // <9> embeds into Z^1 as (3)
  auto nine = find_embedding(dg({{9}}), 1);
  REQUIRE(nine.has_value());
  CHECK(nine->dim == 1);
  CHECK(nine->vectors[0][0] == 3);
}

TEST_CASE("batch driver reproduces the calibration case and is thread-stable") {
  const AppendixCase& c6 = appendix_cases()[5];
  REQUIRE(c6.number == 6);
  AllConfigReport one = all_config(c6.bad, c6.bad_pos, c6.lefts, c6.rights, 1);
  CHECK(one.total == 32);
  CHECK(one.standard == 16);
  CHECK(one.semi_standard == 16);
  CHECK(one.neither == 0);
  AllConfigReport four = all_config(c6.bad, c6.bad_pos, c6.lefts, c6.rights, 4);
  CHECK(four.total == one.total);
  CHECK(four.standard == one.standard);
  CHECK(four.semi_standard == one.semi_standard);
  REQUIRE(four.configs.size() == one.configs.size());
  for (size_t i = 0; i < one.configs.size(); ++i) {
    CHECK(four.configs[i].weights == one.configs[i].weights);
    CHECK(four.configs[i].total == one.configs[i].total);
  }
  // 3x3 configurations including the empty extensions
  CHECK(one.configs.size() == 9);
}

TEST_CASE("appendix case table is well formed") {
  REQUIRE(appendix_cases().size() == 13);
  for (const auto& c : appendix_cases()) {
    CHECK(!c.bad.empty());
    CHECK(!c.bad_pos.empty());
    for (int p : c.bad_pos) {
      CHECK(p >= 2);
      CHECK(p <= static_cast<int>(c.bad.size()) - 1);
    }
  }
}
