#include "plumbkit/embeddings.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "plumbkit/conditions.hpp"
#include "plumbkit/lattice.hpp"
#include "plumbkit/simd/kernels.hpp"

namespace plumbkit {

namespace {

using Matrix = std::vector<std::vector<long long>>;

Matrix gram_rows(const LinearGraph& g) {
  GramMatrix gm = gram_of_graph(g);
  if (gm.sign == FormSign::Negative) gm = negate(gm);
  return gm.m;
}

// Candidate rows of an embedding matrix M with M^T M = A: integer vectors x
// with x A^{-1} x^T <= 1, i.e. A - x^T x positive semidefinite. Enumerated by
// a coordinate DFS; a prefix p of length k survives iff
//   p^T adj(A_k) p <= det(A_k)
// for the leading k x k block A_k, which is the exact real-relaxation bound.
// First nonzero entry is kept positive (one representative per +-x).
std::vector<std::vector<int>> candidate_rows(const Matrix& a) {
  int r = static_cast<int>(a.size());
  std::vector<Matrix> adj_blocks(r + 1);
  std::vector<long long> det_blocks(r + 1, 1);
  for (int k = 1; k <= r; ++k) {
    Matrix block(k, std::vector<long long>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) block[i][j] = a[i][j];
    det_blocks[k] = det_of(block);
    adj_blocks[k] = adjugate_of(block);
  }
  std::vector<int> box(r);
  for (int i = 0; i < r; ++i) box[i] = static_cast<int>(std::sqrt(double(a[i][i])) + 1e-9);

  std::vector<std::vector<int>> out;
  std::vector<long long> x(r, 0);
  auto prefix_ok = [&](int k) {
    const Matrix& g = adj_blocks[k];
    __int128 s = 0;
    for (int i = 0; i < k; ++i) {
      if (x[i] == 0) continue;
      __int128 row = 0;
      for (int j = 0; j < k; ++j) row += __int128(g[i][j]) * x[j];
      s += __int128(x[i]) * row;
    }
    return s <= det_blocks[k];
  };
  auto rec = [&](auto&& self, int k, bool all_zero) -> void {
    if (k == r) {
      if (!all_zero) out.emplace_back(x.begin(), x.end());
      return;
    }
    int lo = all_zero ? 0 : -box[k];
    for (int v = lo; v <= box[k]; ++v) {
      x[k] = v;
      if (prefix_ok(k + 1)) self(self, k + 1, all_zero && v == 0);
    }
    x[k] = 0;
  };
  rec(rec, 0, true);
  return out;
}

// Exact-cover search for multisets of candidate rows with sum of outer
// products equal to A. Rows are grouped by first nonzero position and picked
// stage by stage with non-increasing in-stage index, which enumerates every
// multiset exactly once. The remainder R stays positive semidefinite along
// any valid branch; diagonal, zero-row and Cauchy-Schwarz checks prune the
// rest.
class GramCover {
 public:
  GramCover(Matrix a, int max_dim)
      : r_(static_cast<int>(a.size())), max_dim_(max_dim) {
    cands_ = candidate_rows(a);
    by_fnz_.resize(r_);
    for (int i = 0; i < static_cast<int>(cands_.size()); ++i) {
      const auto& x = cands_[i];
      int fnz = 0;
      while (x[fnz] == 0) ++fnz;
      by_fnz_[fnz].push_back(i);
      max_norm_ = std::max(max_norm_, norm_of(x));
    }
    // big rows first within a stage; the order is fixed but otherwise free
    for (auto& stage : by_fnz_)
      std::sort(stage.begin(), stage.end(), [&](int lhs, int rhs) {
        long long nl = norm_of(cands_[lhs]), nr = norm_of(cands_[rhs]);
        if (nl != nr) return nl > nr;
        return cands_[lhs] > cands_[rhs];
      });
    R_.assign(r_ * r_, 0);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < r_; ++j) R_[i * r_ + j] = static_cast<int32_t>(a[i][j]);
    trace_ = 0;
    for (int i = 0; i < r_; ++i) trace_ += a[i][i];
  }

  // visit receives the candidate indices of one solution; return false to stop
  void run(const std::function<bool(const std::vector<int>&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    rows_.clear();
    descend(0, -1);
  }

  const std::vector<std::vector<int>>& candidates() const { return cands_; }

 private:
  static long long norm_of(const std::vector<int>& x) {
    long long s = 0;
    for (int v : x) s += static_cast<long long>(v) * v;
    return s;
  }

  int32_t& at(int i, int j) { return R_[i * r_ + j]; }

  bool feasible_after(const std::vector<int>& x) {
    for (int i = 0; i < r_; ++i) {
      if (x[i] == 0) continue;
      int32_t rii = at(i, i);
      if (rii < 0) return false;
      const int32_t* row = &R_[i * r_];
      if (rii == 0) {
        for (int j = 0; j < r_; ++j)
          if (row[j] != 0) return false;
      } else {
        for (int j = 0; j < r_; ++j) {
          int64_t rij = row[j];
          if (rij * rij > int64_t(rii) * at(j, j)) return false;
        }
      }
    }
    return true;
  }

  void apply(const std::vector<int>& x, int sign) {
    for (int i = 0; i < r_; ++i)
      if (x[i] != 0) simd::sub_scaled_i32(&R_[i * r_], sign * x[i], x.data(), r_);
  }

  void descend(int stage, int limit) {
    if (stopped_) return;
    while (stage < r_ && at(stage, stage) == 0) {
      ++stage;
      limit = -1;
    }
    if (stage == r_) {
      if (trace_ == 0 && !(*visit_)(rows_)) stopped_ = true;
      return;
    }
    if (max_dim_ >= 0) {
      long long need = (trace_ + max_norm_ - 1) / max_norm_;
      if (static_cast<long long>(rows_.size()) + need > max_dim_) return;
    }
    const auto& stage_list = by_fnz_[stage];
    int hi = (limit < 0) ? static_cast<int>(stage_list.size()) : limit + 1;
    for (int pos = 0; pos < hi && !stopped_; ++pos) {
      const auto& x = cands_[stage_list[pos]];
      long long n = norm_of(x);
      if (x[stage] * x[stage] > at(stage, stage)) continue;
      apply(x, 1);
      trace_ -= n;
      if (feasible_after(x)) {
        rows_.push_back(stage_list[pos]);
        descend(stage, pos);
        rows_.pop_back();
      }
      trace_ += n;
      apply(x, -1);
    }
  }

  int r_;
  int max_dim_;
  long long trace_ = 0;
  long long max_norm_ = 1;
  std::vector<std::vector<int>> cands_;
  std::vector<std::vector<int>> by_fnz_;
  std::vector<int32_t> R_;
  std::vector<int> rows_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
  bool stopped_ = false;
};

std::vector<std::vector<int>> rows_of(const GramCover& cover, const std::vector<int>& sol) {
  std::vector<std::vector<int>> rows;
  rows.reserve(sol.size());
  for (int idx : sol) rows.push_back(cover.candidates()[idx]);
  std::sort(rows.begin(), rows.end());
  return rows;
}

Embedding embedding_from_rows(const LinearGraph& g, const std::vector<std::vector<int>>& rows) {
  Embedding e;
  e.graph = g;
  e.dim = static_cast<int>(rows.size());
  int r = g.vertex_count();
  e.vectors.assign(r, std::vector<int>(e.dim));
  for (int k = 0; k < e.dim; ++k)
    for (int v = 0; v < r; ++v) e.vectors[v][k] = rows[k][v];
  return e;
}

// support bitsets over <= dim coordinates
using Bits = std::vector<uint64_t>;

Bits support_of(const std::vector<int>& vec) {
  Bits b((vec.size() + 63) / 64, 0);
  for (size_t i = 0; i < vec.size(); ++i)
    if (vec[i] != 0) b[i / 64] |= uint64_t(1) << (i % 64);
  return b;
}

int popcount_and(const Bits& a, const Bits& b) {
  int n = 0;
  for (size_t i = 0; i < a.size(); ++i) n += __builtin_popcountll(a[i] & b[i]);
  return n;
}

int popcount_and3(const Bits& a, const Bits& b, const Bits& c) {
  int n = 0;
  for (size_t i = 0; i < a.size(); ++i) n += __builtin_popcountll(a[i] & b[i] & c[i]);
  return n;
}

struct ClassifyContext {
  const LinearGraph* g;
  std::vector<Bits> supports;
  std::vector<int> weights;  // flat

  explicit ClassifyContext(const Embedding& e) : g(&e.graph) {
    int r = e.graph.vertex_count();
    supports.reserve(r);
    for (int v = 0; v < r; ++v) supports.push_back(support_of(e.vectors[v]));
    weights.reserve(r);
    for (const auto& comp : e.graph.components)
      for (int w : comp) weights.push_back(w);
  }

  bool adjacent(int u, int v) const {
    VertexId a = g->unflat(u), b = g->unflat(v);
    return a.comp == b.comp && std::abs(a.pos - b.pos) == 1;
  }

  // Def 4.4 / Def 4.6 support-intersection conditions on the scope; when
  // semi_at >= 0, the two exceptional pairs around that bad vertex apply.
  bool pairs_ok(const std::vector<int>& scope, int semi_at) const {
    for (int u : scope)
      if (popcount_and(supports[u], supports[u]) != weights[u]) return false;
    for (size_t i = 0; i < scope.size(); ++i)
      for (size_t j = i + 1; j < scope.size(); ++j) {
        int u = scope[i], v = scope[j];
        int c = popcount_and(supports[u], supports[v]);
        if (adjacent(u, v)) {
          if (c != 1) return false;
        } else if (semi_at >= 0 && adjacent(u, semi_at) && adjacent(v, semi_at)) {
          if (c != 2) return false;
          if (popcount_and3(supports[u], supports[semi_at], supports[v]) != 1) return false;
        } else {
          if (c != 0) return false;
        }
      }
    return true;
  }
};

Classification classify_impl(const Embedding& e, const std::vector<int>& scope,
                             const std::vector<int>& bads) {
  ClassifyContext ctx(e);
  if (ctx.pairs_ok(scope, -1)) return {EmbeddingKind::Standard, std::nullopt};
  for (int x : bads) {
    if (std::find(scope.begin(), scope.end(), x) == scope.end()) continue;
    if (ctx.pairs_ok(scope, x)) return {EmbeddingKind::SemiStandard, e.graph.unflat(x)};
  }
  return {EmbeddingKind::Neither, std::nullopt};
}

}  // namespace

std::vector<Embedding> enumerate_embeddings(const LinearGraph& dual, int max_dim) {
  if (dual.convention != Convention::Dual)
    throw std::invalid_argument("enumerate_embeddings: expects a Dual-convention graph");
  GramCover cover(gram_rows(dual), max_dim);
  std::vector<std::vector<std::vector<int>>> sols;
  cover.run([&](const std::vector<int>& sol) {
    sols.push_back(rows_of(cover, sol));
    return true;
  });
  std::sort(sols.begin(), sols.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Embedding> out;
  out.reserve(sols.size());
  for (const auto& rows : sols) out.push_back(embedding_from_rows(dual, rows));
  return out;
}

std::optional<Embedding> find_embedding(const LinearGraph& dual, int max_dim) {
  if (dual.convention != Convention::Dual)
    throw std::invalid_argument("find_embedding: expects a Dual-convention graph");
  int r = dual.vertex_count();
  if (max_dim < r) return std::nullopt;  // definite rank obstruction
  Matrix a = gram_rows(dual);
  long long trace = 0;
  for (int i = 0; i < r; ++i) trace += a[i][i];
  int hi = static_cast<int>(std::min<long long>(max_dim, trace));
  // increasing target dimension, so the witness has minimal ambient dimension
  for (int d = r; d <= hi; ++d) {
    GramCover cover(a, d);
    std::optional<Embedding> found;
    cover.run([&](const std::vector<int>& sol) {
      if (static_cast<int>(sol.size()) != d) return true;
      found = embedding_from_rows(dual, rows_of(cover, sol));
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

Classification classify(const Embedding& e) {
  std::vector<int> scope(e.graph.vertex_count());
  for (size_t i = 0; i < scope.size(); ++i) scope[i] = static_cast<int>(i);
  std::vector<int> bads;
  for (VertexId v : bad_vertices(e.graph)) bads.push_back(e.graph.flat(v));
  return classify_impl(e, scope, bads);
}

Classification classify(const Embedding& e, const std::vector<int>& scope,
                        const std::vector<int>& bads) {
  return classify_impl(e, scope, bads);
}

namespace {

using ConfigJob = BatchConfig;

ConfigJob make_config(const std::vector<int>& bad, const std::vector<int>& bad_pos,
                      const std::vector<int>& left, const std::vector<int>& right) {
  ConfigJob job;
  std::vector<int> mid = bad;
  if (!left.empty()) mid.front() += 1;
  if (!right.empty()) mid.back() += 1;
  job.weights = left;
  job.weights.insert(job.weights.end(), mid.begin(), mid.end());
  job.weights.insert(job.weights.end(), right.begin(), right.end());
  for (int p : bad_pos) {
    if (p < 1 || p > static_cast<int>(bad.size()))
      throw std::invalid_argument("all_config: bad position out of range");
    job.bads.push_back(static_cast<int>(left.size()) + p - 1);
  }
  int n = static_cast<int>(job.weights.size());
  std::vector<int> adj(n);
  for (int i = 0; i < n; ++i)
    adj[i] = job.weights[i] - ((i > 0 ? 1 : 0) + (i + 1 < n ? 1 : 0));
  int lo = *std::min_element(job.bads.begin(), job.bads.end()) - 1;
  int hi = *std::max_element(job.bads.begin(), job.bads.end()) + 1;
  if (lo < 0 || hi >= n) throw std::invalid_argument("all_config: bad part touches the boundary");
  job.scope = extended_interval(adj, lo, hi);
  return job;
}

AllConfigReport::PerConfig run_config(const ConfigJob& job) {
  AllConfigReport::PerConfig result;
  result.weights = job.weights;
  LinearGraph g({job.weights}, Convention::Dual);
  std::vector<int> scope;
  for (int i = job.scope.first; i <= job.scope.second; ++i) scope.push_back(i);

  GramCover cover(gram_rows(g), -1);
  cover.run([&](const std::vector<int>& sol) {
    Embedding e = embedding_from_rows(g, rows_of(cover, sol));
    Classification c = classify_impl(e, scope, job.bads);
    ++result.total;
    switch (c.kind) {
      case EmbeddingKind::Standard: ++result.standard; break;
      case EmbeddingKind::SemiStandard: ++result.semi_standard; break;
      case EmbeddingKind::Neither: ++result.neither; break;
    }
    return true;
  });
  return result;
}

}  // namespace

std::vector<BatchConfig> batch_configs(const std::vector<int>& bad,
                                       const std::vector<int>& bad_pos,
                                       const std::vector<std::vector<int>>& lefts,
                                       const std::vector<std::vector<int>>& rights) {
  if (bad_pos.empty()) throw std::invalid_argument("all_config: need at least one bad position");
  std::vector<std::vector<int>> all_lefts = {{}};
  all_lefts.insert(all_lefts.end(), lefts.begin(), lefts.end());
  std::vector<std::vector<int>> all_rights = {{}};
  all_rights.insert(all_rights.end(), rights.begin(), rights.end());
  std::vector<BatchConfig> jobs;
  for (const auto& l : all_lefts)
    for (const auto& r : all_rights) jobs.push_back(make_config(bad, bad_pos, l, r));
  return jobs;
}

AllConfigReport all_config(const std::vector<int>& bad, const std::vector<int>& bad_pos,
                           const std::vector<std::vector<int>>& lefts,
                           const std::vector<std::vector<int>>& rights, int threads) {
  std::vector<ConfigJob> jobs = batch_configs(bad, bad_pos, lefts, rights);
  std::vector<AllConfigReport::PerConfig> results(jobs.size());
  if (threads <= 1) {
    for (size_t i = 0; i < jobs.size(); ++i) results[i] = run_config(jobs[i]);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
        results[i] = run_config(jobs[i]);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  AllConfigReport report;
  for (auto& pc : results) {
    report.total += pc.total;
    report.standard += pc.standard;
    report.semi_standard += pc.semi_standard;
    report.neither += pc.neither;
    report.configs.push_back(std::move(pc));
  }
  return report;
}

const std::vector<AppendixCase>& appendix_cases() {
  static const std::vector<AppendixCase> cases = {
      {1,
       {2, 2, 2},
       {2},
       {{2, 2, 2}, {2, 3, 2, 2}, {3, 3, 2, 2}, {2, 4, 3, 2, 2}, {2}, {2, 2, 2, 3}, {2, 3, 2, 2, 3}, {2, 3, 3, 2, 2, 3}},
       {{2, 2, 2}, {2, 2, 3, 2}, {2, 2, 3, 3}, {2, 2, 3, 4, 2}, {2}, {3, 2, 2, 2}, {3, 2, 2, 3, 2}, {3, 2, 2, 3, 3, 2}},
       {386, 203, 183, 0}},
      {2,
       {2, 2, 3},
       {2},
       {{2, 2, 2}, {2, 3, 2, 2}, {2, 3, 3, 2, 2}},
       {{2, 2, 2, 2}, {2, 2, 2, 3}, {2}, {3, 2, 2, 2}, {3, 2, 2, 3, 2, 2}},
       {84, 48, 36, 0}},
      {3,
       {2, 2, 4},
       {2},
       {{2, 2, 2}, {2, 2, 3, 2, 2}},
       {{2, 2, 2, 2, 2}, {2, 2, 2, 2, 3}, {2}, {3, 2, 2, 2, 2}, {3, 2, 2, 2, 3}},
       {64, 32, 32, 0}},
      {4,
       {2, 3, 2},
       {2},
       {{2, 2, 2}, {2, 3, 2, 2}, {2, 2, 3, 3, 2, 2}},
       {{2, 2, 2}, {2, 2, 3, 2}, {2, 2, 3, 3, 2, 2}},
       {50, 25, 25, 0}},
      {5,
       {2, 3, 3},
       {2},
       {{2, 2, 2}, {2, 3, 2, 2}, {2, 2, 3, 3, 2, 2}},
       {{2, 2, 2, 2}, {2, 2, 2, 3, 2}, {2, 2, 2, 3, 3, 2}},
       {60, 30, 30, 0}},
      {6,
       {2, 4, 2},
       {2},
       {{2, 2, 2}, {2, 2, 3, 2, 2}},
       {{2, 2, 2}, {2, 2, 3, 2, 2}},
       {32, 16, 16, 0}},
      {7,
       {2, 2, 3, 2, 2},
       {2, 4},
       {{2, 2, 2}, {2, 3, 2, 2}, {3, 3, 2, 2}, {2, 4, 3, 2, 2}, {2}, {2, 2, 2, 3}, {2, 3, 2, 2, 3}, {2, 3, 3, 2, 2, 3}},
       {{2, 2, 2}, {2, 2, 3, 2}, {2, 2, 3, 3}, {2, 2, 3, 4, 2}, {2}, {3, 2, 2, 2}, {3, 2, 2, 3, 2}, {3, 2, 2, 3, 3, 2}},
       {589, 203, 386, 0}},
      {8,
       {2, 2, 3, 2, 3},
       {2, 4},
       {{2, 2, 2}, {2, 3, 2, 2}, {2, 3, 3, 2, 2}, {2}, {2, 2, 2, 3}, {2, 3, 2, 2, 3}, {2, 3, 3, 2, 2, 3}},
       {{2, 2, 2, 2}, {2, 2, 2, 3}, {2}, {3, 2, 2, 2}, {3, 2, 2, 3, 2, 2}},
       {264, 96, 168, 0}},
      {9,
       {2, 2, 3, 3, 2},
       {2, 4},
       {{2, 2, 2}, {2, 3, 2, 2}, {2, 3, 3, 2, 2}, {2}, {2, 2, 2, 3}, {2, 3, 2, 2, 3}, {2, 3, 3, 2, 2, 3}},
       {{2, 2, 2}, {2, 2, 3, 2}, {2, 2, 3, 3, 2, 2}},
       {160, 50, 110, 0}},
      {10,
       {2, 2, 3, 3, 3},
       {2, 4},
       {{2, 2, 2}, {2, 3, 2, 2}, {2, 3, 3, 2, 2}},
       {{2, 2, 2, 2}, {2, 2, 2, 3, 2}, {2, 2, 2, 3, 3, 2}},
       {108, 36, 72, 0}},
      {11,
       {2, 3, 3, 2},
       {2, 3},
       {{2, 2, 2}, {2, 3, 2, 2}, {2, 2, 3, 3, 2, 2}},
       {{2, 2, 2}, {2, 2, 3, 2}, {2, 2, 3, 3, 2, 2}},
       {75, 25, 50, 0}},
      {12,
       {2, 3, 3, 3, 2},
       {2, 3, 4},
       {{2, 2, 2}, {2, 3, 2, 2}, {2, 2, 3, 3, 2, 2}},
       {{2, 2, 2}, {2, 2, 3, 2}, {2, 2, 3, 3, 2, 2}},
       {100, 25, 75, 0}},
      {13,
       {2, 3, 4, 2},
       {2, 3},
       {{2, 2, 2}, {2, 2, 3, 2, 2}},
       {{2, 2, 2}, {2, 2, 3, 2, 2}},
       {48, 16, 32, 0}},
  };
  return cases;
}

std::vector<AppendixResult> verify_appendix(int threads) {
  std::vector<AppendixResult> out;
  for (const AppendixCase& c : appendix_cases()) {
    AppendixResult r;
    r.number = c.number;
    r.published = c.published;
    r.report = all_config(c.bad, c.bad_pos, c.lefts, c.rights, threads);
    r.match = r.report.total == c.published[0] && r.report.standard == c.published[1] &&
              r.report.semi_standard == c.published[2] && r.report.neither == c.published[3];
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace plumbkit
