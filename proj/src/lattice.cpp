#include "plumbkit/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "plumbkit/simd/kernels.hpp"

namespace plumbkit {

namespace {

using i128 = __int128;
using Matrix = std::vector<std::vector<long long>>;

long long to_ll(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("lattice: 128-bit overflow");
  return static_cast<long long>(v);
}

// Fraction-free Gaussian elimination; exact for integer input.
long long bareiss_det(Matrix m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = to_ll((i128(m[i][j]) * m[k][k] - i128(m[i][k]) * m[k][j]) / prev);
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Matrix leading_block(const Matrix& m, int k) {
  Matrix out(k, std::vector<long long>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out[i][j] = m[i][j];
  return out;
}

// adj(A) with A * adj(A) = det(A) * I, by cofactors over Bareiss minors.
Matrix adjugate(const Matrix& a) {
  int n = static_cast<int>(a.size());
  Matrix adj(n, std::vector<long long>(n));
  if (n == 0) return adj;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix minor(n - 1, std::vector<long long>(n - 1));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor[rr][cc++] = a[r][c];
        }
        ++rr;
      }
      long long cof = bareiss_det(minor);
      adj[i][j] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

long long quad_form(const Matrix& q, const std::vector<long long>& x) {
  i128 s = 0;
  int n = static_cast<int>(q.size());
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    i128 row = 0;
    for (int j = 0; j < n; ++j) row += i128(q[i][j]) * x[j];
    s += i128(x[i]) * row;
  }
  return to_ll(s);
}

const Matrix& positive_matrix(const GramMatrix& g, Matrix& storage) {
  if (g.sign == FormSign::Positive) return g.m;
  storage = g.m;
  for (auto& row : storage)
    for (auto& v : row) v = -v;
  return storage;
}

// Enumeration of all x with x^T Q x <= bound for positive definite Q, up to
// sign. Coordinates are fixed left to right; a prefix p survives iff the
// minimum of the form over real completions stays within the bound, which by
// the Schur complement against the trailing block is
//   p^T (P*det(S) - C*adj(S)*C^T) p <= bound*det(S),
// an all-integer test with small trailing minors.
struct ShortVectorEnum {
  int n;
  long long bound;
  Matrix q;
  std::vector<Matrix> prune;       // level k: k x k matrix G_k
  std::vector<long long> prune_rhs;  // level k: bound * det(S_k)
  std::vector<long long> box;      // |x_i| <= box[i]
  std::vector<std::vector<long long>> out;

  ShortVectorEnum(const Matrix& form, long long b) : n(static_cast<int>(form.size())), bound(b), q(form) {
    prune.resize(n + 1);
    prune_rhs.resize(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
      int t = n - k;  // trailing block size
      Matrix s(t, std::vector<long long>(t));
      for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) s[i][j] = q[k + i][k + j];
      long long det_s = bareiss_det(s);
      Matrix adj_s = adjugate(s);
      Matrix g(k, std::vector<long long>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          i128 v = i128(q[i][j]) * det_s;
          for (int a = 0; a < t; ++a)
            for (int bcol = 0; bcol < t; ++bcol)
              v -= i128(q[i][k + a]) * adj_s[a][bcol] * q[k + bcol][j];
          g[i][j] = to_ll(v);
        }
      prune[k] = std::move(g);
      prune_rhs[k] = to_ll(i128(bound) * det_s);
    }
    // |x_i|^2 <= bound * (Q^{-1})_ii, i.e. x_i^2 * det(Q) <= bound * adj(Q)_ii
    long long det_q = bareiss_det(q);
    Matrix adj_q = adjugate(q);
    box.resize(n);
    for (int i = 0; i < n; ++i) {
      long long b_i = 0;
      while (i128(b_i + 1) * (b_i + 1) * det_q <= i128(bound) * adj_q[i][i]) ++b_i;
      box[i] = b_i;
    }
  }

  bool prefix_ok(const std::vector<long long>& x, int k) {
    const Matrix& g = prune[k];
    i128 s = 0;
    for (int i = 0; i < k; ++i) {
      if (x[i] == 0) continue;
      i128 row = 0;
      for (int j = 0; j < k; ++j) row += i128(g[i][j]) * x[j];
      s += i128(x[i]) * row;
    }
    return s <= prune_rhs[k];
  }

  void rec(std::vector<long long>& x, int k, bool all_zero) {
    if (k == n) {
      if (!all_zero) out.push_back(x);
      return;
    }
    long long lo = all_zero ? 0 : -box[k];
    for (long long v = lo; v <= box[k]; ++v) {
      x[k] = v;
      if (prefix_ok(x, k + 1)) rec(x, k + 1, all_zero && v == 0);
    }
    x[k] = 0;
  }

  std::vector<std::vector<long long>> run() {
    std::vector<long long> x(n, 0);
    rec(x, 0, true);
    return out;
  }
};

}  // namespace

GramMatrix negate(const GramMatrix& g) {
  GramMatrix out = g;
  out.sign = g.sign == FormSign::Positive ? FormSign::Negative : FormSign::Positive;
  for (auto& row : out.m)
    for (auto& v : row) v = -v;
  return out;
}

GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b) {
  if (a.sign != b.sign) throw std::invalid_argument("direct_sum: sign mismatch");
  int n = a.rank(), m = b.rank();
  GramMatrix out;
  out.sign = a.sign;
  out.m.assign(n + m, std::vector<long long>(n + m, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.m[i][j] = a.m[i][j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.m[n + i][n + j] = b.m[i][j];
  return out;
}

GramMatrix unit_form(int rank, FormSign sign) {
  GramMatrix out;
  out.sign = sign;
  out.m.assign(rank, std::vector<long long>(rank, 0));
  long long d = sign == FormSign::Positive ? 1 : -1;
  for (int i = 0; i < rank; ++i) out.m[i][i] = d;
  return out;
}

GramMatrix gram_of_graph(const LinearGraph& g) {
  int n = g.vertex_count();
  GramMatrix out;
  out.sign = g.convention == Convention::Dual ? FormSign::Positive : FormSign::Negative;
  long long s = out.sign == FormSign::Positive ? 1 : -1;
  out.m.assign(n, std::vector<long long>(n, 0));
  int base = 0;
  for (const auto& comp : g.components) {
    int len = static_cast<int>(comp.size());
    for (int i = 0; i < len; ++i) {
      out.m[base + i][base + i] = s * comp[i];
      if (i + 1 < len) {
        out.m[base + i][base + i + 1] = -s;
        out.m[base + i + 1][base + i] = -s;
      }
    }
    base += len;
  }
  return out;
}

long long det(const GramMatrix& g) { return bareiss_det(g.m); }

std::vector<std::vector<long long>> short_vectors(const GramMatrix& q, long long bound) {
  Matrix storage;
  const Matrix& pos = positive_matrix(q, storage);
  if (bound <= 0) return {};
  ShortVectorEnum e(pos, bound);
  auto vecs = e.run();
  std::sort(vecs.begin(), vecs.end());
  return vecs;
}

bool represents(const GramMatrix& g, long long m) {
  Matrix storage;
  const Matrix& pos = positive_matrix(g, storage);
  ShortVectorEnum e(pos, m);
  for (const auto& x : e.run())
    if (quad_form(pos, x) == m) return true;
  return false;
}

GramMatrix lll_reduce(const GramMatrix& g_in) {
  Matrix storage;
  Matrix g = positive_matrix(g_in, storage);
  int r = static_cast<int>(g.size());
  if (r <= 1) return {g, FormSign::Positive};

  std::vector<std::vector<double>> mu(r, std::vector<double>(r, 0));
  std::vector<double> bstar(r, 0);
  auto gram_schmidt = [&] {
    for (int i = 0; i < r; ++i) {
      bstar[i] = double(g[i][i]);
      for (int j = 0; j < i; ++j) {
        double dot = double(g[i][j]);
        for (int t = 0; t < j; ++t) dot -= mu[i][t] * mu[j][t] * bstar[t];
        mu[i][j] = bstar[j] > 0 ? dot / bstar[j] : 0;
        bstar[i] -= mu[i][j] * mu[i][j] * bstar[j];
      }
    }
  };
  auto translate = [&](int i, long long q, int j) {  // b_i -= q b_j
    for (int t = 0; t < r; ++t) g[i][t] = to_ll(i128(g[i][t]) - i128(q) * g[j][t]);
    for (int t = 0; t < r; ++t) g[t][i] = to_ll(i128(g[t][i]) - i128(q) * g[t][j]);
  };
  auto swap_rows = [&](int i, int j) {
    std::swap(g[i], g[j]);
    for (int t = 0; t < r; ++t) std::swap(g[t][i], g[t][j]);
  };

  gram_schmidt();
  int k = 1;
  int guard = 100000;
  while (k < r && guard-- > 0) {
    for (int j = k - 1; j >= 0; --j) {
      long long q = std::llround(mu[k][j]);
      if (q != 0) {
        translate(k, q, j);
        gram_schmidt();
      }
    }
    if (bstar[k] >= (0.75 - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
      ++k;
    } else {
      swap_rows(k, k - 1);
      gram_schmidt();
      k = std::max(1, k - 1);
    }
  }
  return {g, FormSign::Positive};
}

namespace {

struct IsoSearch {
  const Matrix& a;
  const Matrix& b;
  std::vector<std::vector<long long>> cands;  // short vectors of A, both signs
  std::vector<std::vector<long long>> pair_cache;  // cands x r: A * cand
  int r;

  bool extend(std::vector<int>& picked) {
    int i = static_cast<int>(picked.size());
    if (i == r) return true;
    for (int c = 0; c < static_cast<int>(cands.size()); ++c) {
      if (pairing(c, c) != b[i][i]) continue;
      bool ok = true;
      for (int j = 0; j < i; ++j)
        if (pairing(picked[j], c) != b[j][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      picked.push_back(c);
      if (extend(picked)) return true;
      picked.pop_back();
    }
    return false;
  }

  long long pairing(int ci, int cj) {
    i128 s = 0;
    for (int k = 0; k < r; ++k) s += i128(cands[ci][k]) * pair_cache[cj][k];
    return to_ll(s);
  }
};

}  // namespace

bool is_isomorphic(const GramMatrix& a_in, const GramMatrix& b_in) {
  if (a_in.sign != b_in.sign) return false;
  if (a_in.rank() != b_in.rank()) return false;
  if (a_in.rank() == 0) return true;
  // basis reduction keeps the enumeration bounds small
  Matrix a = lll_reduce(a_in).m;
  Matrix b = lll_reduce(b_in).m;
  int r = static_cast<int>(a.size());
  if (a == b) return true;
  if (bareiss_det(a) != bareiss_det(b)) return false;

  long long max_norm = 0;
  for (int i = 0; i < r; ++i) max_norm = std::max({max_norm, a[i][i], b[i][i]});
  GramMatrix ga{a, FormSign::Positive}, gb{b, FormSign::Positive};
  auto sv_a = short_vectors(ga, max_norm);
  auto sv_b = short_vectors(gb, max_norm);
  std::map<long long, int> norms_a, norms_b;
  for (const auto& v : sv_a) ++norms_a[quad_form(a, v)];
  for (const auto& v : sv_b) ++norms_b[quad_form(b, v)];
  if (norms_a != norms_b) return false;

  IsoSearch search{a, b, {}, {}, r};
  for (const auto& v : sv_a) {
    search.cands.push_back(v);
    std::vector<long long> neg(v.size());
    for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    search.cands.push_back(std::move(neg));
  }
  search.pair_cache.resize(search.cands.size(), std::vector<long long>(r));
  for (size_t c = 0; c < search.cands.size(); ++c)
    for (int i = 0; i < r; ++i) {
      i128 s = 0;
      for (int j = 0; j < r; ++j) s += i128(a[i][j]) * search.cands[c][j];
      search.pair_cache[c][i] = to_ll(s);
    }
  std::vector<int> picked;
  // determinant equality makes any Gram-preserving integer map unimodular
  return search.extend(picked);
}

GramMatrix complement(const Embedding& e) {
  std::vector<std::vector<long long>> columns;
  for (const auto& v : e.vectors) columns.emplace_back(v.begin(), v.end());
  auto kernel = integer_kernel(columns, e.dim);
  int k = static_cast<int>(kernel.size());
  GramMatrix out;
  out.sign = FormSign::Positive;
  out.m.assign(k, std::vector<long long>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      i128 s = 0;
      for (int t = 0; t < e.dim; ++t) s += i128(kernel[i][t]) * kernel[j][t];
      out.m[i][j] = out.m[j][i] = to_ll(s);
    }
  return out;
}

std::vector<std::vector<long long>> integer_kernel(const std::vector<std::vector<long long>>& columns,
                                                   int n) {
  int r = static_cast<int>(columns.size());
  // t = M^T as r x n; column operations on t are tracked in u (n x n)
  Matrix t(r, std::vector<long long>(n, 0));
  for (int j = 0; j < r; ++j) {
    if (static_cast<int>(columns[j].size()) != n)
      throw std::invalid_argument("integer_kernel: column length mismatch");
    for (int i = 0; i < n; ++i) t[j][i] = columns[j][i];
  }
  Matrix u(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;

  auto col_addmul = [&](int dst, int src, long long f) {
    for (int i = 0; i < r; ++i) t[i][dst] = to_ll(i128(t[i][dst]) + i128(f) * t[i][src]);
    for (int i = 0; i < n; ++i) u[i][dst] = to_ll(i128(u[i][dst]) + i128(f) * u[i][src]);
  };
  auto col_swap = [&](int x, int y) {
    for (int i = 0; i < r; ++i) std::swap(t[i][x], t[i][y]);
    for (int i = 0; i < n; ++i) std::swap(u[i][x], u[i][y]);
  };

  int lead = 0;
  for (int row = 0; row < r && lead < n; ++row) {
    // euclidean reduction across columns lead..n-1 on this row
    while (true) {
      int piv = -1;
      for (int c = lead; c < n; ++c)
        if (t[row][c] != 0 && (piv < 0 || std::llabs(t[row][c]) < std::llabs(t[row][piv]))) piv = c;
      if (piv < 0) break;
      col_swap(lead, piv);
      bool done = true;
      for (int c = lead + 1; c < n; ++c)
        if (t[row][c] != 0) {
          col_addmul(c, lead, -(t[row][c] / t[row][lead]));
          if (t[row][c] != 0) done = false;
        }
      if (done) break;
    }
    if (t[row][lead] != 0) ++lead;
  }
  std::vector<std::vector<long long>> kernel;
  for (int c = lead; c < n; ++c) {
    std::vector<long long> v(n);
    for (int i = 0; i < n; ++i) v[i] = u[i][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<long long> snf_diagonal(Matrix m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<long long> out;
  int top = 0;
  while (top < rows && top < cols) {
    // find a nonzero pivot
    int pr = -1, pc = -1;
    for (int i = top; i < rows && pr < 0; ++i)
      for (int j = top; j < cols; ++j)
        if (m[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    std::swap(m[top], m[pr]);
    for (int i = 0; i < rows; ++i) std::swap(m[i][top], m[i][pc]);
    bool reduced = false;
    while (!reduced) {
      reduced = true;
      for (int i = top + 1; i < rows; ++i)
        while (m[i][top] != 0) {
          long long f = m[top][top] ? m[i][top] / m[top][top] : 0;
          for (int j = top; j < cols; ++j) m[i][j] = to_ll(i128(m[i][j]) - i128(f) * m[top][j]);
          if (m[i][top] != 0) {
            std::swap(m[i], m[top]);
            reduced = false;
          }
        }
      for (int j = top + 1; j < cols; ++j)
        while (m[top][j] != 0) {
          long long f = m[top][top] ? m[top][j] / m[top][top] : 0;
          for (int i = top; i < rows; ++i) m[i][j] = to_ll(i128(m[i][j]) - i128(f) * m[i][top]);
          if (m[top][j] != 0) {
            for (int i = top; i < rows; ++i) std::swap(m[i][j], m[i][top]);
            reduced = false;
          }
        }
    }
    ++top;
  }
  for (int i = 0; i < top; ++i)
    if (m[i][i] != 0) out.push_back(std::llabs(m[i][i]));
  return out;
}

long long det_of(const std::vector<std::vector<long long>>& m) { return bareiss_det(m); }

std::vector<std::vector<long long>> adjugate_of(const std::vector<std::vector<long long>>& m) {
  return adjugate(m);
}

GramMatrix blowdown_gram(BlowdownCase c, int a1, int a2, int b1) {
  if (a1 > -2 || a2 > -2 || b1 > -2)
    throw std::invalid_argument("blowdown_gram: neighbour weights must be <= -2");
  GramMatrix out;
  out.sign = FormSign::Negative;
  long long A1 = a1, A2 = a2, B1 = b1;
  switch (c) {
    case BlowdownCase::Four:
      out.m = {{A2, 2, 1}, {2, 1 + 4 * A1, 2 * A1}, {1, 2 * A1, A1 + B1}};
      break;
    case BlowdownCase::ThreeThree:
      out.m = {{A2, 2, 2, -1},
               {2, 1 + 4 * A1, 4 * A1, -2 * A1},
               {2, 4 * A1, -3 + 4 * A1, 1 - 2 * A1},
               {-1, -2 * A1, 1 - 2 * A1, A1 + B1}};
      break;
    case BlowdownCase::ThreeTwoThree:
      out.m = {{A2, 2, 2, 0, -1},
               {2, 1 + 4 * A1, 4 * A1, 0, -2 * A1},
               {2, 4 * A1, -3 + 4 * A1, 1, 1 - 2 * A1},
               {0, 0, 1, -2, 0},
               {-1, -2 * A1, 1 - 2 * A1, 0, A1 + B1}};
      break;
  }
  return out;
}

}  // namespace plumbkit
