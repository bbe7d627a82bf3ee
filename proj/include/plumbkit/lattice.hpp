#pragma once

#include <optional>
#include <vector>

#include "plumbkit/embeddings.hpp"
#include "plumbkit/graphs.hpp"

// Symmetric integer forms: intersection forms of graphs, orthogonal
// complements of embeddings, the rational-blowdown replacement blocks, and
// decision procedures on small definite lattices. All internal lattice work
// is positive definite; negative-convention data is negated at the boundary.

namespace plumbkit {

enum class FormSign { Positive, Negative };

struct GramMatrix {
  std::vector<std::vector<long long>> m;
  FormSign sign = FormSign::Positive;

  int rank() const { return static_cast<int>(m.size()); }
  bool operator==(const GramMatrix&) const = default;
};

GramMatrix negate(const GramMatrix& g);
GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b);
GramMatrix unit_form(int rank, FormSign sign);  // <1>^rank or <-1>^rank

// Diagonal = +-w(v), off-diagonal = -+1 on adjacency; sign follows the
// convention (Dual -> positive, Plumbing -> negative).
GramMatrix gram_of_graph(const LinearGraph& g);

long long det(const GramMatrix& g);

// All x with 0 < x^T Q x <= bound, up to sign, for positive definite Q.
std::vector<std::vector<long long>> short_vectors(const GramMatrix& q, long long bound);

// Some nonzero vector of norm exactly m?
bool represents(const GramMatrix& g, long long m);

// Integer change of basis U with U^T A U = B? Definite forms of rank <= 12.
bool is_isomorphic(const GramMatrix& a, const GramMatrix& b);

// Gram matrix in an LLL-reduced basis of the same lattice. The elementary
// operations are exact; floating point only steers them.
GramMatrix lll_reduce(const GramMatrix& g);

// Gram matrix (positive convention) of the orthogonal complement sublattice
// {x in Z^n : x . phi(v) = 0 for all v}.
GramMatrix complement(const Embedding& e);

// Basis of {x in Z^n : M^T x = 0} for an n x r integer matrix M given by
// columns; the basis is saturated (a direct summand of Z^n).
std::vector<std::vector<long long>> integer_kernel(const std::vector<std::vector<long long>>& columns,
                                                   int n);

// Diagonal of the Smith normal form (nonzero entries only).
std::vector<long long> snf_diagonal(std::vector<std::vector<long long>> m);

// Exact integer determinant / adjugate (Bareiss elimination).
long long det_of(const std::vector<std::vector<long long>>& m);
std::vector<std::vector<long long>> adjugate_of(const std::vector<std::vector<long long>>& m);

enum class BlowdownCase { Four, ThreeThree, ThreeTwoThree };

// The replacement block of the intersection form under rational blowdown of
// [-4], [-3,-3] or [-3,-2,-3]; a1, b1 are the weights of the two neighbours
// flanking the configuration and a2 the next one on the a1 side (negative
// convention, all <= -2). Returned in the negative convention.
GramMatrix blowdown_gram(BlowdownCase c, int a1, int a2, int b1);

}  // namespace plumbkit
