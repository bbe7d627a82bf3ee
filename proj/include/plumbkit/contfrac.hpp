#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Negative (Hirzebruch-Jung) continued fractions:
//   p/q = a_1 - 1/(a_2 - 1/(... - 1/a_n)),  a_i >= 2.
// These link a lens space L(p,q) to the weight chain of its canonical
// plumbing. All arithmetic is overflow-checked; failures throw.

namespace plumbkit {

struct LensSpace {
  long long p = 0;
  long long q = 0;

  LensSpace() = default;
  LensSpace(long long p_, long long q_);  // validates p > q > 0, gcd = 1

  bool operator==(const LensSpace&) const = default;
};

// Chain entries are the magnitudes a_i >= 2; the plumbing weights are -a_i.
using ChainWeights = std::vector<int>;

// Minimal expansion of p/q with all entries >= 2.
ChainWeights expand(long long p, long long q);
inline ChainWeights expand(const LensSpace& l) { return expand(l.p, l.q); }

// Inverse of expand: the coprime pair with p/q = [a_1,...,a_n]^-.
std::pair<long long, long long> evaluate(const ChainWeights& chain);

// q-bar with q*qbar == 1 (mod p), 0 < qbar < p.
long long mod_inverse(long long q, long long p);

}  // namespace plumbkit
