#pragma once

#include <vector>

#include "plumbkit/graphs.hpp"

// Symplectic-filling combinatorics: admissible surgery tuples, the modified
// tuple attached to a bad vertex, minimal-filling counts and the fundamental
// group of the b2-deficient filling.

namespace plumbkit {

// A tuple obtained from (0) by blowups; equivalently it reduces back to (0)
// by repeatedly deleting an entry equal to 1 and decrementing its neighbours.
struct AdmissibleTuple {
  std::vector<int> entries;
};

bool reduces_to_zero(std::vector<int> t);

// (1, 2, ..., 2, 1) of the given length; length 1 gives (0).
AdmissibleTuple standard_tuple(int length);

// The tuple n' with n'_j = 1 and the two neighbours of j incremented, for a
// bad vertex at 1-based position j of the dual chain. Validates badness,
// entrywise domination by the dual weights, and admissibility.
AdmissibleTuple bad_vertex_tuple(const ChainWeights& dual_weights, int j);

struct FillingCount {
  long long count = 0;  // minimal symplectic fillings up to diffeomorphism
  long long n_l = 0;    // induced [4] / [3,3] / [3,2,3] subgraphs of the plumbing
  bool reduced = false; // count == n_l rather than n_l + 1
  bool q_squared_one = false;
  bool has_symmetric_pattern = false;  // [4,4] or [3,3,3] induced
};

// Requires the plumbing graph of L to pass the 17-configuration check.
FillingCount count_fillings(const LensSpace& l);

enum class FillingPi1 { Trivial, Z2 };

// Defined when the dual graph passes the Working Conditions and has a bad
// vertex (the b2-deficient filling exists).
FillingPi1 filling_pi1(const LensSpace& l);

}  // namespace plumbkit
