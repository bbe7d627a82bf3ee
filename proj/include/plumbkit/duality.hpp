#pragma once

#include "plumbkit/graphs.hpp"

// The dual-plumbing transform exchanging L(p,q) and L(p,p-q): a chain
// ([2]^{a0}, b1, [2]^{a1}, ..., bk, [2]^{ak}) with all b_i >= 3 maps to the
// chain whose adjusted weights are (a0+1, [0]^{b1-3}, a1+1, ..., ak+1).

namespace plumbkit {

ChainWeights dualize_component(const ChainWeights& c);

// Componentwise dual; the convention tag flips.
LinearGraph dualize(const LinearGraph& g);

// Second Betti number of the plumbing = vertex count.
int b2(const LinearGraph& g);

// For a bad vertex at position `pos` (0-based) of the dual-side chain c,
// the inclusive index range in dualize_component(c) of the vertices it
// corresponds to on the plumbing side: a single -4, an adjacent -3 -3 pair,
// or a -3 -2 -3 triple, depending on the adjusted weight 0/1/2 of the bad
// vertex.
std::pair<int, int> blowdown_spot(const ChainWeights& c, int pos);

}  // namespace plumbkit
