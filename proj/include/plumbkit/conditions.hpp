#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plumbkit/graphs.hpp"

// Dual-side Working Conditions I-VII, the 17 forbidden configurations on the
// plumbing side, and the bad-part / extended-bad-part / outside-part
// decomposition of a dual graph.

namespace plumbkit {

struct WCViolation {
  std::string condition;           // "I", "II", ..., "VI.a".."VI.i", "VII"
  std::vector<VertexId> witness;
};

struct WCReport {
  bool passed = true;
  std::vector<WCViolation> violations;
};

// `forbid_bad` additionally rejects any bad vertex (the no-bad-vertex
// specialization used by the predecessor conditions).
WCReport check_working_conditions(const LinearGraph& g, bool forbid_bad = false);

struct ConfigHit {
  char id;  // 'a'..'q'
  std::vector<int> subset;  // flat vertex ids
};

// The 17 forbidden plumbing configurations, as patterns (Plumbing convention).
const std::vector<std::pair<char, Pattern>>& forbidden_17();

std::pair<bool, std::vector<ConfigHit>> check_17(const LinearGraph& p);

struct BadStructure {
  int component = 0;                     // all of it lives in one component
  char shape = '?';                      // which WC VII shape matched, 'a'..'m'
  std::pair<int, int> bad_part;          // inclusive position interval
  std::vector<int> inner_bad_part;       // positions
  std::vector<int> neck_vertices;        // positions (the two ends of the bad part)
  std::pair<int, int> extended_bad_part; // inclusive position interval
  std::vector<VertexId> outside_part;    // vertices (includes the overlap sets)
  std::vector<std::pair<int, int>> screw_slots;  // adjacent position pairs (v2,v3)/(v_{k-2},v_{k-3})
};

// Requires g to pass the Working Conditions. Returns nullopt when there are
// no bad vertices; throws if bad vertices exist but fit no WC VII shape.
std::optional<BadStructure> bad_structure(const LinearGraph& g);

// Def 4.8 walk on a single chain with adjusted weights `adj`: extend the
// inclusive interval [lo, hi] outwards, stopping at a leaf or one step past
// two consecutive zero adjusted weights. Used both by bad_structure and by
// the appendix driver.
std::pair<int, int> extended_interval(const std::vector<int>& adj, int lo, int hi);

}  // namespace plumbkit
