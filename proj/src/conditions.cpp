#include "plumbkit/conditions.hpp"

#include <algorithm>
#include <stdexcept>

namespace plumbkit {

namespace {

bool adjacent(VertexId a, VertexId b) {
  return a.comp == b.comp && std::abs(a.pos - b.pos) == 1;
}

// The WC VI patterns in adjusted-weight space, matched up to reflection.
const std::vector<std::pair<std::string, std::vector<int>>>& wc6_patterns() {
  static const std::vector<std::pair<std::string, std::vector<int>>> table = {
      {"VI.a", {1, 0, 0, 2}},       {"VI.b", {1, 0, 0, 3}},
      {"VI.c", {1, 0, 0, 0, 3}},    {"VI.d", {1, 1, 0, 0, 1, 2}},
      {"VI.e", {3, 1, 0, 0, 1}},    {"VI.f", {1, 0, 1, 2}},
      {"VI.g", {1, 0, 1, 3}},       {"VI.h", {1, 1, 0, 2}},
      {"VI.i", {1, 1, 0, 1, 1, 2}},
  };
  return table;
}

// The WC VII shapes: adjusted weights with the circled (bad) positions.
struct Wc7Shape {
  char id;
  std::vector<int> adj;
  std::vector<int> circled;
};

const std::vector<Wc7Shape>& wc7_shapes() {
  static const std::vector<Wc7Shape> table = {
      {'a', {1, 0, 1}, {1}},
      {'b', {1, 0, 2}, {1}},
      {'c', {1, 0, 3}, {1}},
      {'d', {1, 1, 1}, {1}},
      {'e', {1, 1, 2}, {1}},
      {'f', {1, 2, 1}, {1}},
      {'g', {1, 0, 1, 0, 1}, {1, 3}},
      {'h', {1, 0, 1, 0, 2}, {1, 3}},
      {'i', {1, 0, 1, 1, 1}, {1, 3}},
      {'j', {1, 0, 1, 1, 2}, {1, 3}},
      {'k', {1, 1, 1, 1}, {1, 2}},
      {'l', {1, 1, 1, 1, 1}, {1, 2, 3}},
      {'m', {1, 1, 2, 1}, {1, 2}},
  };
  return table;
}

// Every (component, start, shape-orientation) whose run matches the shape's
// adjusted weights and whose circled positions are exactly `bads`.
std::optional<std::pair<BadStructure, char>> match_wc7(const LinearGraph& g,
                                                       const std::vector<std::vector<int>>& adj,
                                                       const std::vector<VertexId>& bads) {
  for (const Wc7Shape& shape : wc7_shapes()) {
    int len = static_cast<int>(shape.adj.size());
    for (int reflect = 0; reflect < 2; ++reflect) {
      std::vector<int> want = shape.adj;
      std::vector<int> circ = shape.circled;
      if (reflect) {
        std::reverse(want.begin(), want.end());
        for (auto& c : circ) c = len - 1 - c;
        std::sort(circ.begin(), circ.end());
      }
      if (reflect && want == shape.adj) continue;  // palindromic shape
      for (int c = 0; c < static_cast<int>(g.components.size()); ++c) {
        const auto& a = adj[c];
        for (int s = 0; s + len <= static_cast<int>(a.size()); ++s) {
          if (!std::equal(want.begin(), want.end(), a.begin() + s)) continue;
          std::vector<VertexId> circled;
          for (int offset : circ) circled.push_back({c, s + offset});
          if (circled != bads) continue;
          BadStructure bs;
          bs.component = c;
          bs.shape = shape.id;
          bs.bad_part = {s, s + len - 1};
          return std::make_pair(bs, shape.id);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::pair<int, int> extended_interval(const std::vector<int>& adj, int lo, int hi) {
  int n = static_cast<int>(adj.size());
  auto walk = [&](int pos, int step, int end) {
    int zeros = 0;
    while (pos != end) {
      pos += step;
      zeros = (adj[pos] == 0) ? zeros + 1 : 0;
      if (zeros == 2) return pos == end ? end : pos + step;
    }
    return end;
  };
  return {walk(lo, -1, 0), walk(hi, +1, n - 1)};
}

WCReport check_working_conditions(const LinearGraph& g, bool forbid_bad) {
  if (g.convention != Convention::Dual)
    throw std::invalid_argument("check_working_conditions: expects a Dual-convention graph");
  WCReport report;
  auto view = adjusted_weights(g);
  const auto& adj = view.adjusted;
  auto adj_of = [&](VertexId v) { return adj[v.comp][v.pos]; };
  auto fail = [&](std::string cond, std::vector<VertexId> witness) {
    report.passed = false;
    report.violations.push_back({std::move(cond), std::move(witness)});
  };

  auto vertices = g.vertices();
  std::vector<VertexId> bads = bad_vertices(g);

  // I: all weights >= 2 (guaranteed by construction, kept for completeness)
  for (VertexId v : vertices)
    if (g.weight(v) < 2) fail("I", {v});

  // II: w' <= 3 everywhere, at most one vertex with w' > 1
  std::vector<VertexId> large;
  for (VertexId v : vertices) {
    if (adj_of(v) > 3) fail("II", {v});
    if (adj_of(v) > 1) large.push_back(v);
  }
  if (large.size() > 1) fail("II", large);

  // III: a w'>1 vertex and a bad vertex with w' = 1 must be adjacent
  for (VertexId v : vertices)
    if (adj_of(v) > 1)
      for (VertexId x : bads)
        if (adj_of(x) == 1 && !adjacent(x, v)) fail("III", {v, x});

  // IV: a w' = 3 vertex forbids any adjacent 1,1 pair
  std::vector<std::pair<VertexId, VertexId>> one_one;
  for (int c = 0; c < static_cast<int>(g.components.size()); ++c)
    for (int p = 0; p + 1 < static_cast<int>(adj[c].size()); ++p)
      if (adj[c][p] == 1 && adj[c][p + 1] == 1)
        one_one.push_back({{c, p}, {c, p + 1}});
  for (VertexId v : vertices)
    if (adj_of(v) == 3)
      for (auto& [u1, u2] : one_one) fail("IV", {v, u1, u2});

  // V: a bad vertex with w' = 2 must touch every adjacent 1,1 pair
  for (auto& [u1, u2] : one_one)
    for (VertexId x : bads)
      if (adj_of(x) == 2 && !adjacent(x, u1) && !adjacent(x, u2)) fail("V", {u1, u2, x});

  // VI: forbidden adjusted-weight runs, up to reflection
  for (const auto& [id, pat] : wc6_patterns()) {
    int len = static_cast<int>(pat.size());
    std::vector<int> rev(pat.rbegin(), pat.rend());
    for (int c = 0; c < static_cast<int>(g.components.size()); ++c)
      for (int s = 0; s + len <= static_cast<int>(adj[c].size()); ++s) {
        bool fwd = std::equal(pat.begin(), pat.end(), adj[c].begin() + s);
        bool bwd = std::equal(rev.begin(), rev.end(), adj[c].begin() + s);
        if (fwd || bwd) {
          std::vector<VertexId> w;
          for (int i = 0; i < len; ++i) w.push_back({c, s + i});
          fail(id, w);
        }
      }
  }

  // VII: all bad vertices inside one copy of a shape, circles = bad set
  if (!bads.empty()) {
    bool spread = false;
    for (size_t i = 1; i < bads.size(); ++i)
      if (bads[i].comp != bads[0].comp) spread = true;
    if (spread || !match_wc7(g, adj, bads)) fail("VII", bads);
  }

  if (forbid_bad && !bads.empty()) fail("no-bad", bads);

  return report;
}

const std::vector<std::pair<char, Pattern>>& forbidden_17() {
  static const std::vector<std::pair<char, Pattern>> table = [] {
    auto mk = [](std::vector<std::vector<int>> comps) {
      return LinearGraph(std::move(comps), Convention::Plumbing);
    };
    std::vector<std::pair<char, Pattern>> t;
    t.emplace_back('a', mk({{5, 2}}));
    t.emplace_back('b', mk({{6, 2, 2}}));
    t.emplace_back('c', mk({{2}, {2}}));
    t.emplace_back('d', mk({{3}, {2, 2}}));
    t.emplace_back('e', mk({{3, 2, 2, 3}}));
    t.emplace_back('f', mk({{3, 5, 3, 2}}));
    t.emplace_back('g', mk({{2, 2, 3, 5}}));
    t.emplace_back('h', mk({{4, 3, 2}}));
    t.emplace_back('i', mk({{3, 4, 2}}));
    t.emplace_back('j', mk({{4, 4, 2, 2}}));
    t.emplace_back('k', mk({{3, 4, 3, 3, 2}}));
    t.emplace_back('l', mk({{3, 3}, {2}}));
    t.emplace_back('m', mk({{3, 2, 3}, {3}}));
    t.emplace_back('n', mk({{4}, {4}}));
    t.emplace_back('o', mk({{4}, {3, 3}}));
    t.emplace_back('p', mk({{4}, {3, 2, 3}}));
    t.emplace_back('q', mk({{3, 3}, {3, 3}}));
    return t;
  }();
  return table;
}

std::pair<bool, std::vector<ConfigHit>> check_17(const LinearGraph& p) {
  if (p.convention != Convention::Plumbing)
    throw std::invalid_argument("check_17: expects a Plumbing-convention graph");
  std::vector<ConfigHit> hits;
  for (const auto& [id, pattern] : forbidden_17())
    for (const auto& subset : induced_occurrences(p, pattern)) hits.push_back({id, subset});
  return {hits.empty(), hits};
}

std::optional<BadStructure> bad_structure(const LinearGraph& g) {
  WCReport wc = check_working_conditions(g);
  if (!wc.passed) throw std::invalid_argument("bad_structure: graph fails the Working Conditions");
  std::vector<VertexId> bads = bad_vertices(g);
  if (bads.empty()) return std::nullopt;
  auto view = adjusted_weights(g);
  auto matched = match_wc7(g, view.adjusted, bads);
  if (!matched) throw std::logic_error("bad_structure: bad vertices fit no WC VII shape");

  BadStructure bs = matched->first;
  int c = bs.component;
  auto [plo, phi] = bs.bad_part;
  for (int i = plo + 1; i < phi; ++i) bs.inner_bad_part.push_back(i);
  bs.neck_vertices = {plo, phi};
  bs.extended_bad_part = extended_interval(view.adjusted[c], plo, phi);
  auto [lo, hi] = bs.extended_bad_part;
  int len = static_cast<int>(g.components[c].size());

  // outside part: everything off the extended bad part plus the overlap sets
  for (VertexId v : g.vertices())
    if (v.comp != c || v.pos < lo || v.pos > hi) bs.outside_part.push_back(v);
  if (lo > 0) {
    for (int i = lo; i <= lo + 2; ++i) bs.outside_part.push_back({c, i});
    bs.screw_slots.push_back({lo + 2, lo + 3});
  }
  if (hi < len - 1) {
    for (int i = hi - 2; i <= hi; ++i) bs.outside_part.push_back({c, i});
    bs.screw_slots.push_back({hi - 2, hi - 3});
  }
  std::sort(bs.outside_part.begin(), bs.outside_part.end());
  return bs;
}

}  // namespace plumbkit
