#include "plumbkit/graphs.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace plumbkit {

LinearGraph::LinearGraph(std::vector<std::vector<int>> comps, Convention conv)
    : components(std::move(comps)), convention(conv) {
  for (const auto& c : components) {
    if (c.empty()) throw std::invalid_argument("LinearGraph: empty component");
    for (int w : c)
      if (w < 2) throw std::invalid_argument("LinearGraph: weights must have magnitude >= 2");
  }
}

int LinearGraph::vertex_count() const {
  int n = 0;
  for (const auto& c : components) n += static_cast<int>(c.size());
  return n;
}

int LinearGraph::degree(VertexId v) const {
  int len = static_cast<int>(components[v.comp].size());
  if (len == 1) return 0;
  return (v.pos == 0 || v.pos == len - 1) ? 1 : 2;
}

int LinearGraph::flat(VertexId v) const {
  int idx = 0;
  for (int c = 0; c < v.comp; ++c) idx += static_cast<int>(components[c].size());
  return idx + v.pos;
}

VertexId LinearGraph::unflat(int idx) const {
  for (int c = 0; c < static_cast<int>(components.size()); ++c) {
    int len = static_cast<int>(components[c].size());
    if (idx < len) return {c, idx};
    idx -= len;
  }
  throw std::out_of_range("LinearGraph::unflat");
}

std::vector<VertexId> LinearGraph::vertices() const {
  std::vector<VertexId> out;
  for (int c = 0; c < static_cast<int>(components.size()); ++c)
    for (int p = 0; p < static_cast<int>(components[c].size()); ++p) out.push_back({c, p});
  return out;
}

AdjustedView adjusted_weights(const LinearGraph& g) {
  AdjustedView view{g, {}};
  for (int c = 0; c < static_cast<int>(g.components.size()); ++c) {
    std::vector<int> adj(g.components[c].size());
    for (int p = 0; p < static_cast<int>(adj.size()); ++p)
      adj[p] = g.components[c][p] - g.degree({c, p});
    view.adjusted.push_back(std::move(adj));
  }
  return view;
}

std::vector<VertexId> bad_vertices(const LinearGraph& g) {
  auto view = adjusted_weights(g);
  std::vector<VertexId> out;
  for (int c = 0; c < static_cast<int>(g.components.size()); ++c) {
    const auto& adj = view.adjusted[c];
    int len = static_cast<int>(adj.size());
    for (int p = 1; p + 1 < len; ++p)
      if (adj[p - 1] > 0 && adj[p + 1] > 0) out.push_back({c, p});
  }
  return out;
}

namespace {

// All (component, start) pairs where `piece` occurs as a consecutive run,
// forward or reversed. Palindromic pieces are reported once per position.
struct Run {
  int comp;
  int start;
  int len;
};

std::vector<Run> piece_runs(const LinearGraph& host, const std::vector<int>& piece) {
  std::vector<Run> runs;
  int len = static_cast<int>(piece.size());
  std::vector<int> rev(piece.rbegin(), piece.rend());
  for (int c = 0; c < static_cast<int>(host.components.size()); ++c) {
    const auto& comp = host.components[c];
    for (int s = 0; s + len <= static_cast<int>(comp.size()); ++s) {
      bool fwd = std::equal(piece.begin(), piece.end(), comp.begin() + s);
      bool bwd = std::equal(rev.begin(), rev.end(), comp.begin() + s);
      if (fwd || bwd) runs.push_back({c, s, len});
    }
  }
  return runs;
}

bool runs_compatible(const Run& a, const Run& b) {
  if (a.comp != b.comp) return true;
  // distinct runs in one component need a >=1 vertex gap, otherwise the
  // induced subgraph would merge them into a longer path
  return a.start >= b.start + b.len + 1 || b.start >= a.start + a.len + 1;
}

void match_rec(const LinearGraph& host, const std::vector<std::vector<Run>>& options, size_t k,
               std::vector<Run>& picked, std::set<std::vector<int>>* subsets, bool* found,
               bool stop_at_first) {
  if (stop_at_first && *found) return;
  if (k == options.size()) {
    *found = true;
    if (subsets) {
      std::vector<int> subset;
      for (const Run& r : picked)
        for (int i = 0; i < r.len; ++i) subset.push_back(host.flat({r.comp, r.start + i}));
      std::sort(subset.begin(), subset.end());
      subsets->insert(std::move(subset));
    }
    return;
  }
  for (const Run& r : options[k]) {
    bool ok = true;
    for (const Run& p : picked)
      if (!runs_compatible(r, p)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    picked.push_back(r);
    match_rec(host, options, k + 1, picked, subsets, found, stop_at_first);
    picked.pop_back();
    if (stop_at_first && *found) return;
  }
}

bool match_pattern(const LinearGraph& host, const Pattern& pattern,
                   std::set<std::vector<int>>* subsets) {
  std::vector<std::vector<Run>> options;
  for (const auto& piece : pattern.components) {
    options.push_back(piece_runs(host, piece));
    if (options.back().empty()) return false;
  }
  // larger pieces first: fewer placements, earlier pruning
  std::sort(options.begin(), options.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  bool found = false;
  std::vector<Run> picked;
  match_rec(host, options, 0, picked, subsets, &found, subsets == nullptr);
  return found;
}

}  // namespace

bool contains_induced(const LinearGraph& host, const Pattern& pattern) {
  if (host.convention != pattern.convention)
    throw std::invalid_argument("contains_induced: convention mismatch");
  return match_pattern(host, pattern, nullptr);
}

std::vector<std::vector<int>> induced_occurrences(const LinearGraph& host, const Pattern& pattern) {
  if (host.convention != pattern.convention)
    throw std::invalid_argument("induced_occurrences: convention mismatch");
  std::set<std::vector<int>> subsets;
  match_pattern(host, pattern, &subsets);
  return {subsets.begin(), subsets.end()};
}

long long count_induced(const LinearGraph& host, const std::vector<Pattern>& patterns) {
  std::set<std::vector<int>> all;
  for (const auto& pat : patterns) {
    if (host.convention != pat.convention)
      throw std::invalid_argument("count_induced: convention mismatch");
    match_pattern(host, pat, &all);
  }
  return static_cast<long long>(all.size());
}

LinearGraph canonical_form(const LinearGraph& g) {
  LinearGraph out = g;
  for (auto& comp : out.components) {
    std::vector<int> rev(comp.rbegin(), comp.rend());
    if (rev < comp) comp = std::move(rev);
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

LinearGraph parse_graph(const std::string& text, Convention conv) {
  std::vector<std::vector<int>> comps;
  std::stringstream comp_stream(text);
  std::string comp_text;
  while (std::getline(comp_stream, comp_text, ';')) {
    std::vector<int> weights;
    std::stringstream w_stream(comp_text);
    std::string tok;
    while (std::getline(w_stream, tok, ',')) {
      size_t pos = tok.find_first_not_of(" \t");
      size_t end = tok.find_last_not_of(" \t");
      if (pos == std::string::npos) throw std::invalid_argument("parse_graph: empty weight");
      tok = tok.substr(pos, end - pos + 1);
      long long w = std::stoll(tok);
      if (w < 0) w = -w;
      if (w < 2 || w > INT32_MAX) throw std::invalid_argument("parse_graph: weight magnitude must be >= 2");
      weights.push_back(static_cast<int>(w));
    }
    if (weights.empty()) throw std::invalid_argument("parse_graph: empty component");
    comps.push_back(std::move(weights));
  }
  if (comps.empty()) throw std::invalid_argument("parse_graph: empty graph");
  return LinearGraph(std::move(comps), conv);
}

std::string format_graph(const LinearGraph& g) {
  std::string out;
  for (size_t c = 0; c < g.components.size(); ++c) {
    if (c) out += ';';
    for (size_t p = 0; p < g.components[c].size(); ++p) {
      if (p) out += ',';
      out += std::to_string(g.components[c][p]);
    }
  }
  return out;
}

LinearGraph chain(const ChainWeights& weights, Convention conv) {
  return LinearGraph({std::vector<int>(weights.begin(), weights.end())}, conv);
}

}  // namespace plumbkit
