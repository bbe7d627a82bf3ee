#include "plumbkit/duality.hpp"

#include <stdexcept>

namespace plumbkit {

namespace {

// c = ([2]^{run[0]}, b[0], [2]^{run[1]}, ..., b[k-1], [2]^{run[k]})
struct HjParse {
  std::vector<int> run;    // k+1 run lengths of 2s
  std::vector<int> b;      // the k entries >= 3
  std::vector<int> b_pos;  // their positions in c
};

HjParse parse_hj(const ChainWeights& c) {
  HjParse out;
  int current_run = 0;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (c[i] < 2) throw std::invalid_argument("dualize: entries must be >= 2");
    if (c[i] == 2) {
      ++current_run;
    } else {
      out.run.push_back(current_run);
      out.b.push_back(c[i]);
      out.b_pos.push_back(i);
      current_run = 0;
    }
  }
  out.run.push_back(current_run);
  return out;
}

}  // namespace

ChainWeights dualize_component(const ChainWeights& c) {
  if (c.empty()) throw std::invalid_argument("dualize: empty chain");
  HjParse p = parse_hj(c);
  std::vector<int> adjusted;
  for (size_t i = 0; i < p.run.size(); ++i) {
    if (i > 0)
      for (int z = 0; z < p.b[i - 1] - 3; ++z) adjusted.push_back(0);
    adjusted.push_back(p.run[i] + 1);
  }
  ChainWeights dual(adjusted.size());
  int len = static_cast<int>(adjusted.size());
  for (int i = 0; i < len; ++i) {
    int degree = (len == 1) ? 0 : ((i == 0 || i == len - 1) ? 1 : 2);
    dual[i] = adjusted[i] + degree;
  }
  return dual;
}

LinearGraph dualize(const LinearGraph& g) {
  LinearGraph out;
  out.convention = g.convention == Convention::Plumbing ? Convention::Dual : Convention::Plumbing;
  for (const auto& comp : g.components) {
    ChainWeights dual = dualize_component(ChainWeights(comp.begin(), comp.end()));
    out.components.emplace_back(dual.begin(), dual.end());
  }
  return out;
}

int b2(const LinearGraph& g) { return g.vertex_count(); }

std::pair<int, int> blowdown_spot(const ChainWeights& c, int pos) {
  if (pos < 0 || pos >= static_cast<int>(c.size()))
    throw std::out_of_range("blowdown_spot: position");
  HjParse p = parse_hj(c);
  // dual index of the vertex coming from run i
  auto group_index = [&](int i) {
    int idx = i;
    for (int m = 0; m < i; ++m) idx += p.b[m] - 3;
    return idx;
  };
  if (c[pos] == 2) {
    // inside a run of 2s: the run's dual vertex, a -4
    for (int i = 0; i < static_cast<int>(p.run.size()); ++i) {
      int run_start = (i == 0) ? 0 : p.b_pos[i - 1] + 1;
      if (pos >= run_start && pos < run_start + p.run[i]) {
        int g = group_index(i);
        return {g, g};
      }
    }
    throw std::logic_error("blowdown_spot: parse");
  }
  // a b-entry of value 3 or 4: the pair/triple between groups i and i+1
  for (int i = 0; i < static_cast<int>(p.b.size()); ++i) {
    if (p.b_pos[i] == pos) {
      if (c[pos] != 3 && c[pos] != 4)
        throw std::invalid_argument("blowdown_spot: bad vertex weight must be 2, 3 or 4");
      return {group_index(i), group_index(i + 1)};
    }
  }
  throw std::logic_error("blowdown_spot: position not found in parse");
}

}  // namespace plumbkit
