#include "plumbkit/fillings.hpp"

#include <algorithm>
#include <stdexcept>

#include "plumbkit/conditions.hpp"
#include "plumbkit/duality.hpp"

namespace plumbkit {

bool reduces_to_zero(std::vector<int> t) {
  while (t.size() > 1) {
    auto it = std::find(t.begin(), t.end(), 1);
    if (it == t.end()) return false;
    size_t i = static_cast<size_t>(it - t.begin());
    if (i > 0) --t[i - 1];
    if (i + 1 < t.size()) --t[i + 1];
    t.erase(it);
    for (int v : t)
      if (v < 0) return false;
  }
  return t.size() == 1 && t[0] == 0;
}

AdmissibleTuple standard_tuple(int length) {
  if (length < 1) throw std::invalid_argument("standard_tuple: length must be >= 1");
  if (length == 1) return {{0}};
  std::vector<int> t(length, 2);
  t.front() = t.back() = 1;
  return {t};
}

AdmissibleTuple bad_vertex_tuple(const ChainWeights& dual_weights, int j) {
  int k = static_cast<int>(dual_weights.size());
  if (j <= 1 || j >= k)
    throw std::invalid_argument("bad_vertex_tuple: a bad vertex is interior (1 < j < k)");
  LinearGraph g = chain(dual_weights, Convention::Dual);
  auto bads = bad_vertices(g);
  if (std::find(bads.begin(), bads.end(), VertexId{0, j - 1}) == bads.end())
    throw std::invalid_argument("bad_vertex_tuple: vertex is not bad");
  AdmissibleTuple n = standard_tuple(k);
  std::vector<int> t = n.entries;
  t[j - 1] = 1;
  t[j - 2] += 1;
  t[j] += 1;
  for (int i = 0; i < k; ++i)
    if (dual_weights[i] < t[i])
      throw std::invalid_argument("bad_vertex_tuple: tuple not dominated by the dual weights");
  if (!reduces_to_zero(t)) throw std::logic_error("bad_vertex_tuple: tuple fails admissibility");
  return {t};
}

FillingCount count_fillings(const LensSpace& l) {
  LinearGraph plumbing = chain(expand(l.p, l.q), Convention::Plumbing);
  auto [ok, hits] = check_17(plumbing);
  if (!ok) throw std::invalid_argument("count_fillings: plumbing graph contains a forbidden configuration");

  auto mk = [](std::vector<std::vector<int>> comps) {
    return LinearGraph(std::move(comps), Convention::Plumbing);
  };
  FillingCount out;
  out.n_l = count_induced(plumbing, {mk({{4}}), mk({{3, 3}}), mk({{3, 2, 3}})});
  out.q_squared_one = (l.q * l.q) % l.p == 1;
  out.has_symmetric_pattern = contains_induced(plumbing, mk({{4, 4}})) ||
                              contains_induced(plumbing, mk({{3, 3, 3}}));
  out.reduced = out.q_squared_one && out.has_symmetric_pattern;
  out.count = out.reduced ? out.n_l : out.n_l + 1;
  return out;
}

FillingPi1 filling_pi1(const LensSpace& l) {
  LinearGraph dual = chain(expand(l.p, l.p - l.q), Convention::Dual);
  if (bad_vertices(dual).empty())
    throw std::invalid_argument("filling_pi1: dual graph has no bad vertex");
  if (!check_working_conditions(dual).passed)
    throw std::invalid_argument("filling_pi1: dual graph fails the Working Conditions");
  bool exceptional = (l.p == 4 && l.q == 1) || (l.p == 8 && l.q == 3) || (l.p == 12 && l.q == 5);
  return exceptional ? FillingPi1::Z2 : FillingPi1::Trivial;
}

}  // namespace plumbkit
