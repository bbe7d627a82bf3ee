#include <doctest.h>

#include <numeric>
#include <random>

#include "plumbkit/contfrac.hpp"

using namespace plumbkit;

namespace {

// Independent oracle: evaluate the continued fraction by the forward
// continuant recurrence p_i = a_i p_{i-1} - p_{i-2}.
std::pair<long long, long long> continuant_eval(const ChainWeights& c) {
  long long p2 = 1, p1 = c[0];
  long long q2 = 0, q1 = 1;
  for (size_t i = 1; i < c.size(); ++i) {
    long long p0 = c[i] * p1 - p2;
    long long q0 = c[i] * q1 - q2;
    p2 = p1;
    p1 = p0;
    q2 = q1;
    q1 = q0;
  }
  return {p1, q1};
}

}  // namespace

TEST_CASE("expand on known chains") {
  CHECK(expand(9, 2) == ChainWeights{5, 2});
  CHECK(expand(64, 23) == ChainWeights{3, 5, 3, 2});
  CHECK(expand(2, 1) == ChainWeights{2});
  CHECK(expand(4, 3) == ChainWeights{2, 2, 2});
  CHECK(expand(55, 21) == ChainWeights{3, 3, 3, 3});
  CHECK(expand(55, 34) == ChainWeights{2, 3, 3, 3, 2});
}

TEST_CASE("expand rejects bad input") {
  CHECK_THROWS(expand(4, 2));
  CHECK_THROWS(expand(3, 5));
  CHECK_THROWS(expand(5, 0));
  CHECK_THROWS(LensSpace(6, 3));
}

TEST_CASE("evaluate matches the continuant oracle") {
  CHECK(evaluate({5, 2}) == std::pair<long long, long long>{9, 2});
  CHECK(evaluate({2, 2, 2}) == std::pair<long long, long long>{4, 3});
  CHECK(evaluate({3, 5, 3, 2}) == continuant_eval({3, 5, 3, 2}));
  CHECK(evaluate({3, 5, 3, 2}) == std::pair<long long, long long>{64, 23});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 9), w(2, 7);
  for (int trial = 0; trial < 500; ++trial) {
    ChainWeights c(len(rng));
    for (auto& a : c) a = w(rng);
    CHECK(evaluate(c) == continuant_eval(c));
  }
}

TEST_CASE("round trip, minimality, reversal duality") {
  for (long long p = 2; p <= 3000; ++p)
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ChainWeights c = expand(p, q);
      for (int a : c) CHECK(a >= 2);
      CHECK(evaluate(c) == std::pair<long long, long long>{p, q});
    }
  // sampled continuation towards the stated bound
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> pd(3001, 10000);
  for (int trial = 0; trial < 20000; ++trial) {
    long long p = pd(rng);
    long long q = std::uniform_int_distribution<long long>(1, p - 1)(rng);
    if (std::gcd(p, q) != 1) continue;
    CHECK(evaluate(expand(p, q)) == std::pair<long long, long long>{p, q});
  }
}

TEST_CASE("reversing the chain inverts q mod p") {
  for (long long p = 2; p <= 300; ++p)
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ChainWeights c = expand(p, q);
      std::reverse(c.begin(), c.end());
      auto [p2, qbar] = evaluate(c);
      CHECK(p2 == p);
      CHECK(qbar == mod_inverse(q, p));
      CHECK((q * qbar) % p == 1);
    }
}
