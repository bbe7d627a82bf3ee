#include "plumbkit/contfrac.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace plumbkit {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("contfrac: multiply overflow");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("contfrac: subtract overflow");
  return r;
}

}  // namespace

LensSpace::LensSpace(long long p_, long long q_) : p(p_), q(q_) {
  if (!(p > q && q > 0)) throw std::invalid_argument("LensSpace: need p > q > 0");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("LensSpace: p and q must be coprime");
}

ChainWeights expand(long long p, long long q) {
  if (!(p > q && q > 0)) throw std::invalid_argument("expand: need p > q > 0");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("expand: p and q must be coprime");
  ChainWeights out;
  while (q > 0) {
    long long a = (p + q - 1) / q;  // ceil(p/q)
    if (a < 2 || a > INT32_MAX) throw std::overflow_error("expand: entry out of range");
    out.push_back(static_cast<int>(a));
    long long next_q = checked_sub(checked_mul(a, q), p);
    p = q;
    q = next_q;
  }
  return out;
}

std::pair<long long, long long> evaluate(const ChainWeights& chain) {
  if (chain.empty()) throw std::invalid_argument("evaluate: empty chain");
  long long p = 1, q = 0;  // evaluates right-to-left: p/q <- a - q/p
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    if (*it < 2) throw std::invalid_argument("evaluate: entries must be >= 2");
    long long np = checked_sub(checked_mul(*it, p), q);
    q = p;
    p = np;
  }
  return {p, q};
}

long long mod_inverse(long long q, long long p) {
  long long t = 0, new_t = 1, r = p, new_r = q % p;
  while (new_r != 0) {
    long long quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  return ((t % p) + p) % p;
}

}  // namespace plumbkit
