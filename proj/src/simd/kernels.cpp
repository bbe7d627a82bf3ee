#include "plumbkit/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace plumbkit::simd {

int64_t dot_i32_scalar(const int32_t* a, const int32_t* b, size_t n) {
  int64_t s = 0;
  for (size_t i = 0; i < n; ++i) s += int64_t(a[i]) * b[i];
  return s;
}

void sub_scaled_i32_scalar(int32_t* y, int32_t c, const int32_t* x, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] -= c * x[i];
}

#if defined(__x86_64__) || defined(_M_X64)

__attribute__((target("avx2")))
int64_t dot_i32_avx2(const int32_t* a, const int32_t* b, size_t n) {
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // widen products to 64-bit in two halves: even and odd lanes
    __m256i even = _mm256_mul_epi32(va, vb);
    __m256i odd = _mm256_mul_epi32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32));
    acc = _mm256_add_epi64(acc, _mm256_add_epi64(even, odd));
  }
  alignas(32) int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  int64_t s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) s += int64_t(a[i]) * b[i];
  return s;
}

__attribute__((target("avx2")))
void sub_scaled_i32_avx2(int32_t* y, int32_t c, const int32_t* x, size_t n) {
  __m256i vc = _mm256_set1_epi32(c);
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    vy = _mm256_sub_epi32(vy, _mm256_mullo_epi32(vc, vx));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), vy);
  }
  for (; i < n; ++i) y[i] -= c * x[i];
}

#endif  // x86_64

#if defined(__aarch64__)

int64_t dot_i32_neon(const int32_t* a, const int32_t* b, size_t n) {
  int64x2_t acc = vdupq_n_s64(0);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    int32x4_t va = vld1q_s32(a + i);
    int32x4_t vb = vld1q_s32(b + i);
    acc = vaddq_s64(acc, vmull_s32(vget_low_s32(va), vget_low_s32(vb)));
    acc = vaddq_s64(acc, vmull_s32(vget_high_s32(va), vget_high_s32(vb)));
  }
  int64_t s = vgetq_lane_s64(acc, 0) + vgetq_lane_s64(acc, 1);
  for (; i < n; ++i) s += int64_t(a[i]) * b[i];
  return s;
}

void sub_scaled_i32_neon(int32_t* y, int32_t c, const int32_t* x, size_t n) {
  int32x4_t vc = vdupq_n_s32(c);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    int32x4_t vy = vld1q_s32(y + i);
    int32x4_t vx = vld1q_s32(x + i);
    vst1q_s32(y + i, vsubq_s32(vy, vmulq_s32(vc, vx)));
  }
  for (; i < n; ++i) y[i] -= c * x[i];
}

#endif  // aarch64

namespace {

const char* g_variant = "scalar";

struct Dispatch {
  int64_t (*dot)(const int32_t*, const int32_t*, size_t) = dot_i32_scalar;
  void (*sub)(int32_t*, int32_t, const int32_t*, size_t) = sub_scaled_i32_scalar;
  Dispatch() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) {
      dot = dot_i32_avx2;
      sub = sub_scaled_i32_avx2;
      g_variant = "avx2";
    }
#elif defined(__aarch64__)
    dot = dot_i32_neon;
    sub = sub_scaled_i32_neon;
    g_variant = "neon";
#endif
  }
};

const Dispatch g_dispatch;

}  // namespace

int64_t (*dot_i32)(const int32_t*, const int32_t*, size_t) = g_dispatch.dot;
void (*sub_scaled_i32)(int32_t*, int32_t, const int32_t*, size_t) = g_dispatch.sub;

const char* active_variant() { return g_variant; }

}  // namespace plumbkit::simd
