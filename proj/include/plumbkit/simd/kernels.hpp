#pragma once

#include <cstddef>
#include <cstdint>

// Small integer kernels used by the enumeration inner loops: a widening dot
// product and a scaled subtraction (rank-1 Gram updates). Each has a scalar
// reference implementation and a vectorized variant; the active one is picked
// at load time from CPU capabilities. simd::dot_i32 and simd::sub_scaled_i32
// must agree with the *_scalar functions on every input, which is what
// tests/test_simd.cpp pins down.

namespace plumbkit::simd {

int64_t dot_i32_scalar(const int32_t* a, const int32_t* b, size_t n);
void sub_scaled_i32_scalar(int32_t* y, int32_t c, const int32_t* x, size_t n);

#if defined(__x86_64__) || defined(_M_X64)
int64_t dot_i32_avx2(const int32_t* a, const int32_t* b, size_t n);
void sub_scaled_i32_avx2(int32_t* y, int32_t c, const int32_t* x, size_t n);
#endif
#if defined(__aarch64__)
int64_t dot_i32_neon(const int32_t* a, const int32_t* b, size_t n);
void sub_scaled_i32_neon(int32_t* y, int32_t c, const int32_t* x, size_t n);
#endif

// Dispatched entry points.
extern int64_t (*dot_i32)(const int32_t*, const int32_t*, size_t);
extern void (*sub_scaled_i32)(int32_t*, int32_t, const int32_t*, size_t);

// Name of the variant selected at startup ("scalar", "avx2", "neon").
const char* active_variant();

}  // namespace plumbkit::simd
