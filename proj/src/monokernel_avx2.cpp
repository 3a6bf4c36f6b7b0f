// AVX2 variants of the exponent-vector kernels. This translation unit is
// compiled with -mavx2; it is only ever called after a runtime
// __builtin_cpu_supports("avx2") check in monokernel.cpp.

#if defined(__x86_64__) || defined(_M_X64)

#include "theta/monokernel.hpp"

#include <immintrin.h>

namespace theta::mk {
namespace {

constexpr std::size_t kLanes = 8; // int32 lanes per 256-bit vector

void add_avx2(const exp_t* a, const exp_t* b, exp_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_add_epi32(va, vb));
    }
    for (; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_avx2(const exp_t* a, const exp_t* b, exp_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_sub_epi32(va, vb));
    }
    for (; i < n; ++i) out[i] = a[i] - b[i];
}

void max_avx2(const exp_t* a, const exp_t* b, exp_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_max_epi32(va, vb));
    }
    for (; i < n; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

bool leq_avx2(const exp_t* a, const exp_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // a[i] > b[i] in any lane breaks divisibility
        __m256i gt = _mm256_cmpgt_epi32(va, vb);
        if (!_mm256_testz_si256(gt, gt)) return false;
    }
    for (; i < n; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool eq_avx2(const exp_t* a, const exp_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i ne = _mm256_xor_si256(va, vb);
        if (!_mm256_testz_si256(ne, ne)) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

int64_t dot_avx2(const exp_t* a, const exp_t* w, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vw = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
        // widen odd/even lanes to 64-bit products and accumulate
        __m256i lo = _mm256_mul_epi32(va, vw);
        __m256i hi = _mm256_mul_epi32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vw, 32));
        acc = _mm256_add_epi64(acc, _mm256_add_epi64(lo, hi));
    }
    alignas(32) int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    int64_t s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) s += int64_t(a[i]) * int64_t(w[i]);
    return s;
}

std::ptrdiff_t mismatch_avx2(const exp_t* a, const exp_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        unsigned mask = unsigned(_mm256_movemask_ps(
            _mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vb))));
        if (mask != 0xFFu) return std::ptrdiff_t(i) + __builtin_ctz(~mask & 0xFFu);
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return std::ptrdiff_t(i);
    return -1;
}

std::ptrdiff_t rev_mismatch_avx2(const exp_t* a, const exp_t* b, std::size_t n) {
    std::size_t i = n;
    while (i >= kLanes) {
        i -= kLanes;
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        unsigned mask = unsigned(_mm256_movemask_ps(
            _mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vb))));
        if (mask != 0xFFu)
            return std::ptrdiff_t(i) + (31 - __builtin_clz(~mask & 0xFFu));
    }
    while (i-- > 0)
        if (a[i] != b[i]) return std::ptrdiff_t(i);
    return -1;
}

const Kernels kAvx2 = {
    "avx2",
    add_avx2, sub_avx2, max_avx2,
    leq_avx2, eq_avx2, dot_avx2,
    mismatch_avx2, rev_mismatch_avx2,
};

} // namespace

const Kernels* avx2_kernels() { return &kAvx2; }

} // namespace theta::mk

#endif // x86_64
