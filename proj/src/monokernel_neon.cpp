// NEON variants of the exponent-vector kernels (aarch64 only; NEON is
// mandatory on aarch64 so there is no runtime feature test).

#if defined(__aarch64__)

#include "theta/monokernel.hpp"

#include <arm_neon.h>

namespace theta::mk {
namespace {

constexpr std::size_t kLanes = 4; // int32 lanes per 128-bit vector

void add_neon(const exp_t* a, const exp_t* b, exp_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes)
        vst1q_s32(out + i, vaddq_s32(vld1q_s32(a + i), vld1q_s32(b + i)));
    for (; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_neon(const exp_t* a, const exp_t* b, exp_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes)
        vst1q_s32(out + i, vsubq_s32(vld1q_s32(a + i), vld1q_s32(b + i)));
    for (; i < n; ++i) out[i] = a[i] - b[i];
}

void max_neon(const exp_t* a, const exp_t* b, exp_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes)
        vst1q_s32(out + i, vmaxq_s32(vld1q_s32(a + i), vld1q_s32(b + i)));
    for (; i < n; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

bool leq_neon(const exp_t* a, const exp_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        uint32x4_t gt = vcgtq_s32(vld1q_s32(a + i), vld1q_s32(b + i));
        if (vmaxvq_u32(gt) != 0) return false;
    }
    for (; i < n; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool eq_neon(const exp_t* a, const exp_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        uint32x4_t ne = veorq_u32(vreinterpretq_u32_s32(vld1q_s32(a + i)),
                                  vreinterpretq_u32_s32(vld1q_s32(b + i)));
        if (vmaxvq_u32(ne) != 0) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

int64_t dot_neon(const exp_t* a, const exp_t* w, std::size_t n) {
    int64x2_t acc = vdupq_n_s64(0);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        int32x4_t va = vld1q_s32(a + i);
        int32x4_t vw = vld1q_s32(w + i);
        acc = vaddq_s64(acc, vmull_s32(vget_low_s32(va), vget_low_s32(vw)));
        acc = vaddq_s64(acc, vmull_s32(vget_high_s32(va), vget_high_s32(vw)));
    }
    int64_t s = vgetq_lane_s64(acc, 0) + vgetq_lane_s64(acc, 1);
    for (; i < n; ++i) s += int64_t(a[i]) * int64_t(w[i]);
    return s;
}

std::ptrdiff_t mismatch_neon(const exp_t* a, const exp_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        uint32x4_t eq = vceqq_s32(vld1q_s32(a + i), vld1q_s32(b + i));
        if (vminvq_u32(eq) == 0) {
            for (std::size_t j = 0; j < kLanes; ++j)
                if (a[i + j] != b[i + j]) return std::ptrdiff_t(i + j);
        }
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return std::ptrdiff_t(i);
    return -1;
}

std::ptrdiff_t rev_mismatch_neon(const exp_t* a, const exp_t* b, std::size_t n) {
    std::size_t i = n;
    while (i >= kLanes) {
        i -= kLanes;
        uint32x4_t eq = vceqq_s32(vld1q_s32(a + i), vld1q_s32(b + i));
        if (vminvq_u32(eq) == 0) {
            for (std::size_t j = kLanes; j-- > 0;)
                if (a[i + j] != b[i + j]) return std::ptrdiff_t(i + j);
        }
    }
    while (i-- > 0)
        if (a[i] != b[i]) return std::ptrdiff_t(i);
    return -1;
}

const Kernels kNeon = {
    "neon",
    add_neon, sub_neon, max_neon,
    leq_neon, eq_neon, dot_neon,
    mismatch_neon, rev_mismatch_neon,
};

} // namespace

const Kernels* neon_kernels() { return &kNeon; }

} // namespace theta::mk

#endif // aarch64
