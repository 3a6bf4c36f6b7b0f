#include "theta/monokernel.hpp"

#include <cstdlib>
#include <cstring>

namespace theta::mk {

namespace {

void add_scalar(const exp_t* a, const exp_t* b, exp_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_scalar(const exp_t* a, const exp_t* b, exp_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void max_scalar(const exp_t* a, const exp_t* b, exp_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

bool leq_scalar(const exp_t* a, const exp_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool eq_scalar(const exp_t* a, const exp_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

int64_t dot_scalar(const exp_t* a, const exp_t* w, std::size_t n) {
    int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += int64_t(a[i]) * int64_t(w[i]);
    return s;
}

std::ptrdiff_t mismatch_scalar(const exp_t* a, const exp_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return std::ptrdiff_t(i);
    return -1;
}

std::ptrdiff_t rev_mismatch_scalar(const exp_t* a, const exp_t* b, std::size_t n) {
    for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return std::ptrdiff_t(i);
    return -1;
}

const Kernels kScalar = {
    "scalar",
    add_scalar, sub_scalar, max_scalar,
    leq_scalar, eq_scalar, dot_scalar,
    mismatch_scalar, rev_mismatch_scalar,
};

} // namespace

const Kernels& scalar() { return kScalar; }

#if defined(__x86_64__) || defined(_M_X64)
const Kernels* avx2_kernels(); // monokernel_avx2.cpp
#endif
#if defined(__aarch64__)
const Kernels* neon_kernels(); // monokernel_neon.cpp
#endif

namespace {

std::vector<const Kernels*> build_available() {
    std::vector<const Kernels*> v;
    v.push_back(&kScalar);
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) v.push_back(avx2_kernels());
#endif
#if defined(__aarch64__)
    v.push_back(neon_kernels());
#endif
    return v;
}

const Kernels* select_active() {
    const auto& v = available();
    if (const char* env = std::getenv("THETA_KERNEL")) {
        for (const Kernels* k : v)
            if (std::strcmp(k->name, env) == 0) return k;
        return &kScalar; // unknown name: fall back to the reference kernels
    }
    return v.back(); // best variant registers last
}

} // namespace

const std::vector<const Kernels*>& available() {
    static const std::vector<const Kernels*> v = build_available();
    return v;
}

const Kernels& active() {
    static const Kernels* k = select_active();
    return *k;
}

} // namespace theta::mk
