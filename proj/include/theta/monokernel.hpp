#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Data-parallel kernels for monomial exponent vectors. Every divisibility
// test, lcm, product and order comparison in the Gröbner engine bottoms out
// here, so these loops come in a scalar reference flavour plus SIMD variants
// selected once at startup from the CPU features. All variants compute
// bit-identical results; tests/test_monokernel.cpp checks the equivalence
// on random inputs.

namespace theta::mk {

using exp_t = int32_t;

struct Kernels {
    const char* name;
    // out[i] = a[i] + b[i]
    void (*add)(const exp_t* a, const exp_t* b, exp_t* out, std::size_t n);
    // out[i] = a[i] - b[i]  (caller guarantees divisibility when it matters)
    void (*sub)(const exp_t* a, const exp_t* b, exp_t* out, std::size_t n);
    // out[i] = max(a[i], b[i])
    void (*max)(const exp_t* a, const exp_t* b, exp_t* out, std::size_t n);
    // a[i] <= b[i] for all i
    bool (*leq)(const exp_t* a, const exp_t* b, std::size_t n);
    // a == b
    bool (*eq)(const exp_t* a, const exp_t* b, std::size_t n);
    // sum a[i]*w[i], 64-bit accumulate
    int64_t (*dot)(const exp_t* a, const exp_t* w, std::size_t n);
    // first index with a[i] != b[i], or -1 when equal (lex orders)
    std::ptrdiff_t (*mismatch)(const exp_t* a, const exp_t* b, std::size_t n);
    // last index with a[i] != b[i], or -1 when equal (grevlex tie-break)
    std::ptrdiff_t (*rev_mismatch)(const exp_t* a, const exp_t* b, std::size_t n);
};

/// Scalar reference implementation (always available).
const Kernels& scalar();

/// The variant selected at startup: best SIMD the CPU supports, unless the
/// THETA_KERNEL environment variable ("scalar", "avx2", "neon") overrides it.
const Kernels& active();

/// All variants compiled into this binary (scalar first). Used by the
/// equivalence tests.
const std::vector<const Kernels*>& available();

} // namespace theta::mk
