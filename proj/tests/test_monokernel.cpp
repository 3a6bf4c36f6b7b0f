#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "theta/monokernel.hpp"

using namespace theta;

// every compiled kernel variant must agree with the scalar reference,
// bit for bit, on random exponent vectors of awkward lengths
TEST_CASE("simd variants match the scalar reference") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int32_t> d(0, 40);

    const auto& variants = mk::available();
    REQUIRE(!variants.empty());
    CHECK(std::string(variants[0]->name) == "scalar");

    for (std::size_t n : {std::size_t(1), std::size_t(2), std::size_t(3), std::size_t(4),
                          std::size_t(5), std::size_t(7), std::size_t(8), std::size_t(9),
                          std::size_t(15), std::size_t(16), std::size_t(17), std::size_t(33)}) {
        for (int rep = 0; rep < 200; ++rep) {
            std::vector<int32_t> a(n), b(n), w(n);
            for (std::size_t i = 0; i < n; ++i) {
                a[i] = d(rng);
                b[i] = d(rng);
                w[i] = 1 + d(rng) % 5;
            }
            if (rep % 3 == 0) b = a; // exercise the all-equal paths
            if (rep % 5 == 0 && n > 1) {
                b = a;
                b[rep % n] += 1; // single mismatch at a controlled spot
            }
            const auto& ref = mk::scalar();
            std::vector<int32_t> r1(n), r2(n);
            for (const auto* k : variants) {
                k->add(a.data(), b.data(), r1.data(), n);
                ref.add(a.data(), b.data(), r2.data(), n);
                CHECK(r1 == r2);
                k->sub(a.data(), b.data(), r1.data(), n);
                ref.sub(a.data(), b.data(), r2.data(), n);
                CHECK(r1 == r2);
                k->max(a.data(), b.data(), r1.data(), n);
                ref.max(a.data(), b.data(), r2.data(), n);
                CHECK(r1 == r2);
                CHECK(k->leq(a.data(), b.data(), n) == ref.leq(a.data(), b.data(), n));
                CHECK(k->eq(a.data(), b.data(), n) == ref.eq(a.data(), b.data(), n));
                CHECK(k->dot(a.data(), w.data(), n) == ref.dot(a.data(), w.data(), n));
                CHECK(k->mismatch(a.data(), b.data(), n) == ref.mismatch(a.data(), b.data(), n));
                CHECK(k->rev_mismatch(a.data(), b.data(), n) ==
                      ref.rev_mismatch(a.data(), b.data(), n));
            }
        }
    }
}

TEST_CASE("active kernel is one of the available variants") {
    const auto& act = mk::active();
    bool found = false;
    for (const auto* k : mk::available())
        if (k == &act) found = true;
    CHECK(found);
}
