#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "theta/monokernel.hpp"

namespace theta {

/// A monomial x_0^{a_0}...x_{n}^{a_n}: a vector of non-negative exponents.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : e_(num_vars, 0) {}
    explicit Monomial(std::vector<mk::exp_t> exps) : e_(std::move(exps)) {}

    static Monomial one(std::size_t num_vars) { return Monomial(num_vars); }
    static Monomial var(std::size_t num_vars, std::size_t i, mk::exp_t k = 1) {
        Monomial m(num_vars);
        m.e_[i] = k;
        return m;
    }

    std::size_t num_vars() const { return e_.size(); }
    mk::exp_t operator[](std::size_t i) const { return e_[i]; }
    mk::exp_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<mk::exp_t>& exponents() const { return e_; }
    bool is_one() const {
        for (auto x : e_)
            if (x) return false;
        return true;
    }

    int64_t total_degree() const {
        int64_t s = 0;
        for (auto x : e_) s += x;
        return s;
    }

    /// w-weighted degree, the grading every order and Hilbert series uses.
    int64_t weighted_degree(const std::vector<mk::exp_t>& w) const {
        return mk::active().dot(e_.data(), w.data(), e_.size());
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(e_.size());
        mk::active().add(e_.data(), o.e_.data(), r.e_.data(), e_.size());
        return r;
    }

    /// Exact quotient; caller must know o divides *this.
    Monomial operator/(const Monomial& o) const {
        Monomial r(e_.size());
        mk::active().sub(e_.data(), o.e_.data(), r.e_.data(), e_.size());
        return r;
    }

    bool divides(const Monomial& o) const {
        return mk::active().leq(e_.data(), o.e_.data(), e_.size());
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(e_.size());
        mk::active().max(e_.data(), o.e_.data(), r.e_.data(), e_.size());
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const {
        return e_.size() == o.e_.size() &&
               mk::active().eq(e_.data(), o.e_.data(), e_.size());
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    /// Structural order (plain lex on the exponent vector), used only for the
    /// canonical in-memory term ordering, independent of any monomial order.
    bool lex_less(const Monomial& o) const {
        auto i = mk::active().mismatch(e_.data(), o.e_.data(), e_.size());
        return i >= 0 && e_[std::size_t(i)] < o.e_[std::size_t(i)];
    }

private:
    std::vector<mk::exp_t> e_;
};

} // namespace theta

template <>
struct std::hash<theta::Monomial> {
    std::size_t operator()(const theta::Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : m.exponents()) {
            h ^= std::size_t(uint32_t(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};
