#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "theta/errors.hpp"

namespace theta {

/// Coefficient field descriptor: the rationals (p == 0) or a prime field F_p
/// with p a prime below 2^30 (so products fit comfortably in int64).
struct FieldSpec {
    uint32_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const FieldSpec&) const = default;

    /// "Q" or "Fp:<prime>".
    static FieldSpec parse(const std::string& s);
    std::string to_string() const;
};

/// An exact field element: an arbitrary-precision rational in canonical form
/// (reduced, positive denominator), or a residue in [0,p) of a prime field.
/// Elements of different fields never mix; mixing throws FieldMismatch.
class FieldElem {
public:
    FieldElem() : q_(0), p_(0) {}

    static FieldElem rational(mpq_class v) {
        v.canonicalize();
        FieldElem e;
        e.q_ = std::move(v);
        return e;
    }

    static FieldElem integer(long v, const FieldSpec& spec) {
        if (spec.is_rational()) return rational(mpq_class(v));
        FieldElem e;
        e.p_ = spec.p;
        long r = v % long(spec.p);
        if (r < 0) r += long(spec.p);
        e.q_ = r;
        return e;
    }

    static FieldElem zero(const FieldSpec& spec) { return integer(0, spec); }
    static FieldElem one(const FieldSpec& spec) { return integer(1, spec); }

    /// Parse "n", "-n" or "n/d" in the given field.
    static FieldElem parse(const std::string& s, const FieldSpec& spec);

    FieldSpec spec() const { return FieldSpec{p_}; }
    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }

    const mpq_class& rational_value() const { return q_; }
    int64_t residue() const { return q_.get_num().get_si(); }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;

    bool operator==(const FieldElem& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    /// Sign of the printed representative (-1, 0, +1); F_p residues are
    /// printed as non-negative integers, so never negative.
    int sgn() const { return ::sgn(q_); }

    std::string to_string() const;

private:
    void check(const FieldElem& o) const {
        if (p_ != o.p_) fail(ErrorCode::FieldMismatch, "elements of different fields");
    }
    static int64_t mod_inverse(int64_t a, int64_t p);

    mpq_class q_; // rational value, or the residue as an integer when p_ > 0
    uint32_t p_;
};

} // namespace theta
