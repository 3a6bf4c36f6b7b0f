#include "theta/field.hpp"

namespace theta {

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "Q") return FieldSpec{0};
    if (s.rfind("Fp:", 0) == 0) {
        long p = 0;
        try {
            p = std::stol(s.substr(3));
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "bad field spec '" + s + "'");
        }
        if (p < 2 || p >= (1L << 30))
            fail(ErrorCode::ParseError, "field characteristic out of range in '" + s + "'");
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) fail(ErrorCode::ParseError, "field characteristic " + std::to_string(p) + " is not prime");
        return FieldSpec{uint32_t(p)};
    }
    fail(ErrorCode::ParseError, "field must be \"Q\" or \"Fp:<prime>\", got '" + s + "'");
}

std::string FieldSpec::to_string() const {
    return is_rational() ? "Q" : "Fp:" + std::to_string(p);
}

FieldElem FieldElem::parse(const std::string& s, const FieldSpec& spec) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        fail(ErrorCode::ParseError, "bad coefficient '" + s + "'");
    q.canonicalize();
    if (spec.is_rational()) return rational(q);
    // reduce num/den mod p
    mpz_class num = q.get_num() % spec.p;
    mpz_class den = q.get_den() % spec.p;
    int64_t n = num.get_si();
    if (n < 0) n += spec.p;
    int64_t d = den.get_si();
    if (d == 0) fail(ErrorCode::ParseError, "denominator divisible by " + std::to_string(spec.p));
    FieldElem e;
    e.p_ = spec.p;
    e.q_ = (n * mod_inverse(d, spec.p)) % spec.p;
    return e;
}

int64_t FieldElem::mod_inverse(int64_t a, int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) fail(ErrorCode::Precondition, "division by zero in F_p");
    int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return t;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check(o);
    FieldElem e;
    e.p_ = p_;
    if (p_ == 0) {
        e.q_ = q_ + o.q_;
    } else {
        e.q_ = (residue() + o.residue()) % p_;
    }
    return e;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check(o);
    FieldElem e;
    e.p_ = p_;
    if (p_ == 0) {
        e.q_ = q_ - o.q_;
    } else {
        int64_t r = (residue() - o.residue()) % p_;
        if (r < 0) r += p_;
        e.q_ = r;
    }
    return e;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check(o);
    FieldElem e;
    e.p_ = p_;
    if (p_ == 0) {
        e.q_ = q_ * o.q_;
    } else {
        e.q_ = (residue() * o.residue()) % int64_t(p_);
    }
    return e;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::operator-() const {
    FieldElem e;
    e.p_ = p_;
    if (p_ == 0) {
        e.q_ = -q_;
    } else {
        int64_t r = residue();
        e.q_ = r == 0 ? 0 : int64_t(p_) - r;
    }
    return e;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) fail(ErrorCode::Precondition, "inverse of zero");
    FieldElem e;
    e.p_ = p_;
    if (p_ == 0) {
        e.q_ = 1 / q_;
    } else {
        e.q_ = mod_inverse(residue(), p_);
    }
    return e;
}

std::string FieldElem::to_string() const {
    return q_.get_str();
}

} // namespace theta
