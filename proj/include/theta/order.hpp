#pragma once

#include <string>
#include <vector>

#include "theta/monomial.hpp"

namespace theta {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

/// Monomial order kinds. The *-grevlex and lex kinds are global (1 < x_i);
/// the neg* kinds are local (x_i < 1), realizing computations in the local
/// ring at the origin (Mora normal form).
enum class OrderKind {
    Grevlex,          // weighted degree, reverse-lex tie-break
    Lex,              // pure lexicographic, x_0 > x_1 > ...
    NegGrevlex,       // -weighted degree first: local
    NegLex,           // lexicographic with 1 largest: local
};

struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::vector<mk::exp_t> weights; // positive; length = num_vars

    bool is_local() const {
        return kind == OrderKind::NegGrevlex || kind == OrderKind::NegLex;
    }

    static MonomialOrder grevlex(std::vector<mk::exp_t> w) { return {OrderKind::Grevlex, std::move(w)}; }
    static MonomialOrder lex(std::size_t nvars) { return {OrderKind::Lex, std::vector<mk::exp_t>(nvars, 1)}; }
    static MonomialOrder neg_grevlex(std::vector<mk::exp_t> w) { return {OrderKind::NegGrevlex, std::move(w)}; }
    static MonomialOrder neg_lex(std::size_t nvars) { return {OrderKind::NegLex, std::vector<mk::exp_t>(nvars, 1)}; }

    /// The local order paired with a global one (for the same tie-break
    /// family), used when the same pipeline runs in local or graded mode.
    MonomialOrder localized() const {
        switch (kind) {
            case OrderKind::Grevlex: return {OrderKind::NegGrevlex, weights};
            case OrderKind::Lex: return {OrderKind::NegLex, weights};
            default: return *this;
        }
    }

    Ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Ordering::LT; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Ordering::GT; }

    std::string name() const;
};

inline Ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const auto& k = mk::active();
    const std::size_t n = a.num_vars();
    switch (kind) {
        case OrderKind::Grevlex:
        case OrderKind::NegGrevlex: {
            int64_t da = k.dot(a.exponents().data(), weights.data(), n);
            int64_t db = k.dot(b.exponents().data(), weights.data(), n);
            if (kind == OrderKind::NegGrevlex) std::swap(da, db);
            if (da != db) return da > db ? Ordering::GT : Ordering::LT;
            auto i = k.rev_mismatch(a.exponents().data(), b.exponents().data(), n);
            if (i < 0) return Ordering::EQ;
            // in the reverse-lex tie-break the smaller trailing exponent wins
            return a[std::size_t(i)] < b[std::size_t(i)] ? Ordering::GT : Ordering::LT;
        }
        case OrderKind::Lex: {
            auto i = k.mismatch(a.exponents().data(), b.exponents().data(), n);
            if (i < 0) return Ordering::EQ;
            return a[std::size_t(i)] > b[std::size_t(i)] ? Ordering::GT : Ordering::LT;
        }
        case OrderKind::NegLex: {
            auto i = k.mismatch(a.exponents().data(), b.exponents().data(), n);
            if (i < 0) return Ordering::EQ;
            return a[std::size_t(i)] < b[std::size_t(i)] ? Ordering::GT : Ordering::LT;
        }
    }
    return Ordering::EQ;
}

inline std::string MonomialOrder::name() const {
    switch (kind) {
        case OrderKind::Grevlex: return "grevlex";
        case OrderKind::Lex: return "lex";
        case OrderKind::NegGrevlex: return "negweighted-grevlex";
        case OrderKind::NegLex: return "neglex";
    }
    return "?";
}

} // namespace theta
