#include <algorithm>
#include <map>
#include <sstream>

#include "theta/fpmod.hpp"

namespace theta {

namespace {

// small dense integer polynomial in t, ascending coefficients
using ZPoly = std::vector<int64_t>;

ZPoly zp_trim(ZPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zp_trim(r);
}

ZPoly zp_shift(const ZPoly& a, int64_t k) {
    if (a.empty()) return a;
    ZPoly r(a.size() + std::size_t(k), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + std::size_t(k)] = a[i];
    return r;
}

// keep only divisibility-minimal monomials
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && !(gens[i].divides(gens[j]) && j > i)) redundant = true;
        }
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

// numerator of H(P/I) for a monomial ideal I: N(I) = N(I') - t^{|m|}·N(I':m)
ZPoly monomial_numerator(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return ZPoly{1};
    for (const auto& g : gens)
        if (g.is_one()) return ZPoly{};
    Monomial last = gens.back();
    gens.pop_back();
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) {
        // g : last = g / gcd(g, last)
        Monomial q(g.num_vars());
        for (std::size_t i = 0; i < g.num_vars(); ++i)
            q[i] = std::max<mk::exp_t>(g[i] - last[i], 0);
        colon.push_back(std::move(q));
    }
    ZPoly without = monomial_numerator(gens);
    ZPoly with_colon = monomial_numerator(std::move(colon));
    return zp_sub(without, zp_shift(with_colon, last.total_degree()));
}

} // namespace

int64_t HilbertSeries::numerator_at_one() const {
    int64_t s = 0;
    for (auto c : numerator) s += c;
    return s;
}

int64_t HilbertSeries::coefficient(int64_t d) const {
    d -= shift;
    if (d < 0) return 0;
    if (denom_exponent == 0) {
        return d < int64_t(numerator.size()) ? numerator[std::size_t(d)] : 0;
    }
    // coeff of t^d in p(t)/(1-t)^e = Σ_k p_k·C(d-k+e-1, e-1)
    int64_t s = 0;
    for (std::size_t k = 0; k < numerator.size(); ++k) {
        int64_t m = d - int64_t(k);
        if (m < 0) continue;
        int64_t binom = 1;
        for (int64_t i = 1; i < denom_exponent; ++i) binom = binom * (m + i) / i;
        s += numerator[k] * binom;
    }
    return s;
}

std::string HilbertSeries::to_string() const {
    std::ostringstream o;
    o << "t^" << shift << "*(";
    if (numerator.empty()) o << "0";
    for (std::size_t i = 0; i < numerator.size(); ++i) {
        if (numerator[i] == 0) continue;
        if (numerator[i] > 0 && i > 0 && o.str().back() != '(') o << "+";
        o << numerator[i] << "t^" << i;
    }
    o << ")/(1-t)^" << denom_exponent;
    return o.str();
}

HilbertSeries hilbert_series(const FPModule& m, OrderFamily fam) {
    const auto& ctx = *m.context();
    for (auto w : ctx.weights())
        if (w != 1) fail(ErrorCode::NotGraded, "Hilbert series requires unit weights");
    if (!m.degrees()) fail(ErrorCode::NotGraded, "module carries no generator degrees");
    if (!m.is_graded()) fail(ErrorCode::NotGraded, "presentation is not homogeneous");
    std::size_t nv = ctx.num_vars();

    HilbertSeries h;
    h.denom_exponent = int64_t(nv);
    if (m.is_zero_module()) {
        h.denom_exponent = 0;
        h.shift = 0;
        return h;
    }

    // leading-term module of a graded standard basis
    std::vector<std::vector<Monomial>> lt(m.rank());
    if (!m.relations().empty() || m.ring_modulus()) {
        SubmoduleBasis b = standard_basis(m.relations(), ctx.global_order(fam), m.ring_modulus());
        for (const auto& e : b.elements())
            for (std::size_t c = 0; c < m.rank(); ++c) {
                if (e[c].is_zero()) continue;
                lt[c].push_back(e[c].lead_term(ctx.global_order(fam))->m);
                break;
            }
    }

    std::map<int64_t, int64_t> acc; // exponent -> coefficient
    for (std::size_t c = 0; c < m.rank(); ++c) {
        ZPoly num = monomial_numerator(lt[c]);
        int64_t deg = (*m.degrees())[c];
        for (std::size_t i = 0; i < num.size(); ++i)
            if (num[i] != 0) acc[deg + int64_t(i)] += num[i];
    }
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second == 0 ? acc.erase(it) : std::next(it);
    if (acc.empty()) {
        h.denom_exponent = 0;
        h.shift = 0;
        return h;
    }
    h.shift = acc.begin()->first;
    h.numerator.assign(std::size_t(acc.rbegin()->first - h.shift) + 1, 0);
    for (const auto& [e, cf] : acc) h.numerator[std::size_t(e - h.shift)] = cf;

    // canonical form: cancel (1-t) factors from the numerator
    while (h.denom_exponent > 0) {
        // p divisible by (1-t) iff p(1) == 0; quotient by synthetic division
        if (h.numerator_at_one() != 0) break;
        ZPoly q(h.numerator.size() - 1, 0);
        // p(t) = (1-t)·q(t): q_0 = p_0, q_k = q_{k-1} + p_k
        int64_t carry = 0;
        for (std::size_t k = 0; k + 1 < h.numerator.size(); ++k) {
            carry = k == 0 ? h.numerator[0] : carry + h.numerator[k];
            q[k] = carry;
        }
        h.numerator = zp_trim(std::move(q));
        --h.denom_exponent;
        if (h.numerator.empty()) {
            h.denom_exponent = 0;
            h.shift = 0;
            return h;
        }
    }
    return h;
}

} // namespace theta
