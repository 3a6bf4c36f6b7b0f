#include "theta/gbasis.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace theta {

// ---------------------------------------------------------------------------
// free-vector helpers

FreeVector zero_vector(std::size_t rank, std::size_t num_vars, FieldSpec field) {
    return FreeVector(rank, Polynomial::zero(num_vars, field));
}

FreeVector unit_vector(std::size_t rank, std::size_t pos, std::size_t num_vars, FieldSpec field) {
    FreeVector v = zero_vector(rank, num_vars, field);
    v[pos] = Polynomial::constant(FieldElem::one(field), num_vars);
    return v;
}

bool is_zero_vector(const FreeVector& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

namespace {

// ---------------------------------------------------------------------------
// module terms, position-over-term order (e_0 > e_1 > ...)

struct MTerm {
    int comp;
    Monomial m;
    FieldElem c;
};

struct ModOrd {
    const MonomialOrder* base;

    int cmp(const MTerm& a, const MTerm& b) const {
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        switch (base->compare(a.m, b.m)) {
            case Ordering::GT: return 1;
            case Ordering::LT: return -1;
            default: return 0;
        }
    }
};

// terms sorted descending, merged, no zero coefficients
using MPoly = std::vector<MTerm>;

MPoly mp_from_fv(const FreeVector& v, const ModOrd& ord) {
    MPoly r;
    for (std::size_t c = 0; c < v.size(); ++c)
        for (const Term& t : v[c].terms()) r.push_back({int(c), t.m, t.c});
    std::sort(r.begin(), r.end(), [&](const MTerm& a, const MTerm& b) { return ord.cmp(a, b) > 0; });
    return r;
}

FreeVector mp_to_fv(const MPoly& p, std::size_t rank, std::size_t nvars, FieldSpec field) {
    FreeVector v = zero_vector(rank, nvars, field);
    for (const MTerm& t : p) v[std::size_t(t.comp)].add_term(t.m, t.c);
    return v;
}

MPoly mp_add(const MPoly& a, const MPoly& b, const ModOrd& ord) {
    MPoly r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = ord.cmp(a[i], b[j]);
        if (c == 0) {
            FieldElem s = a[i].c + b[j].c;
            if (!s.is_zero()) r.push_back({a[i].comp, a[i].m, std::move(s)});
            ++i, ++j;
        } else if (c > 0) {
            r.push_back(a[i++]);
        } else {
            r.push_back(b[j++]);
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
}

// c·x^m·p; multiplication by a monomial preserves the term order
MPoly mp_mul_mono(const MPoly& p, const Monomial& m, const FieldElem& c) {
    MPoly r;
    r.reserve(p.size());
    for (const MTerm& t : p) r.push_back({t.comp, t.m * m, t.c * c});
    return r;
}

MPoly mp_scale(const MPoly& p, const FieldElem& c) {
    MPoly r;
    r.reserve(p.size());
    for (const MTerm& t : p) r.push_back({t.comp, t.m, t.c * c});
    return r;
}

int64_t mp_degree(const MPoly& p, const std::vector<mk::exp_t>& w) {
    int64_t d = -1;
    for (const MTerm& t : p) d = std::max(d, t.m.weighted_degree(w));
    return d;
}

int64_t mp_ecart(const MPoly& p, const std::vector<mk::exp_t>& w) {
    return mp_degree(p, w) - p.front().m.weighted_degree(w);
}

// expression vectors: v ± c·x^m·w entrywise
void expr_axpy(std::vector<Polynomial>& e, const Monomial& m, const FieldElem& c,
               const std::vector<Polynomial>& other) {
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = e[i] - other[i].times_monomial(m, c);
}

struct WorkElem {
    MPoly v;
    std::vector<Polynomial> expr; // v == Σ expr[i] · gens_aug[i], exactly in P
    int64_t sugar = 0;
};

// ---------------------------------------------------------------------------
// the completion engine

class Engine {
public:
    Engine(const std::vector<FreeVector>& gens, const MonomialOrder& order,
           const std::optional<Polynomial>& modulus, std::size_t rank, std::size_t nvars,
           FieldSpec field, bool collect_syz)
        : order_(order), mord_{&order_}, rank_(rank), nvars_(nvars), field_(field),
          local_(order.is_local()), collect_(collect_syz), n_inputs_(gens.size()) {
        std::vector<FreeVector> aug = gens;
        if (modulus && !modulus->is_zero())
            for (std::size_t c = 0; c < rank; ++c) {
                FreeVector fe = zero_vector(rank, nvars, field);
                fe[c] = *modulus;
                aug.push_back(std::move(fe));
            }
        n_aug_ = aug.size();
        for (std::size_t i = 0; i < aug.size(); ++i) {
            MPoly v = mp_from_fv(aug[i], mord_);
            std::vector<Polynomial> expr(n_aug_, Polynomial::zero(nvars_, field_));
            if (v.empty()) {
                if (collect_ && i < n_inputs_) {
                    // a zero generator: the unit syzygy e_i
                    expr[i] = Polynomial::constant(FieldElem::one(field_), nvars_);
                    record_syzygy(expr);
                }
                continue;
            }
            FieldElem lc = v.front().c;
            expr[i] = Polynomial::constant(lc.inverse(), nvars_);
            push_element({mp_scale(v, lc.inverse()), std::move(expr), mp_degree(v, order_.weights)});
        }
    }

    void run() {
        std::size_t guard = 0;
        while (!pairs_.empty()) {
            if (++guard > 1000000) fail(ErrorCode::Internal, "pair limit exceeded in completion");
            auto [sug, i, j] = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            const WorkElem& gi = basis_[std::size_t(i)];
            const WorkElem& gj = basis_[std::size_t(j)];
            // product criterion: sound for ideals (rank 1); skipped while
            // collecting syzygies, where every pair's reduction is a generator
            if (!collect_ && rank_ == 1 && gi.v.front().m.coprime(gj.v.front().m)) continue;
            WorkElem s = spair(gi, gj, sug);
            top_reduce(s);
            if (s.v.empty()) {
                if (collect_) record_syzygy(s.expr);
            } else {
                FieldElem lc = s.v.front().c;
                s.v = mp_scale(s.v, lc.inverse());
                for (auto& e : s.expr) e = e.scaled(lc.inverse());
                push_element(std::move(s));
            }
        }
    }

    // drop lead-redundant elements; tail-reduce for global orders
    void finalize() {
        std::vector<bool> keep(basis_.size(), true);
        for (std::size_t k = basis_.size(); k-- > 0;) {
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                if (j == k || !keep[j]) continue;
                const MTerm& lj = basis_[j].v.front();
                const MTerm& lk = basis_[k].v.front();
                bool same_lead = lj.comp == lk.comp && lj.m == lk.m;
                if (lj.comp == lk.comp && lj.m.divides(lk.m) && (!same_lead || j < k)) {
                    keep[k] = false;
                    break;
                }
            }
        }
        std::vector<WorkElem> kept;
        for (std::size_t k = 0; k < basis_.size(); ++k)
            if (keep[k]) kept.push_back(std::move(basis_[k]));
        basis_ = std::move(kept);
        if (!local_) {
            for (std::size_t k = 0; k < basis_.size(); ++k) tail_reduce(k);
        }
    }

    const std::vector<WorkElem>& elements() const { return basis_; }
    const std::vector<std::vector<Polynomial>>& syzygies() const { return syz_; }
    std::size_t augmented_count() const { return n_aug_; }
    const MonomialOrder& order() const { return order_; }
    const ModOrd& mod_order() const { return mord_; }

private:
    void record_syzygy(const std::vector<Polynomial>& expr) {
        for (const auto& p : expr)
            if (!p.is_zero()) {
                syz_.push_back(expr);
                return;
            }
    }

    void push_element(WorkElem w) {
        int k = int(basis_.size());
        basis_.push_back(std::move(w));
        for (int i = 0; i < k; ++i)
            if (basis_[std::size_t(i)].v.front().comp == basis_[std::size_t(k)].v.front().comp) {
                int64_t s = pair_sugar(std::size_t(i), std::size_t(k));
                pairs_.insert({s, i, k});
            }
    }

    int64_t pair_sugar(std::size_t i, std::size_t j) const {
        const MTerm& li = basis_[i].v.front();
        const MTerm& lj = basis_[j].v.front();
        Monomial L = li.m.lcm(lj.m);
        int64_t di = (L / li.m).weighted_degree(order_.weights) + basis_[i].sugar;
        int64_t dj = (L / lj.m).weighted_degree(order_.weights) + basis_[j].sugar;
        return std::max(di, dj);
    }

    WorkElem spair(const WorkElem& gi, const WorkElem& gj, int64_t sugar) const {
        const MTerm& li = gi.v.front();
        const MTerm& lj = gj.v.front();
        Monomial L = li.m.lcm(lj.m);
        Monomial a = L / li.m, b = L / lj.m;
        WorkElem s;
        s.sugar = sugar;
        FieldElem one = FieldElem::one(field_);
        s.v = mp_add(mp_mul_mono(gi.v, a, one), mp_mul_mono(gj.v, b, -one), mord_);
        s.expr.assign(n_aug_, Polynomial::zero(nvars_, field_));
        for (std::size_t t = 0; t < n_aug_; ++t)
            s.expr[t] = gi.expr[t].times_monomial(a, one) - gj.expr[t].times_monomial(b, one);
        return s;
    }

    // index of the chosen reducer among basis (>=0) or T (-1-t), or INT_MIN
    static constexpr int kNone = INT32_MIN;

    int find_reducer(const MTerm& lead, const std::vector<WorkElem>& T) const {
        if (!local_) {
            for (std::size_t k = 0; k < basis_.size(); ++k) {
                const MTerm& l = basis_[k].v.front();
                if (l.comp == lead.comp && l.m.divides(lead.m)) return int(k);
            }
            return kNone;
        }
        int best = kNone;
        int64_t best_ecart = 0;
        auto consider = [&](const MPoly& v, int idx) {
            const MTerm& l = v.front();
            if (l.comp != lead.comp || !l.m.divides(lead.m)) return;
            int64_t e = mp_ecart(v, order_.weights);
            if (best == kNone || e < best_ecart) {
                best = idx;
                best_ecart = e;
            }
        };
        for (std::size_t k = 0; k < basis_.size(); ++k) consider(basis_[k].v, int(k));
        for (std::size_t t = 0; t < T.size(); ++t) consider(T[t].v, -1 - int(t));
        return best;
    }

    // one top-reduction pass (Buchberger division step / Mora with ecart)
    void top_reduce(WorkElem& w) const {
        std::vector<WorkElem> T; // Mora's intermediate reducers, per reduction
        while (!w.v.empty()) {
            const MTerm lead = w.v.front();
            int r = find_reducer(lead, T);
            if (r == kNone) return;
            // push_back below may reallocate T, so re-acquire g by index
            std::size_t gi = r >= 0 ? std::size_t(r) : std::size_t(-1 - r);
            const std::vector<WorkElem>& pool = r >= 0 ? basis_ : T;
            if (local_ && mp_ecart(pool[gi].v, order_.weights) > mp_ecart(w.v, order_.weights))
                T.push_back(w); // remember the current stage as a reducer
            const WorkElem& g = (r >= 0 ? basis_ : T)[gi];
            Monomial a = lead.m / g.v.front().m;
            FieldElem c = lead.c / g.v.front().c;
            w.v = mp_add(w.v, mp_mul_mono(g.v, a, -c), mord_);
            expr_axpy(w.expr, a, c, g.expr);
        }
    }

    void tail_reduce(std::size_t k) {
        // global orders only: fully reduce the tail of basis_[k] against the rest
        MPoly rem;
        MPoly h = basis_[k].v;
        std::vector<Polynomial>& expr = basis_[k].expr;
        while (!h.empty()) {
            const MTerm lead = h.front();
            int r = kNone;
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                if (j == k) continue;
                const MTerm& l = basis_[j].v.front();
                if (l.comp == lead.comp && l.m.divides(lead.m)) {
                    r = int(j);
                    break;
                }
            }
            if (r == kNone) {
                rem.push_back(lead);
                h.erase(h.begin());
                continue;
            }
            const WorkElem& g = basis_[std::size_t(r)];
            Monomial a = lead.m / g.v.front().m;
            FieldElem c = lead.c / g.v.front().c;
            h = mp_add(h, mp_mul_mono(g.v, a, -c), mord_);
            expr_axpy(expr, a, c, g.expr);
        }
        basis_[k].v = std::move(rem);
    }

    MonomialOrder order_;
    ModOrd mord_;
    std::size_t rank_, nvars_;
    FieldSpec field_;
    bool local_, collect_;
    std::size_t n_inputs_, n_aug_ = 0;
    std::vector<WorkElem> basis_;
    std::set<std::tuple<int64_t, int, int>> pairs_;
    std::vector<std::vector<Polynomial>> syz_;
};

} // namespace

// ---------------------------------------------------------------------------
// SubmoduleBasis

struct SubmoduleBasis::Impl {
    std::size_t rank = 0;
    std::size_t nvars = 0;
    FieldSpec field;
    MonomialOrder order;
    std::optional<Polynomial> modulus;
    std::vector<FreeVector> generators;
    std::vector<FreeVector> elements;
    std::vector<std::vector<Polynomial>> expressions;
};

std::size_t SubmoduleBasis::rank() const { return impl_->rank; }
const MonomialOrder& SubmoduleBasis::order() const { return impl_->order; }
const std::optional<Polynomial>& SubmoduleBasis::ring_modulus() const { return impl_->modulus; }
const std::vector<FreeVector>& SubmoduleBasis::generators() const { return impl_->generators; }
const std::vector<FreeVector>& SubmoduleBasis::elements() const { return impl_->elements; }
const std::vector<std::vector<Polynomial>>& SubmoduleBasis::expressions() const {
    return impl_->expressions;
}

std::string SubmoduleBasis::dump(const std::vector<std::string>& vars) const {
    std::ostringstream out;
    out << "standard basis (" << impl_->order.name() << ", rank " << impl_->rank << ")\n";
    for (std::size_t k = 0; k < impl_->elements.size(); ++k) {
        out << "  [" << k << "] (";
        for (std::size_t c = 0; c < impl_->rank; ++c) {
            if (c) out << ", ";
            out << impl_->elements[k][c].to_string(vars, impl_->order);
        }
        out << ")\n";
    }
    return out.str();
}

struct GBInternal {
    static SubmoduleBasis wrap(std::shared_ptr<const SubmoduleBasis::Impl> p) {
        SubmoduleBasis b;
        b.impl_ = std::move(p);
        return b;
    }
    static const SubmoduleBasis::Impl& impl(const SubmoduleBasis& b) { return *b.impl_; }
};

namespace {

struct Shape {
    std::size_t rank, nvars;
    FieldSpec field;
};

Shape shape_of(const std::vector<FreeVector>& gens, const std::optional<Polynomial>& modulus) {
    if (!gens.empty()) {
        if (gens[0].empty()) fail(ErrorCode::Precondition, "rank-0 free module");
        Shape s{gens[0].size(), gens[0][0].num_vars(), gens[0][0].field()};
        for (const auto& g : gens)
            if (g.size() != s.rank) fail(ErrorCode::Precondition, "generators of mixed rank");
        return s;
    }
    if (modulus) return Shape{1, modulus->num_vars(), modulus->field()};
    fail(ErrorCode::Precondition, "empty generating set without a ring modulus");
}

} // namespace

SubmoduleBasis standard_basis(const std::vector<FreeVector>& gens, const MonomialOrder& order,
                              const std::optional<Polynomial>& ring_modulus) {
    Shape sh = shape_of(gens, ring_modulus);
    Engine eng(gens, order, ring_modulus, sh.rank, sh.nvars, sh.field, false);
    eng.run();
    eng.finalize();
    auto impl = std::make_shared<SubmoduleBasis::Impl>();
    impl->rank = sh.rank;
    impl->nvars = sh.nvars;
    impl->field = sh.field;
    impl->order = order;
    impl->modulus = ring_modulus;
    impl->generators = gens;
    for (const auto& w : eng.elements()) {
        impl->elements.push_back(mp_to_fv(w.v, sh.rank, sh.nvars, sh.field));
        impl->expressions.push_back(w.expr);
    }
    return GBInternal::wrap(std::move(impl));
}

std::vector<FreeVector> syzygies(const std::vector<FreeVector>& m, const MonomialOrder& order,
                                 const std::optional<Polynomial>& ring_modulus) {
    if (m.empty()) return {};
    Shape sh = shape_of(m, ring_modulus);
    Engine eng(m, order, ring_modulus, sh.rank, sh.nvars, sh.field, true);
    eng.run();
    std::vector<FreeVector> out;
    for (const auto& expr : eng.syzygies()) {
        FreeVector s(expr.begin(), expr.begin() + std::ptrdiff_t(m.size()));
        if (!is_zero_vector(s)) out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// normal form / lift against a completed basis

namespace {

struct NFState {
    MPoly h;
    Polynomial unit;
    std::vector<Polynomial> q; // over basis elements
};

NormalFormResult external_nf(const FreeVector& v, const SubmoduleBasis::Impl& B) {
    ModOrd mord{&B.order};
    const bool local = B.order.is_local();
    const std::size_t ne = B.elements.size();
    std::vector<MPoly> elems;
    elems.reserve(ne);
    for (const auto& e : B.elements) elems.push_back(mp_from_fv(e, mord));

    NFState st{mp_from_fv(v, mord), Polynomial::constant(FieldElem::one(B.field), B.nvars),
               std::vector<Polynomial>(ne, Polynomial::zero(B.nvars, B.field))};
    MPoly rem;

    // Mora intermediates carry their own (value, unit, quotients) snapshot
    std::vector<NFState> T;

    auto find_global = [&](const MTerm& lead) -> int {
        for (std::size_t k = 0; k < ne; ++k)
            if (!elems[k].empty() && elems[k].front().comp == lead.comp &&
                elems[k].front().m.divides(lead.m))
                return int(k);
        return INT32_MIN;
    };
    auto find_local = [&](const MTerm& lead) -> int {
        int best = INT32_MIN;
        int64_t be = 0;
        auto consider = [&](const MPoly& p, int idx) {
            if (p.empty()) return;
            const MTerm& l = p.front();
            if (l.comp != lead.comp || !l.m.divides(lead.m)) return;
            int64_t e = mp_ecart(p, B.order.weights);
            if (best == INT32_MIN || e < be) {
                best = idx;
                be = e;
            }
        };
        for (std::size_t k = 0; k < ne; ++k) consider(elems[k], int(k));
        for (std::size_t t = 0; t < T.size(); ++t) consider(T[t].h, -1 - int(t));
        return best;
    };

    while (!st.h.empty()) {
        const MTerm lead = st.h.front();
        int r = local ? find_local(lead) : find_global(lead);
        if (r == INT32_MIN) {
            if (local) break; // weak normal form: irreducible lead ends the reduction
            rem.push_back(lead);
            st.h.erase(st.h.begin());
            continue;
        }
        if (r >= 0) {
            const MPoly& g = elems[std::size_t(r)];
            if (local && mp_ecart(g, B.order.weights) > mp_ecart(st.h, B.order.weights))
                T.push_back(st);
            Monomial a = lead.m / g.front().m;
            FieldElem c = lead.c / g.front().c;
            st.h = mp_add(st.h, mp_mul_mono(g, a, -c), mord);
            st.q[std::size_t(r)] =
                st.q[std::size_t(r)] + Polynomial::monomial(a, c);
        } else {
            // push_back may reallocate T; re-acquire t by index afterwards
            std::size_t ti = std::size_t(-1 - r);
            if (mp_ecart(T[ti].h, B.order.weights) > mp_ecart(st.h, B.order.weights))
                T.push_back(st);
            const NFState& t = T[ti];
            Monomial a = lead.m / t.h.front().m;
            FieldElem c = lead.c / t.h.front().c;
            st.h = mp_add(st.h, mp_mul_mono(t.h, a, -c), mord);
            st.unit = st.unit - t.unit.times_monomial(a, c);
            for (std::size_t k = 0; k < ne; ++k)
                st.q[k] = st.q[k] - t.q[k].times_monomial(a, c);
        }
    }
    if (local) {
        for (const MTerm& t : st.h) rem.push_back(t);
    }

    NormalFormResult res;
    res.remainder = mp_to_fv(rem, B.rank, B.nvars, B.field);
    res.unit = st.unit;
    res.quotients = std::move(st.q);

    // exact contract check: unit·v - Σ q_k·element_k - remainder == 0
    for (std::size_t c = 0; c < B.rank; ++c) {
        Polynomial acc = res.unit * v[c] - res.remainder[c];
        for (std::size_t k = 0; k < ne; ++k) acc = acc - res.quotients[k] * B.elements[k][c];
        if (!acc.is_zero()) fail(ErrorCode::Internal, "normal form identity violated");
    }
    if (B.order.is_local() && res.unit.constant_term().is_zero())
        fail(ErrorCode::Internal, "Mora unit has zero constant term");
    return res;
}

} // namespace

NormalFormResult normal_form(const FreeVector& v, const SubmoduleBasis& basis) {
    return external_nf(v, GBInternal::impl(basis));
}

LiftResult try_lift(const FreeVector& target, const SubmoduleBasis& basis) {
    const auto& B = GBInternal::impl(basis);
    NormalFormResult nf = external_nf(target, B);
    LiftResult out;
    if (!is_zero_vector(nf.remainder)) return out;
    // pull quotients over basis elements back to the original generators
    std::size_t s = B.generators.size();
    out.coefficients.assign(s, Polynomial::zero(B.nvars, B.field));
    for (std::size_t k = 0; k < B.elements.size(); ++k) {
        if (nf.quotients[k].is_zero()) continue;
        for (std::size_t i = 0; i < s; ++i)
            out.coefficients[i] = out.coefficients[i] + nf.quotients[k] * B.expressions[k][i];
    }
    out.unit = nf.unit;
    if (out.unit.is_constant() && !out.unit.is_zero()) {
        FieldElem inv = out.unit.constant_term().inverse();
        for (auto& c : out.coefficients) c = c.scaled(inv);
        out.unit = Polynomial::constant(FieldElem::one(B.field), B.nvars);
    }
    out.ok = true;
    return out;
}

std::vector<Polynomial> lift(const FreeVector& target, const SubmoduleBasis& basis) {
    LiftResult r = try_lift(target, basis);
    if (!r.ok) fail(ErrorCode::NotInSubmodule, "target is not in the submodule");
    return r.coefficients;
}

std::vector<FreeVector> prune_redundant_generators(const std::vector<FreeVector>& gens,
                                                   const MonomialOrder& order,
                                                   const std::optional<Polynomial>& ring_modulus) {
    std::vector<FreeVector> kept;
    for (const auto& g : gens)
        if (!is_zero_vector(g)) kept.push_back(g);
    for (std::size_t k = kept.size(); k-- > 0;) {
        std::vector<FreeVector> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != k) others.push_back(kept[j]);
        if (others.empty()) {
            if (!ring_modulus) continue;
            // membership in span{f·e_c} alone
            std::size_t rank = kept[k].size();
            std::size_t nv = ring_modulus->num_vars();
            for (std::size_t c = 0; c < rank; ++c) {
                FreeVector fe = zero_vector(rank, nv, ring_modulus->field());
                fe[c] = *ring_modulus;
                others.push_back(std::move(fe));
            }
            SubmoduleBasis b = standard_basis(others, order, std::nullopt);
            if (is_zero_vector(normal_form(kept[k], b).remainder))
                kept.erase(kept.begin() + std::ptrdiff_t(k));
            continue;
        }
        SubmoduleBasis b = standard_basis(others, order, ring_modulus);
        if (is_zero_vector(normal_form(kept[k], b).remainder))
            kept.erase(kept.begin() + std::ptrdiff_t(k));
    }
    return kept;
}

} // namespace theta
