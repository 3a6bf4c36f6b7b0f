#include "theta/fpmod.hpp"

#include <algorithm>
#include <functional>

namespace theta {

namespace {

MonomialOrder pick_order(const SingularityContext& ctx, LengthMode mode, OrderFamily fam) {
    return mode == LengthMode::Local ? ctx.local_order(fam) : ctx.global_order(fam);
}

bool member(const FreeVector& v, const std::vector<FreeVector>& gens,
            const MonomialOrder& ord, const std::optional<Polynomial>& modulus) {
    if (is_zero_vector(v)) return true;
    if (gens.empty() && !modulus) return false;
    SubmoduleBasis b = standard_basis(gens, ord, modulus);
    return is_zero_vector(normal_form(v, b).remainder);
}

// degree of a homogeneous vector w.r.t. generator degrees; nullopt when any
// entry is inhomogeneous or the entries disagree
std::optional<int64_t> vector_degree(const FreeVector& v, const std::vector<int64_t>& gen_degrees,
                                     const std::vector<mk::exp_t>& w) {
    std::optional<int64_t> deg;
    for (std::size_t r = 0; r < v.size(); ++r) {
        if (v[r].is_zero()) continue;
        auto h = v[r].homogeneous_degree(w);
        if (!h) return std::nullopt;
        int64_t d = *h + gen_degrees[r];
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg ? deg : std::optional<int64_t>(0);
}

std::optional<std::vector<int64_t>> vectors_degrees(const std::vector<FreeVector>& vs,
                                                    const std::optional<std::vector<int64_t>>& src,
                                                    const std::vector<mk::exp_t>& w) {
    if (!src) return std::nullopt;
    std::vector<int64_t> out;
    out.reserve(vs.size());
    for (const auto& v : vs) {
        auto d = vector_degree(v, *src, w);
        if (!d) return std::nullopt;
        out.push_back(*d);
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// FPModule

FPModule::FPModule(ContextPtr ctx, RingTag ring, std::size_t rank,
                   std::vector<FreeVector> relations, std::optional<std::vector<int64_t>> degrees)
    : ctx_(std::move(ctx)), ring_(ring), rank_(rank), relations_(std::move(relations)),
      degrees_(std::move(degrees)) {
    for (const auto& col : relations_) {
        if (col.size() != rank_) fail(ErrorCode::Precondition, "relation column of wrong rank");
        for (const auto& p : col)
            if (p.num_vars() != ctx_->num_vars())
                fail(ErrorCode::VariableMismatch, "relation entry over wrong variable count");
    }
    if (degrees_ && degrees_->size() != rank_)
        fail(ErrorCode::Precondition, "degree vector length != rank");
    relations_.erase(std::remove_if(relations_.begin(), relations_.end(),
                                    [](const FreeVector& v) { return is_zero_vector(v); }),
                     relations_.end());
}

FPModule FPModule::free_module(ContextPtr ctx, RingTag ring, std::size_t rank) {
    return FPModule(std::move(ctx), ring, rank, {}, std::vector<int64_t>(rank, 0));
}

FPModule FPModule::zero_module(ContextPtr ctx, RingTag ring) {
    return FPModule(std::move(ctx), ring, 0, {}, std::vector<int64_t>{});
}

PolyMatrix FPModule::presentation_matrix() const {
    return PolyMatrix::from_columns(relations_, rank_, ctx_->num_vars(), ctx_->field());
}

bool FPModule::is_graded() const {
    if (!degrees_) return false;
    if (ring_ == RingTag::R && !ctx_->f_is_homogeneous()) return false;
    for (const auto& col : relations_)
        if (!vector_degree(col, *degrees_, ctx_->weights())) return false;
    return true;
}

bool FPModule::operator==(const FPModule& o) const {
    return ring_ == o.ring_ && rank_ == o.rank_ && relations_ == o.relations_ &&
           degrees_ == o.degrees_ && ctx_->f() == o.ctx_->f();
}

// ---------------------------------------------------------------------------
// construction

FPModule module_from_ideal(const std::vector<Polynomial>& gens, RingTag ring, ContextPtr ctx) {
    std::vector<FreeVector> rels;
    for (const auto& g : gens) {
        if (g.num_vars() != ctx->num_vars())
            fail(ErrorCode::VariableMismatch, "ideal generator over wrong variable count");
        rels.push_back(FreeVector{g});
    }
    return FPModule(std::move(ctx), ring, 1, std::move(rels), std::vector<int64_t>{0});
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
    if (a.ring() != b.ring()) fail(ErrorCode::Precondition, "direct sum over different rings");
    std::size_t nv = a.context()->num_vars();
    FieldSpec field = a.context()->field();
    std::vector<FreeVector> rels;
    for (const auto& col : a.relations()) {
        FreeVector v = col;
        v.resize(a.rank() + b.rank(), Polynomial::zero(nv, field));
        rels.push_back(std::move(v));
    }
    for (const auto& col : b.relations()) {
        FreeVector v = zero_vector(a.rank() + b.rank(), nv, field);
        for (std::size_t r = 0; r < b.rank(); ++r) v[a.rank() + r] = col[r];
        rels.push_back(std::move(v));
    }
    std::optional<std::vector<int64_t>> degrees;
    if (a.degrees() && b.degrees()) {
        degrees = *a.degrees();
        degrees->insert(degrees->end(), b.degrees()->begin(), b.degrees()->end());
    }
    return FPModule(a.context(), a.ring(), a.rank() + b.rank(), std::move(rels),
                    std::move(degrees));
}

FPModule power_module(const FPModule& n, std::size_t p) {
    std::size_t nv = n.context()->num_vars();
    FieldSpec field = n.context()->field();
    std::size_t r = n.rank();
    std::vector<FreeVector> rels;
    for (std::size_t j = 0; j < p; ++j)
        for (const auto& col : n.relations()) {
            FreeVector v = zero_vector(p * r, nv, field);
            for (std::size_t i = 0; i < r; ++i) v[j * r + i] = col[i];
            rels.push_back(std::move(v));
        }
    std::optional<std::vector<int64_t>> degrees;
    if (n.degrees()) {
        degrees = std::vector<int64_t>();
        for (std::size_t j = 0; j < p; ++j)
            degrees->insert(degrees->end(), n.degrees()->begin(), n.degrees()->end());
    }
    return FPModule(n.context(), n.ring(), p * r, std::move(rels), std::move(degrees));
}

// ---------------------------------------------------------------------------
// kernels and homology

bool in_relation_span(const FreeVector& v, const FPModule& m, OrderFamily fam) {
    return member(v, m.relations(), m.context()->local_order(fam), m.ring_modulus());
}

KernelResult kernel_with_embedding(const PolyMatrix& phi, const FPModule& source,
                                   const FPModule& target, OrderFamily fam) {
    const auto& ctx = *source.context();
    if (phi.rows != target.rank() || phi.cols != source.rank())
        fail(ErrorCode::Precondition, "map shape does not match source/target ranks");
    if (source.ring() != target.ring())
        fail(ErrorCode::Precondition, "kernel across different rings");
    MonomialOrder ord = ctx.local_order(fam);
    auto modulus = source.ring_modulus();

    // exact well-definedness: phi carries source relations into the target span
    for (const auto& rho : source.relations()) {
        FreeVector img = zero_vector(target.rank(), ctx.num_vars(), ctx.field());
        for (std::size_t r = 0; r < target.rank(); ++r)
            for (std::size_t c = 0; c < source.rank(); ++c)
                img[r] = img[r] + phi.at(r, c) * rho[c];
        if (!member(img, target.relations(), ord, modulus))
            fail(ErrorCode::IllFormedMap, "map does not respect the presentations");
    }

    // all v with phi·v in the relation span of the target
    std::vector<FreeVector> combined = phi.columns();
    for (const auto& col : target.relations()) combined.push_back(col);
    std::vector<FreeVector> emb;
    if (source.rank() > 0) {
        auto syz = syzygies(combined, ord, modulus);
        for (const auto& s : syz) {
            FreeVector v(s.begin(), s.begin() + std::ptrdiff_t(source.rank()));
            if (!is_zero_vector(v)) emb.push_back(std::move(v));
        }
        emb = prune_redundant_generators(emb, ord, modulus);
    }

    std::vector<FreeVector> care = emb;
    for (const auto& col : source.relations()) care.push_back(col);
    std::vector<FreeVector> rel;
    if (!emb.empty()) {
        auto syz2 = syzygies(care, ord, modulus);
        for (const auto& s : syz2) {
            FreeVector v(s.begin(), s.begin() + std::ptrdiff_t(emb.size()));
            if (!is_zero_vector(v)) rel.push_back(std::move(v));
        }
    }
    auto degrees =
        source.degrees() ? vectors_degrees(emb, source.degrees(), ctx.weights()) : std::nullopt;
    FPModule ker(source.context(), source.ring(), emb.size(), std::move(rel), std::move(degrees));
    return KernelResult{minimal_presentation(ker, fam), std::move(emb)};
}

FPModule kernel(const PolyMatrix& phi, const FPModule& source, const FPModule& target,
                OrderFamily fam) {
    return kernel_with_embedding(phi, source, target, fam).module;
}

FPModule homology(const PolyMatrix& incoming, const FPModule& middle, const PolyMatrix& outgoing,
                  const FPModule& target, OrderFamily fam) {
    const auto& ctx = *middle.context();
    if (outgoing.cols != middle.rank() || incoming.rows != middle.rank())
        fail(ErrorCode::Precondition, "complex maps do not match the middle rank");
    MonomialOrder ord = ctx.local_order(fam);
    auto modulus = middle.ring_modulus();

    // outgoing∘incoming must vanish on the middle module, exactly
    PolyMatrix comp = outgoing * incoming;
    for (std::size_t c = 0; c < comp.cols; ++c)
        if (!member(comp.column(c), target.relations(), ord, modulus))
            fail(ErrorCode::NotAComplex, "composition of the complex maps is nonzero");

    std::vector<FreeVector> combined = outgoing.columns();
    for (const auto& col : target.relations()) combined.push_back(col);
    std::vector<FreeVector> reps;
    {
        auto syz = syzygies(combined, ord, modulus);
        for (const auto& s : syz) {
            FreeVector v(s.begin(), s.begin() + std::ptrdiff_t(middle.rank()));
            if (!is_zero_vector(v)) reps.push_back(std::move(v));
        }
    }
    reps = prune_redundant_generators(reps, ord, modulus);
    if (reps.empty()) return FPModule::zero_module(middle.context(), middle.ring());

    // relations: coefficient vectors landing in im(incoming) + middle relations
    std::vector<FreeVector> care = reps;
    for (const auto& col : incoming.columns()) care.push_back(col);
    for (const auto& col : middle.relations()) care.push_back(col);
    std::vector<FreeVector> rel;
    {
        auto syz2 = syzygies(care, ord, modulus);
        for (const auto& s : syz2) {
            FreeVector v(s.begin(), s.begin() + std::ptrdiff_t(reps.size()));
            if (!is_zero_vector(v)) rel.push_back(std::move(v));
        }
    }
    auto degrees =
        middle.degrees() ? vectors_degrees(reps, middle.degrees(), ctx.weights()) : std::nullopt;
    FPModule h(middle.context(), middle.ring(), reps.size(), std::move(rel), std::move(degrees));
    return minimal_presentation(h, fam);
}

FPModule subquotient_homology(const PolyMatrix& incoming, const PolyMatrix& outgoing,
                              const FPModule& middle, OrderFamily fam) {
    return homology(incoming, middle, outgoing, middle, fam);
}

// ---------------------------------------------------------------------------
// length

LengthReport length(const FPModule& m, LengthMode mode, OrderFamily fam) {
    const auto& ctx = *m.context();
    LengthReport rep;
    if (m.is_zero_module()) {
        rep.is_finite = true;
        rep.length = 0;
        rep.standard_monomials = std::vector<std::pair<int, Monomial>>{};
        return rep;
    }
    MonomialOrder ord = pick_order(ctx, mode, fam);
    auto modulus = m.ring_modulus();
    std::size_t nv = ctx.num_vars();

    // leading-term module, one monomial list per component
    std::vector<std::vector<Monomial>> lt(m.rank());
    if (!m.relations().empty() || modulus) {
        SubmoduleBasis b = standard_basis(m.relations(), ord, modulus);
        for (const auto& e : b.elements()) {
            for (std::size_t c = 0; c < m.rank(); ++c) {
                if (e[c].is_zero()) continue;
                // position-over-term: the first nonzero component leads
                lt[c].push_back(e[c].lead_term(ord)->m);
                break;
            }
        }
    }

    // finite length iff every variable has a pure power in every component
    std::vector<std::vector<mk::exp_t>> bound(m.rank(), std::vector<mk::exp_t>(nv, -1));
    for (std::size_t c = 0; c < m.rank(); ++c) {
        for (const auto& mm : lt[c]) {
            if (mm.is_one()) {
                for (std::size_t i = 0; i < nv; ++i) bound[c][i] = 0;
                continue;
            }
            for (std::size_t i = 0; i < nv; ++i) {
                if (mm[i] == 0) continue;
                bool pure = true;
                for (std::size_t j = 0; j < nv; ++j)
                    if (j != i && mm[j] != 0) pure = false;
                if (pure && (bound[c][i] < 0 || mm[i] < bound[c][i])) bound[c][i] = mm[i];
            }
        }
        for (std::size_t i = 0; i < nv; ++i)
            if (bound[c][i] < 0) {
                rep.is_finite = false;
                return rep;
            }
    }

    std::vector<std::pair<int, Monomial>> std_mons;
    for (std::size_t c = 0; c < m.rank(); ++c) {
        Monomial cur(nv);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == nv) {
                for (const auto& g : lt[c])
                    if (g.divides(cur)) return;
                std_mons.push_back({int(c), cur});
                return;
            }
            for (mk::exp_t e = 0; e < bound[c][i]; ++e) {
                cur[i] = e;
                rec(i + 1);
            }
            cur[i] = 0;
        };
        rec(0);
    }
    rep.is_finite = true;
    rep.length = int64_t(std_mons.size());
    rep.standard_monomials = std::move(std_mons);
    return rep;
}

// ---------------------------------------------------------------------------
// minimal presentation

FPModule minimal_presentation(const FPModule& m, OrderFamily fam) {
    const auto& ctx = *m.context();
    std::size_t rank = m.rank();
    std::vector<FreeVector> rels = m.relations();
    std::optional<std::vector<int64_t>> degrees = m.degrees();
    MonomialOrder gord = ctx.global_order(fam);
    MonomialOrder lord = ctx.local_order(fam);
    auto modulus = m.ring_modulus();

    // pivot away unit entries (nonzero constant term); row/column operations
    // by unit multiples keep the cokernel
    for (;;) {
        std::size_t pi = rank, pj = rels.size();
        for (std::size_t j = 0; j < rels.size() && pj == rels.size(); ++j)
            for (std::size_t i = 0; i < rank; ++i)
                if (!rels[j][i].constant_term().is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pj == rels.size()) break;
        Polynomial pivot = rels[pj][pi];
        for (std::size_t l = 0; l < rels.size(); ++l) {
            if (l == pj) continue;
            Polynomial c = rels[l][pi];
            if (c.is_zero()) continue;
            for (std::size_t r = 0; r < rank; ++r)
                rels[l][r] = pivot * rels[l][r] - c * rels[pj][r];
        }
        rels.erase(rels.begin() + std::ptrdiff_t(pj));
        for (auto& col : rels) col.erase(col.begin() + std::ptrdiff_t(pi));
        if (degrees) degrees->erase(degrees->begin() + std::ptrdiff_t(pi));
        --rank;
        rels.erase(std::remove_if(rels.begin(), rels.end(),
                                  [](const FreeVector& v) { return is_zero_vector(v); }),
                   rels.end());
    }

    if (rank == 0) return FPModule::zero_module(m.context(), m.ring());

    // canonical entries over R: reduce mod f
    if (modulus) {
        SubmoduleBasis fb = standard_basis({FreeVector{*modulus}}, gord);
        for (auto& col : rels)
            for (auto& p : col)
                if (!p.is_zero()) p = normal_form({p}, fb).remainder[0];
        rels.erase(std::remove_if(rels.begin(), rels.end(),
                                  [](const FreeVector& v) { return is_zero_vector(v); }),
                   rels.end());
    }

    // drop redundant relation columns, then normalize to monic leads
    rels = prune_redundant_generators(rels, lord, modulus);
    for (auto& col : rels) {
        for (std::size_t r = 0; r < rank; ++r) {
            if (col[r].is_zero()) continue;
            FieldElem inv = col[r].lead_term(gord)->c.inverse();
            for (auto& p : col) p = p.scaled(inv);
            break;
        }
    }
    return FPModule(m.context(), m.ring(), rank, std::move(rels), std::move(degrees));
}

} // namespace theta
