#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "theta/context.hpp"
#include "theta/gbasis.hpp"
#include "theta/matrix.hpp"

namespace theta {

enum class RingTag { P, R }; // ambient ring, or the hypersurface ring P/(f)
enum class LengthMode { Local, Graded };

/// A finitely presented module over P or R = P/(f): `rank` ambient
/// generators, relation columns, and optional generator degrees in graded
/// mode. When the ring is R, the relation f·e_i is implicit everywhere.
class FPModule {
public:
    FPModule() = default;
    FPModule(ContextPtr ctx, RingTag ring, std::size_t rank, std::vector<FreeVector> relations,
             std::optional<std::vector<int64_t>> degrees = std::nullopt);

    static FPModule free_module(ContextPtr ctx, RingTag ring, std::size_t rank);
    static FPModule zero_module(ContextPtr ctx, RingTag ring);

    const ContextPtr& context() const { return ctx_; }
    RingTag ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    const std::vector<FreeVector>& relations() const { return relations_; }
    const std::optional<std::vector<int64_t>>& degrees() const { return degrees_; }
    bool is_zero_module() const { return rank_ == 0; }

    std::optional<Polynomial> ring_modulus() const {
        if (ring_ == RingTag::R) return ctx_->f();
        return std::nullopt;
    }

    PolyMatrix presentation_matrix() const;
    /// Degrees present and all relation columns (and f, over R) homogeneous.
    bool is_graded() const;

    bool operator==(const FPModule& o) const;

private:
    ContextPtr ctx_;
    RingTag ring_ = RingTag::R;
    std::size_t rank_ = 0;
    std::vector<FreeVector> relations_;
    std::optional<std::vector<int64_t>> degrees_;
};

struct LengthReport {
    bool is_finite = false;
    std::optional<int64_t> length;
    // surviving module monomials (component, monomial) when finite
    std::optional<std::vector<std::pair<int, Monomial>>> standard_monomials;
};

/// Hilbert–Poincaré series t^shift·p(t)/(1-t)^e in canonical form: p(0) != 0
/// (powers of t folded into the shift) and (1-t) cancelled out of p while
/// e > 0. Requires unit weights.
struct HilbertSeries {
    std::vector<int64_t> numerator; // ascending coefficients of p
    int64_t denom_exponent = 0;
    int64_t shift = 0;

    bool is_zero() const { return numerator.empty(); }
    int64_t numerator_at_one() const;
    /// Coefficient of t^d of the expanded series.
    int64_t coefficient(int64_t d) const;
    std::string to_string() const;
    bool operator==(const HilbertSeries&) const = default;
};

// --- construction ----------------------------------------------------------

/// Cyclic module P/I or R/I (f joins the relations implicitly over R).
FPModule module_from_ideal(const std::vector<Polynomial>& gens, RingTag ring, ContextPtr ctx);

FPModule direct_sum(const FPModule& a, const FPModule& b);

/// N^p with generator blocks indexed position-major, matching
/// PolyMatrix::kron_identity.
FPModule power_module(const FPModule& n, std::size_t p);

// --- kernels and homology --------------------------------------------------

struct KernelResult {
    FPModule module;
    std::vector<FreeVector> embedding; // kernel generators as elements of the source
};

/// Kernel of the map source → target given by phi (target.rank × source.rank)
/// on generators. Throws IllFormedMap when phi does not respect the
/// presentations (checked exactly).
KernelResult kernel_with_embedding(const PolyMatrix& phi, const FPModule& source,
                                   const FPModule& target,
                                   OrderFamily fam = OrderFamily::Grevlex);
FPModule kernel(const PolyMatrix& phi, const FPModule& source, const FPModule& target,
                OrderFamily fam = OrderFamily::Grevlex);

/// ker(outgoing)/im(incoming) at `middle`, minimally presented. The maps are
/// generator-level matrices middle → target and W → middle; `target` supplies
/// the relations that cut out the kernel. Throws NotAComplex when
/// outgoing∘incoming is nonzero on middle.
FPModule homology(const PolyMatrix& incoming, const FPModule& middle, const PolyMatrix& outgoing,
                  const FPModule& target, OrderFamily fam = OrderFamily::Grevlex);

/// The three-argument form for alternating complexes whose spots all share
/// the middle module's shape.
FPModule subquotient_homology(const PolyMatrix& incoming, const PolyMatrix& outgoing,
                              const FPModule& middle, OrderFamily fam = OrderFamily::Grevlex);

// --- invariants -------------------------------------------------------------

/// Finite-length detection and length. Local mode measures the localization
/// at the origin (local order); graded mode counts all standard monomials
/// (global order).
LengthReport length(const FPModule& m, LengthMode mode, OrderFamily fam = OrderFamily::Grevlex);

/// Presentation with no unit entries: unit entries are pivoted away, entries
/// are reduced mod f over R, redundant relation columns are dropped, columns
/// are made monic. Generator count shrinks to a minimal generating set.
FPModule minimal_presentation(const FPModule& m, OrderFamily fam = OrderFamily::Grevlex);

/// Graded Hilbert series p(t)/(1-t)^{numVars} from the leading-term module
/// of a graded standard basis (inclusion–exclusion), shifted by generator
/// degrees. Throws NotGraded for ungraded input or non-unit weights.
HilbertSeries hilbert_series(const FPModule& m, OrderFamily fam = OrderFamily::Grevlex);

/// Membership of v in the relation submodule of m (exact).
bool in_relation_span(const FreeVector& v, const FPModule& m,
                      OrderFamily fam = OrderFamily::Grevlex);

} // namespace theta
