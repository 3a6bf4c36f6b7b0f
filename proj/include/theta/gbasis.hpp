#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "theta/context.hpp"
#include "theta/polynomial.hpp"

namespace theta {

/// Element of a free module P^rank: one polynomial entry per position.
using FreeVector = std::vector<Polynomial>;

FreeVector zero_vector(std::size_t rank, std::size_t num_vars, FieldSpec field);
FreeVector unit_vector(std::size_t rank, std::size_t pos, std::size_t num_vars, FieldSpec field);
bool is_zero_vector(const FreeVector& v);

/// A standard basis (Gröbner basis for global orders, Mora standard basis
/// for local ones) of a submodule of a free module, with the expressions of
/// the basis elements in the original generators retained so that membership
/// certificates can be pulled back.
///
/// When ring_modulus is set to f, the computation runs over R = P/(f): the
/// generating set is augmented with f·e_i internally and those coordinates
/// are discarded from any expression in the original generators.
class SubmoduleBasis {
public:
    std::size_t rank() const;
    const MonomialOrder& order() const;
    const std::optional<Polynomial>& ring_modulus() const;
    bool is_standard() const { return true; }
    const std::vector<FreeVector>& generators() const;
    /// Completed basis elements (monic leads, lead-redundant ones pruned).
    const std::vector<FreeVector>& elements() const;
    /// elements()[k] == Σ_i expressions()[k][i] · gens_aug[i] exactly in P,
    /// where gens_aug = generators ++ (f·e_i when the modulus is set).
    const std::vector<std::vector<Polynomial>>& expressions() const;

    std::string dump(const std::vector<std::string>& vars) const;

    struct Impl; // defined in gbasis.cpp

private:
    friend struct GBInternal;
    std::shared_ptr<const Impl> impl_;
};

struct NormalFormResult {
    FreeVector remainder;
    Polynomial unit;                    // 1 for global orders; unit(0) != 0 for local
    std::vector<Polynomial> quotients;  // one per basis element
};

struct LiftResult {
    bool ok = false;
    std::vector<Polynomial> coefficients; // over the original generators
    Polynomial unit;                      // 1 unless a non-constant Mora unit remains
};

/// Buchberger (global order) / Mora (local order) completion. Deterministic:
/// sugar-degree pair selection with index tie-break, first-divisor reduction.
SubmoduleBasis standard_basis(const std::vector<FreeVector>& gens,
                              const MonomialOrder& order,
                              const std::optional<Polynomial>& ring_modulus = std::nullopt);

/// Division with remainder against a standard basis. For global orders the
/// remainder is fully reduced and unit == 1; for local orders the remainder
/// is Mora's weak normal form iterated over tail terms (every term that ends
/// up in the remainder was irreducible when it was split off) and the unit
/// is a polynomial with nonzero constant term. Always verifies the identity
/// unit·v = Σ quotients_k·element_k + remainder exactly.
NormalFormResult normal_form(const FreeVector& v, const SubmoduleBasis& basis);

/// Generators of the kernel of (a_1,...,a_s) ↦ Σ a_i·m_i, over P, or over
/// R = P/(f) when ring_modulus is set (computed via the Schreyer
/// construction on the augmented standard basis; f-coordinates dropped).
std::vector<FreeVector> syzygies(const std::vector<FreeVector>& m,
                                 const MonomialOrder& order,
                                 const std::optional<Polynomial>& ring_modulus = std::nullopt);

/// Membership with certificate: coefficients expressing target in the
/// original generators (modulo f when the basis has a ring modulus). When a
/// local computation leaves a non-constant Mora unit u, the returned
/// coefficients satisfy u·target = Σ c_i·g_i and the unit is reported;
/// constant units are divided out.
LiftResult try_lift(const FreeVector& target, const SubmoduleBasis& basis);

/// As try_lift, but throws NotInSubmodule on failure.
std::vector<Polynomial> lift(const FreeVector& target, const SubmoduleBasis& basis);

/// Drop generators that lie in the submodule spanned by the others (local
/// membership, so this yields a minimal generating set over the local ring).
/// Deterministic: scans from the last generator to the first.
std::vector<FreeVector> prune_redundant_generators(const std::vector<FreeVector>& gens,
                                                   const MonomialOrder& order,
                                                   const std::optional<Polynomial>& ring_modulus);

} // namespace theta
