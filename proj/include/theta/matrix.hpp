#pragma once

#include <vector>

#include "theta/gbasis.hpp"
#include "theta/polynomial.hpp"

namespace theta {

/// Dense matrix of polynomials, row-major. Columns play the role of
/// relations or of images of free-module generators throughout.
struct PolyMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Polynomial> a;

    PolyMatrix() = default;
    PolyMatrix(std::size_t r, std::size_t c, std::size_t num_vars, FieldSpec field)
        : rows(r), cols(c), a(r * c, Polynomial::zero(num_vars, field)) {}

    Polynomial& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Polynomial& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static PolyMatrix identity_scaled(std::size_t n, const Polynomial& s);
    static PolyMatrix from_columns(const std::vector<FreeVector>& cols, std::size_t rank,
                                   std::size_t num_vars, FieldSpec field);

    std::vector<FreeVector> columns() const;
    FreeVector column(std::size_t c) const;
    PolyMatrix transposed() const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    /// A ⊗ I_r with block index order (matrix index major): generator (j,i)
    /// of the middle module N^cols, i < r, maps under Σ_k A_kj·(k,i).
    PolyMatrix kron_identity(std::size_t r) const;

    bool is_zero() const {
        for (const auto& p : a)
            if (!p.is_zero()) return false;
        return true;
    }
};

/// Determinant by fraction-free (Bareiss) elimination; exact.
Polynomial determinant(const PolyMatrix& m, const MonomialOrder& ord);

} // namespace theta
