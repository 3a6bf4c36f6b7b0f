#include "theta/matrix.hpp"

namespace theta {

PolyMatrix PolyMatrix::identity_scaled(std::size_t n, const Polynomial& s) {
    PolyMatrix m(n, n, s.num_vars(), s.field());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
}

PolyMatrix PolyMatrix::from_columns(const std::vector<FreeVector>& cols, std::size_t rank,
                                    std::size_t num_vars, FieldSpec field) {
    PolyMatrix m(rank, cols.size(), num_vars, field);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rank; ++r) m.at(r, c) = cols[c][r];
    return m;
}

std::vector<FreeVector> PolyMatrix::columns() const {
    std::vector<FreeVector> out;
    out.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) out.push_back(column(c));
    return out;
}

FreeVector PolyMatrix::column(std::size_t c) const {
    FreeVector v;
    v.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) v.push_back(at(r, c));
    return v;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix m;
    m.rows = cols;
    m.cols = rows;
    m.a.resize(a.size());
    if (a.empty()) return m;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.a[c * rows + r] = at(r, c);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols != o.rows) fail(ErrorCode::Precondition, "matrix shape mismatch");
    std::size_t nv = a.empty() ? (o.a.empty() ? 0 : o.a[0].num_vars()) : a[0].num_vars();
    FieldSpec f = a.empty() ? (o.a.empty() ? FieldSpec{} : o.a[0].field()) : a[0].field();
    PolyMatrix m(rows, o.cols, nv, f);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < o.cols; ++c) {
            Polynomial s = Polynomial::zero(nv, f);
            for (std::size_t k = 0; k < cols; ++k) s = s + at(r, k) * o.at(k, c);
            m.at(r, c) = std::move(s);
        }
    return m;
}

PolyMatrix PolyMatrix::kron_identity(std::size_t r) const {
    std::size_t nv = a.empty() ? 0 : a[0].num_vars();
    FieldSpec f = a.empty() ? FieldSpec{} : a[0].field();
    PolyMatrix m(rows * r, cols * r, nv, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < r; ++k) m.at(i * r + k, j * r + k) = at(i, j);
    return m;
}

Polynomial determinant(const PolyMatrix& m, const MonomialOrder& ord) {
    if (m.rows != m.cols) fail(ErrorCode::Precondition, "determinant of non-square matrix");
    std::size_t n = m.rows;
    std::size_t nv = m.a.empty() ? 0 : m.a[0].num_vars();
    FieldSpec field = m.a.empty() ? FieldSpec{} : m.a[0].field();
    if (n == 0) return Polynomial::constant(FieldElem::one(field), nv);
    PolyMatrix w = m;
    Polynomial prev = Polynomial::constant(FieldElem::one(field), nv);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            std::size_t swap_row = n;
            for (std::size_t r = k + 1; r < n; ++r)
                if (!w.at(r, k).is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row == n) return Polynomial::zero(nv, field);
            for (std::size_t c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                auto q = num.divided_by(prev, ord);
                if (!q) fail(ErrorCode::Internal, "Bareiss division failed");
                w.at(i, j) = std::move(*q);
            }
        prev = w.at(k, k);
    }
    Polynomial det = w.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

} // namespace theta
