#pragma once

#include <optional>
#include <string>
#include <vector>

#include "theta/field.hpp"
#include "theta/monomial.hpp"
#include "theta/order.hpp"

namespace theta {

struct Term {
    Monomial m;
    FieldElem c;
};

/// Sparse exact multivariate polynomial. Terms are kept in a canonical
/// structural order (descending plain lex on exponent vectors) with no zero
/// coefficients, so equality is representation equality. Monomial orders
/// only enter when a leading term is requested.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::size_t num_vars, FieldSpec field) : nvars_(num_vars), field_(field) {}

    static Polynomial zero(std::size_t num_vars, FieldSpec field) { return Polynomial(num_vars, field); }
    static Polynomial constant(FieldElem c, std::size_t num_vars);
    static Polynomial monomial(Monomial m, FieldElem c);
    static Polynomial variable(std::size_t num_vars, std::size_t i, FieldSpec field);

    std::size_t num_vars() const { return nvars_; }
    FieldSpec field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
    }
    FieldElem constant_term() const;
    FieldElem coeff(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const FieldElem& c) const;
    Polynomial times_monomial(const Monomial& m, const FieldElem& c) const;

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && field_ == o.field_ && terms_equal(o);
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Formal partial derivative in variable i.
    Polynomial derivative(std::size_t i) const;

    /// Leading term w.r.t. a monomial order (largest term). Zero poly: none.
    const Term* lead_term(const MonomialOrder& ord) const;

    /// Max weighted degree over terms (-1 for zero).
    int64_t degree(const std::vector<mk::exp_t>& w) const;
    /// The weighted degree if homogeneous, nullopt otherwise (zero: degree 0).
    std::optional<int64_t> homogeneous_degree(const std::vector<mk::exp_t>& w) const;

    /// Exact division; nullopt when o does not divide *this.
    std::optional<Polynomial> divided_by(const Polynomial& o, const MonomialOrder& ord) const;

    std::string to_string(const std::vector<std::string>& vars, const MonomialOrder& ord) const;

    /// Terms sorted descending by the given order (a copy; the canonical
    /// internal order is structural).
    std::vector<Term> sorted_terms(const MonomialOrder& ord) const;

    // construction helper: accumulate then normalize
    void add_term(const Monomial& m, const FieldElem& c);

private:
    bool terms_equal(const Polynomial& o) const;
    void normalize();

    std::size_t nvars_ = 0;
    FieldSpec field_;
    std::vector<Term> terms_; // descending structural lex, no zero coeffs
};

/// All formal partials (∂f/∂x_0, ..., ∂f/∂x_n).
std::vector<Polynomial> partials(const Polynomial& f);

/// Parse the canonical text form (rationals, variable names, ^, *, +, -,
/// parentheses) over the given variables and field.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars,
                            FieldSpec field);

} // namespace theta
