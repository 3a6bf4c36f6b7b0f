#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "theta/polynomial.hpp"

namespace theta {

/// Which global/local order family computations run under. The engine's
/// results (lengths, pairings) are order-independent; the family is exposed
/// so that independence can be tested.
enum class OrderFamily { Grevlex, Lex };

/// Ambient data of one singularity: the variables x_0..x_n with weights, the
/// coefficient field, the hypersurface equation f with f(0)=0, and its
/// Jacobian ideal. Immutable after construction.
class SingularityContext {
public:
    SingularityContext(std::vector<std::string> variables,
                       std::vector<mk::exp_t> weights,
                       FieldSpec field,
                       Polynomial f);

    static std::shared_ptr<const SingularityContext> make(
        std::vector<std::string> variables,
        std::vector<mk::exp_t> weights,
        FieldSpec field,
        const std::string& f_text);

    std::size_t num_vars() const { return vars_.size(); }
    /// Krull dimension of R = P/(f).
    std::size_t n() const { return vars_.size() - 1; }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<mk::exp_t>& weights() const { return weights_; }
    FieldSpec field() const { return field_; }
    const Polynomial& f() const { return f_; }
    const std::vector<Polynomial>& jacobian_ideal() const { return jacobian_; }
    std::optional<int64_t> milnor_number_hint() const { return milnor_; }
    void set_milnor_number_hint(int64_t mu) { milnor_ = mu; }

    MonomialOrder global_order(OrderFamily fam = OrderFamily::Grevlex) const {
        return fam == OrderFamily::Grevlex ? MonomialOrder::grevlex(weights_)
                                           : MonomialOrder::lex(vars_.size());
    }
    MonomialOrder local_order(OrderFamily fam = OrderFamily::Grevlex) const {
        return global_order(fam).localized();
    }

    Polynomial parse(const std::string& text) const {
        return parse_polynomial(text, vars_, field_);
    }
    std::string print(const Polynomial& p) const {
        return p.to_string(vars_, global_order());
    }

    bool f_is_homogeneous() const { return f_.homogeneous_degree(weights_).has_value(); }
    int64_t f_degree() const { return f_.degree(weights_); }

private:
    std::vector<std::string> vars_;
    std::vector<mk::exp_t> weights_;
    FieldSpec field_;
    Polynomial f_;
    std::vector<Polynomial> jacobian_;
    std::optional<int64_t> milnor_;
};

using ContextPtr = std::shared_ptr<const SingularityContext>;

} // namespace theta
