#include "theta/context.hpp"

namespace theta {

SingularityContext::SingularityContext(std::vector<std::string> variables,
                                       std::vector<mk::exp_t> weights,
                                       FieldSpec field,
                                       Polynomial f)
    : vars_(std::move(variables)), weights_(std::move(weights)), field_(field), f_(std::move(f)) {
    if (vars_.empty()) fail(ErrorCode::Precondition, "need at least one variable");
    if (weights_.empty()) weights_.assign(vars_.size(), 1);
    if (weights_.size() != vars_.size())
        fail(ErrorCode::Precondition, "weight vector length != variable count");
    for (auto w : weights_)
        if (w <= 0) fail(ErrorCode::Precondition, "weights must be positive");
    if (f_.num_vars() != vars_.size())
        fail(ErrorCode::VariableMismatch, "f over wrong variable count");
    if (!f_.constant_term().is_zero())
        fail(ErrorCode::Precondition, "f(0) != 0");
    jacobian_ = partials(f_);
}

ContextPtr SingularityContext::make(std::vector<std::string> variables,
                                    std::vector<mk::exp_t> weights,
                                    FieldSpec field,
                                    const std::string& f_text) {
    Polynomial f = parse_polynomial(f_text, variables, field);
    return std::make_shared<const SingularityContext>(std::move(variables), std::move(weights),
                                                      field, std::move(f));
}

} // namespace theta
