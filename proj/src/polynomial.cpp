#include "theta/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace theta {

namespace {
// canonical in-memory term order: descending structural lex
bool struct_greater(const Monomial& a, const Monomial& b) { return b.lex_less(a); }
} // namespace

Polynomial Polynomial::constant(FieldElem c, std::size_t num_vars) {
    Polynomial p(num_vars, c.spec());
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(num_vars), std::move(c)});
    return p;
}

Polynomial Polynomial::monomial(Monomial m, FieldElem c) {
    Polynomial p(m.num_vars(), c.spec());
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t i, FieldSpec field) {
    return monomial(Monomial::var(num_vars, i), FieldElem::one(field));
}

FieldElem Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
    return FieldElem::zero(field_);
}

FieldElem Polynomial::coeff(const Monomial& m) const {
    for (const Term& t : terms_)
        if (t.m == m) return t.c;
    return FieldElem::zero(field_);
}

bool Polynomial::terms_equal(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return struct_greater(a.m, b.m); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c = out.back().c + t.c;
        } else {
            out.push_back(std::move(t));
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.c.is_zero(); }),
              out.end());
    terms_ = std::move(out);
}

void Polynomial::add_term(const Monomial& m, const FieldElem& c) {
    terms_.push_back({m, c});
    normalize();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
        fail(ErrorCode::VariableMismatch, "polynomials over different variable counts");
    Polynomial r(nvars_, field_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].m == o.terms_[j].m) {
            FieldElem c = terms_[i].c + o.terms_[j].c;
            if (!c.is_zero()) r.terms_.push_back({terms_[i].m, std::move(c)});
            ++i, ++j;
        } else if (struct_greater(terms_[i].m, o.terms_[j].m)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_, field_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m, -t.c});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const FieldElem& c) const {
    Polynomial r(nvars_, field_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m, t.c * c});
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const FieldElem& c) const {
    Polynomial r(nvars_, field_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    // multiplying by a fixed monomial preserves the structural order
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
        fail(ErrorCode::VariableMismatch, "polynomials over different variable counts");
    Polynomial r(nvars_, field_);
    for (const Term& t : terms_) {
        r = r + o.times_monomial(t.m, t.c);
    }
    return r;
}

Polynomial Polynomial::derivative(std::size_t i) const {
    Polynomial r(nvars_, field_);
    for (const Term& t : terms_) {
        mk::exp_t e = t.m[i];
        if (e == 0) continue;
        Monomial m = t.m;
        m[i] = e - 1;
        FieldElem c = t.c * FieldElem::integer(e, field_);
        if (!c.is_zero()) r.terms_.push_back({std::move(m), std::move(c)});
    }
    r.normalize();
    return r;
}

const Term* Polynomial::lead_term(const MonomialOrder& ord) const {
    const Term* best = nullptr;
    for (const Term& t : terms_)
        if (!best || ord.greater(t.m, best->m)) best = &t;
    return best;
}

int64_t Polynomial::degree(const std::vector<mk::exp_t>& w) const {
    int64_t d = -1;
    for (const Term& t : terms_) d = std::max(d, t.m.weighted_degree(w));
    return d;
}

std::optional<int64_t> Polynomial::homogeneous_degree(const std::vector<mk::exp_t>& w) const {
    if (terms_.empty()) return 0;
    int64_t d = terms_[0].m.weighted_degree(w);
    for (const Term& t : terms_)
        if (t.m.weighted_degree(w) != d) return std::nullopt;
    return d;
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& o, const MonomialOrder& ord) const {
    if (o.is_zero()) return std::nullopt;
    Polynomial rem = *this;
    Polynomial quot(nvars_, field_);
    const Term* lo = o.lead_term(ord);
    while (!rem.is_zero()) {
        const Term* lr = rem.lead_term(ord);
        if (!lo->m.divides(lr->m)) return std::nullopt;
        Monomial q = lr->m / lo->m;
        FieldElem c = lr->c / lo->c;
        quot.add_term(q, c);
        rem = rem - o.times_monomial(q, c);
    }
    return quot;
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& ord) const {
    std::vector<Term> ts = terms_;
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    return ts;
}

std::string Polynomial::to_string(const std::vector<std::string>& vars,
                                  const MonomialOrder& ord) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : sorted_terms(ord)) {
        FieldElem c = t.c;
        if (first) {
            if (c.sgn() < 0) {
                out << "-";
                c = -c;
            }
            first = false;
        } else {
            if (c.sgn() < 0) {
                out << " - ";
                c = -c;
            } else {
                out << " + ";
            }
        }
        bool need_star = false;
        if (!c.is_one() || t.m.is_one()) {
            out << c.to_string();
            need_star = true;
        }
        for (std::size_t i = 0; i < t.m.num_vars(); ++i) {
            if (t.m[i] == 0) continue;
            if (need_star) out << "*";
            out << vars[i];
            if (t.m[i] > 1) out << "^" << t.m[i];
            need_star = true;
        }
    }
    return out.str();
}

std::vector<Polynomial> partials(const Polynomial& f) {
    std::vector<Polynomial> out;
    out.reserve(f.num_vars());
    for (std::size_t i = 0; i < f.num_vars(); ++i) out.push_back(f.derivative(i));
    return out;
}

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars, FieldSpec field)
        : s_(text), vars_(vars), field_(field) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail(ErrorCode::ParseError,
                 "unexpected '" + s_.substr(pos_, 1) + "' at position " + std::to_string(pos_) +
                     " in \"" + s_ + "\"");
        return p;
    }

private:
    Polynomial expr() {
        bool neg = false;
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            if (get() == '-') neg = !neg;
            skip_ws();
        }
        Polynomial p = term();
        if (neg) p = -p;
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            bool minus = get() == '-';
            skip_ws();
            Polynomial q = term();
            p = minus ? p - q : p + q;
            skip_ws();
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        skip_ws();
        while (peek() == '*') {
            get();
            skip_ws();
            p = p * factor();
            skip_ws();
        }
        return p;
    }

    Polynomial factor() {
        Polynomial p = atom();
        skip_ws();
        while (peek() == '^') {
            get();
            skip_ws();
            long e = integer();
            if (e < 0) fail(ErrorCode::ParseError, "negative exponent");
            Polynomial r = Polynomial::constant(FieldElem::one(field_), vars_.size());
            Polynomial base = p;
            for (long i = 0; i < e; ++i) r = r * base;
            p = r;
            skip_ws();
        }
        return p;
    }

    Polynomial atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            Polynomial p = expr();
            skip_ws();
            if (get() != ')') fail(ErrorCode::ParseError, "missing ')' in \"" + s_ + "\"");
            return p;
        }
        if (c == '-') {
            get();
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            skip_ws();
            if (peek() == '/') {
                // a rational literal, unless the slash starts something else
                std::size_t save = pos_;
                get();
                skip_ws();
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    num += "/" + digits();
                } else {
                    pos_ = save;
                }
            }
            return Polynomial::constant(FieldElem::parse(num, field_), vars_.size());
        }
        // longest-match variable name
        std::size_t best = vars_.size();
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const std::string& v = vars_[i];
            if (v.size() > best_len && s_.compare(pos_, v.size(), v) == 0) {
                best = i;
                best_len = v.size();
            }
        }
        if (best == vars_.size())
            fail(ErrorCode::ParseError,
                 "unknown symbol at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
        pos_ += best_len;
        return Polynomial::variable(vars_.size(), best, field_);
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    long integer() {
        bool neg = false;
        if (peek() == '-') {
            get();
            neg = true;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail(ErrorCode::ParseError, "expected integer in \"" + s_ + "\"");
        long v = std::stol(digits());
        return neg ? -v : v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    FieldSpec field_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars,
                            FieldSpec field) {
    return Parser(text, vars, field).parse();
}

} // namespace theta
