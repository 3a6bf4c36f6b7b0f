#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "theta/context.hpp"
#include "theta/polynomial.hpp"

using namespace theta;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};
const FieldSpec Q{};

Polynomial P(const std::string& s, const std::vector<std::string>& vars = XY,
             FieldSpec f = Q) {
    return parse_polynomial(s, vars, f);
}

Polynomial rand_poly(std::mt19937_64& rng, std::size_t nvars, FieldSpec field) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(0, 3), coef(-4, 4);
    Polynomial p = Polynomial::zero(nvars, field);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(nvars);
        for (std::size_t i = 0; i < nvars; ++i) m[i] = expo(rng);
        p = p + Polynomial::monomial(m, FieldElem::integer(coef(rng), field));
    }
    return p;
}

} // namespace

TEST_CASE("field elements: canonical rationals and F_p residues") {
    FieldSpec fp = FieldSpec::parse("Fp:31");
    CHECK(FieldSpec::parse("Q").is_rational());
    CHECK(fp.p == 31);
    CHECK_THROWS_AS(FieldSpec::parse("Fp:32"), EngineError);

    FieldElem a = FieldElem::parse("3/6", Q);
    CHECK(a.to_string() == "1/2");
    FieldElem b = FieldElem::parse("-2/4", Q);
    CHECK((a + b).is_zero());
    CHECK((a * FieldElem::integer(2, Q)).is_one());

    FieldElem c = FieldElem::integer(-1, fp);
    CHECK(c.to_string() == "30");
    CHECK((c * c).is_one());
    FieldElem zeta = FieldElem::integer(25, fp);
    CHECK((zeta * zeta * zeta).is_one()); // cube root of unity mod 31
    CHECK(!zeta.is_one());
    CHECK((FieldElem::integer(7, fp) * FieldElem::integer(7, fp).inverse()).is_one());
    CHECK_THROWS_AS(a + c, EngineError);
}

TEST_CASE("poly arithmetic examples") {
    CHECK(P("x+y") + P("x-y") == P("2*x"));
    CHECK(P("x") * P("y") == P("x*y"));
    // expanded by hand: (x+y)(x-y) = x^2 - y^2
    CHECK(P("(x+y)*(x-y)") == P("x^2-y^2"));
    CHECK(P("x") - P("x") == P("0"));
    CHECK_THROWS_AS(P("x") + P("x", XYZ), EngineError);
}

TEST_CASE("partials") {
    auto j1 = partials(P("x*y"));
    CHECK(j1[0] == P("y"));
    CHECK(j1[1] == P("x"));
    auto j2 = partials(P("x*y-z^2", XYZ));
    CHECK(j2[0] == P("y", XYZ));
    CHECK(j2[1] == P("x", XYZ));
    CHECK(j2[2] == P("-2*z", XYZ));
    auto j3 = partials(P("x^3+y^3"));
    CHECK(j3[0] == P("3*x^2"));
    CHECK(j3[1] == P("3*y^2"));
}

TEST_CASE("monomial order comparisons") {
    MonomialOrder grevlex = MonomialOrder::grevlex({1, 1});
    MonomialOrder lex = MonomialOrder::lex(2);
    MonomialOrder local = MonomialOrder::neg_grevlex({1, 1});

    Monomial x2({2, 0}), xy({1, 1}), x({1, 0}), y3({0, 3}), one({0, 0});
    CHECK(grevlex.compare(x2, xy) == Ordering::GT);
    CHECK(local.compare(one, x) == Ordering::GT);
    CHECK(lex.compare(y3, x) == Ordering::LT);
}

TEST_CASE("order properties on random monomials") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> expo(0, 5);
    std::vector<MonomialOrder> orders = {
        MonomialOrder::grevlex({1, 1, 1}), MonomialOrder::lex(3),
        MonomialOrder::neg_grevlex({1, 1, 1}), MonomialOrder::neg_lex(3),
        MonomialOrder::grevlex({2, 1, 3})};
    for (int rep = 0; rep < 500; ++rep) {
        Monomial a(3), b(3), c(3);
        for (int i = 0; i < 3; ++i) {
            a[i] = expo(rng);
            b[i] = expo(rng);
            c[i] = expo(rng);
        }
        for (const auto& ord : orders) {
            // trichotomy
            Ordering ab = ord.compare(a, b);
            Ordering ba = ord.compare(b, a);
            CHECK(int(ab) == -int(ba));
            CHECK((ab == Ordering::EQ) == (a == b));
            // compatibility with multiplication
            if (ab == Ordering::GT) CHECK(ord.compare(a * c, b * c) == Ordering::GT);
        }
    }
}

TEST_CASE("ring axioms on random triples (Q and F_31)") {
    std::mt19937_64 rng(7);
    for (FieldSpec f : {FieldSpec{0}, FieldSpec{31}}) {
        for (int rep = 0; rep < 60; ++rep) {
            Polynomial a = rand_poly(rng, 2, f), b = rand_poly(rng, 2, f),
                       c = rand_poly(rng, 2, f);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("Leibniz rule on random products") {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 40; ++rep) {
        Polynomial f = rand_poly(rng, 3, Q), g = rand_poly(rng, 3, Q);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK((f * g).derivative(i) == f * g.derivative(i) + g * f.derivative(i));
    }
}

TEST_CASE("printing and parsing round-trips") {
    MonomialOrder ord = MonomialOrder::grevlex({1, 1});
    Polynomial p = P("3/2*x^2*y - x + 1");
    std::string s = p.to_string(XY, ord);
    CHECK(s == "3/2*x^2*y - x + 1");
    CHECK(P(s) == p);
    CHECK(P("0").to_string(XY, ord) == "0");
    CHECK(P("-x").to_string(XY, ord) == "-x");
    CHECK(P("x-x").is_zero());
    CHECK_THROWS_AS(P("x+q"), EngineError);
    CHECK_THROWS_AS(P("x++"), EngineError);

    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 50; ++rep) {
        Polynomial q = rand_poly(rng, 2, Q);
        CHECK(P(q.to_string(XY, ord)) == q);
    }
}

TEST_CASE("singularity context invariants") {
    auto ctx = SingularityContext::make({"x", "y"}, {}, Q, "x*y");
    CHECK(ctx->n() == 1);
    CHECK(ctx->jacobian_ideal()[0] == P("y"));
    CHECK(ctx->jacobian_ideal()[1] == P("x"));
    CHECK(ctx->f_is_homogeneous());
    CHECK(ctx->f_degree() == 2);
    CHECK_THROWS_AS(SingularityContext::make({"x", "y"}, {}, Q, "x*y+1"), EngineError);
    CHECK_THROWS_AS(SingularityContext::make({"x", "y"}, {1, -1}, Q, "x*y"), EngineError);

    auto wctx = SingularityContext::make({"x", "y", "z"}, {2, 1, 2}, Q, "x^2+y^4+z^2");
    CHECK(wctx->f_is_homogeneous());
    CHECK(wctx->f_degree() == 4);
}

TEST_CASE("homogeneous degree detection") {
    CHECK(P("x^2+x*y").homogeneous_degree({1, 1}) == 2);
    CHECK(!P("x^2+x").homogeneous_degree({1, 1}).has_value());
    CHECK(P("x+y^2").homogeneous_degree({2, 1}) == 2);
}
