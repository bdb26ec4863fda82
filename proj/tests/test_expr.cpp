#include <cmath>
#include <random>

#include <doctest.h>

#include "geoquant/corpus.hpp"
#include "geoquant/errors.hpp"
#include "geoquant/expr.hpp"

using namespace geoquant;

namespace {

SymbolTable table() {
    SymbolTable t;
    t.add_coordinate("q").add_coordinate("p").add_coordinate("q1").add_coordinate("p1");
    t.add_parameter("hbar", 1.0);
    return t;
}

Expr P(const char* text) { return parse(text, table()); }
std::string C(const char* text) { return canonicalize(P(text)).to_string(); }

// Central difference with step h; O(h^2) truncation.
double numeric_partial(const Expr& e, const std::string& x, Point at, double h = 1e-5) {
    Point plus = at, minus = at;
    plus[x] += h;
    minus[x] -= h;
    return (evaluate(e, plus) - evaluate(e, minus)) / (2 * h);
}

}  // namespace

TEST_SUITE("expr") {

TEST_CASE("parse builds the grammar tree") {
    Expr s = P("q1");
    CHECK(s.is_symbol());
    CHECK(s.name() == "q1");

    Expr h = P("p^2/2 + q^2/2");
    REQUIRE(h.kind() == ExprKind::Sum);
    REQUIRE(h.children().size() == 2);
    for (const auto& term : h.children()) {
        REQUIRE(term.kind() == ExprKind::Quotient);
        CHECK(term.children()[0].kind() == ExprKind::Power);
        CHECK(term.children()[0].exponent() == 2);
        CHECK(term.children()[1] == Expr(2));
    }
}

TEST_CASE("parse errors carry offsets and names") {
    try {
        P("q ** p");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    try {
        P("q + x");
        FAIL("expected an unknown symbol");
    } catch (const UnknownSymbolError& e) {
        CHECK(e.name() == "x");
    }
    CHECK_THROWS_AS(P("q +"), ParseError);
    CHECK_THROWS_AS(P("(q"), ParseError);
    CHECK_THROWS_AS(P("tan(q)"), ParseError);
    CHECK_THROWS_AS(P("q^p"), ParseError);
}

TEST_CASE("i is the imaginary unit") {
    CHECK(C("i*i") == "-1");
    CHECK(C("(1+i)*(1-i)") == "2");
    CHECK(evaluate_complex(P("i*q"), {{"q", 2.0}}) == std::complex<double>(0.0, 2.0));
}

TEST_CASE("derivative examples") {
    CHECK(differentiate(P("q^2*p"), "q") == canonicalize(P("2*q*p")));
    CHECK(differentiate(P("exp(q)"), "p").is_zero());
    CHECK(differentiate(P("sin(q^2)"), "q") == canonicalize(P("2*q*cos(q^2)")));
    CHECK(differentiate(P("ln(q)"), "q") == canonicalize(P("1/q")));
    CHECK(differentiate(P("sqrt(q)"), "q") == canonicalize(P("1/(2*sqrt(q))")));
}

TEST_CASE("canonical examples") {
    CHECK(C("(q+p)*(q-p) - q^2 + p^2") == "0");
    CHECK(C("q*p - p*q") == "0");
    CHECK(C("2/4*q") == "1/2*q");
    CHECK(C("q^2*p") == "p*q^2");
    CHECK(C("(q^2-p^2)/(q-p)") == "p + q");
    CHECK(C("q^-2*q^3") == "q");
    CHECK_THROWS_AS(canonicalize(P("q/(q-q)")), ZeroDivisionError);
}

TEST_CASE("equality verdicts") {
    CHECK(equals(P("q^2"), P("q*q")) == Verdict::ProvedEqual);
    CHECK(equals(P("sin(q)^2 + cos(q)^2"), P("1")) == Verdict::NumericallyEqual);
    CHECK(equals(P("q"), P("p")) == Verdict::ProvedUnequal);
    CHECK(equals(P("sin(q)"), P("cos(q)")) == Verdict::ProvedUnequal);
    CHECK(equals(P("exp(ln(q^2+1))"), P("q^2+1")) == Verdict::NumericallyEqual);
}

TEST_CASE("evaluation") {
    CHECK(evaluate(P("p^2/2"), {{"p", 2.0}}) == doctest::Approx(2.0));
    CHECK(evaluate(P("exp(0)"), {}) == 1.0);
    CHECK_THROWS_AS(evaluate(P("ln(q)"), {{"q", -1.0}}), DomainError);
    CHECK_THROWS_AS(evaluate(P("sqrt(q)"), {{"q", -1.0}}), DomainError);
    CHECK_THROWS_AS(evaluate(P("q + p"), {{"q", 1.0}}), UnboundSymbolError);

    CompiledExpr compiled(P("q^3 - 2*q*p + sin(p)"), {"q", "p"});
    std::vector<double> at{0.7, -1.3};
    CHECK(compiled.real(at) == doctest::Approx(evaluate(P("q^3 - 2*q*p + sin(p)"), {{"q", 0.7}, {"p", -1.3}})));
}

TEST_CASE("symbolic derivative agrees with finite differences") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    const char* samples[] = {"q^3*p - 2*p^2", "sin(q*p) + exp(q)/2", "(q^2+1)/(p^2+2)", "cos(q)^2*ln(p^2+1)",
                             "sqrt(q^2+p^2+1)"};
    for (const char* text : samples) {
        Expr e = P(text);
        for (const char* x : {"q", "p"}) {
            Expr d = differentiate(e, x);
            for (int k = 0; k < 5; ++k) {
                Point at{{"q", coord(rng)}, {"p", coord(rng)}};
                CHECK(evaluate(d, at) == doctest::Approx(numeric_partial(e, x, at)).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("property: polynomial identities over a random corpus") {
    std::mt19937_64 rng(0x5EED);
    std::vector<std::string> vars{"q", "p", "q1", "p1"};
    for (int trial = 0; trial < 40; ++trial) {
        Expr a = random_polynomial(rng, vars, 3);
        Expr b = random_polynomial(rng, vars, 3);
        CAPTURE(a.to_string());
        CAPTURE(b.to_string());

        CHECK(canonicalize(a) == a);
        CHECK(equals(a * b, b * a) == Verdict::ProvedEqual);
        for (const auto& x : vars)
            for (const auto& y : vars)
                CHECK(equals(differentiate(differentiate(a, x), y), differentiate(differentiate(a, y), x)) ==
                      Verdict::ProvedEqual);
        CHECK(equals(differentiate(a * b, "q"), a * differentiate(b, "q") + b * differentiate(a, "q")) ==
              Verdict::ProvedEqual);

        Expr quotient = canonicalize(a / (b * b + Expr(1)));
        CHECK(canonicalize(quotient) == quotient);
        CHECK(parse(quotient.to_string(), table()) == quotient);
        CHECK(parse(a.to_string(), table()) == a);
    }
}

TEST_CASE("property: canonical form agrees numerically with the input") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    const char* samples[] = {"(q+p)^3 - (q-p)^3", "(q^2-1)/(q-1) + p/(p+3)", "(1+i*q)*(1-i*q)",
                             "sin(q)*q/(q^2+1) - exp(p)^2", "(q*p-1)^2/(q*p-1)"};
    for (const char* text : samples) {
        Expr e = P(text);
        Expr c = canonicalize(e);
        for (int k = 0; k < 8; ++k) {
            Point at{{"q", coord(rng)}, {"p", coord(rng)}};
            auto x = evaluate_complex(e, at), y = evaluate_complex(c, at);
            CHECK(std::abs(x - y) <= 1e-9 * (1 + std::abs(x)));
        }
    }
}

TEST_CASE("substitute and conjugate") {
    CHECK(substitute(P("q^2 + p"), {{"q", P("p + 1")}}) == canonicalize(P("p^2 + 3*p + 1")));
    CHECK(conjugate(P("q + i*p")) == canonicalize(P("q - i*p")));
    CHECK(free_symbols(P("q*hbar + sin(p)")) == std::set<std::string>{"hbar", "p", "q"});
}

}  // TEST_SUITE
