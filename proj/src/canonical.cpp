#include <cmath>
#include <optional>
#include <random>

#include "geoquant/errors.hpp"
#include "geoquant/expr.hpp"
#include "geoquant/rational_function.hpp"

namespace geoquant {

namespace {

std::optional<mpq_class> exact_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    mpz_class rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return mpq_class(rn, rd);
}

// Exact value of f(c) for the handful of constant arguments with a rational result.
std::optional<GaussianRational> fold_function(Func f, const GaussianRational& c) {
    switch (f) {
        case Func::Exp:
        case Func::Cos:
            if (c.is_zero()) return GaussianRational(1);
            break;
        case Func::Sin:
            if (c.is_zero()) return GaussianRational(0);
            break;
        case Func::Ln:
            if (c.is_one()) return GaussianRational(0);
            break;
        case Func::Sqrt:
            if (c.is_real()) {
                if (auto r = exact_sqrt(c.real())) return GaussianRational(*r);
            }
            break;
    }
    return std::nullopt;
}

RationalFunction function_value(Func f, const RationalFunction& argument) {
    if (argument.numerator().is_constant() && argument.denominator().is_constant()) {
        if (auto folded = fold_function(f, argument.numerator().constant_term())) return *folded;
    }
    return Polynomial::variable(make_atom_var(f, argument.to_expr()));
}

RationalFunction variable_derivative(const Var& v, const std::string& name) {
    if (v->kind == VarInfo::Kind::Symbol) return v->key == name ? RationalFunction(1) : RationalFunction();
    const Expr& application = v->expr;
    const Expr& u = application.children().front();
    RationalFunction arg = RationalFunction::from_expr(u);
    RationalFunction du = arg.derivative(name);
    if (du.is_zero()) return {};
    RationalFunction outer;
    switch (application.func()) {
        case Func::Exp: outer = Polynomial::variable(v); break;
        case Func::Ln: outer = RationalFunction(1) / arg; break;
        case Func::Sin: outer = function_value(Func::Cos, arg); break;
        case Func::Cos: outer = -function_value(Func::Sin, arg); break;
        case Func::Sqrt:
            outer = RationalFunction(Polynomial(1), Polynomial::variable(v).scaled(GaussianRational(2)));
            break;
    }
    return outer * du;
}

Polynomial polynomial_derivative(const Polynomial& p, const std::string& name, RationalFunction& extra) {
    // Symbols differentiate inside the polynomial ring; atoms contribute rational terms.
    Polynomial out;
    for (const Var& v : p.variables()) {
        if (v->kind == VarInfo::Kind::Symbol) {
            if (v->key == name) out += p.formal_derivative(v);
        } else {
            RationalFunction dv = variable_derivative(v, name);
            if (!dv.is_zero()) extra += RationalFunction(p.formal_derivative(v)) * dv;
        }
    }
    return out;
}

}  // namespace

RationalFunction RationalFunction::from_expr(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::Constant: return e.value();
        case ExprKind::Symbol: return Polynomial::variable(make_symbol_var(e.name()));
        case ExprKind::Sum: {
            RationalFunction total;
            for (const auto& t : e.children()) total += from_expr(t);
            return total;
        }
        case ExprKind::Product: {
            RationalFunction total(1);
            for (const auto& f : e.children()) total *= from_expr(f);
            return total;
        }
        case ExprKind::Power: return from_expr(e.children().front()).pow(e.exponent());
        case ExprKind::Quotient: {
            RationalFunction den = from_expr(e.children()[1]);
            if (den.is_zero()) throw ZeroDivisionError("division by the zero polynomial");
            return from_expr(e.children()[0]) / den;
        }
        case ExprKind::Function: return function_value(e.func(), from_expr(e.children().front()));
    }
    return {};
}

RationalFunction RationalFunction::derivative(const std::string& name) const {
    RationalFunction extra_num;
    Polynomial dn = polynomial_derivative(num_, name, extra_num);
    RationalFunction numerator_derivative = RationalFunction(dn) + extra_num;
    if (den_.is_constant()) return numerator_derivative;
    RationalFunction extra_den;
    Polynomial dd = polynomial_derivative(den_, name, extra_den);
    RationalFunction denominator_derivative = RationalFunction(dd) + extra_den;
    RationalFunction d(den_);
    return (numerator_derivative * d - RationalFunction(num_) * denominator_derivative) / (d * d);
}

Expr canonicalize(const Expr& e) { return RationalFunction::from_expr(e).to_expr(); }

Expr differentiate(const Expr& e, const std::string& symbol) {
    return RationalFunction::from_expr(e).derivative(symbol).to_expr();
}

namespace {

Expr replace(const Expr& e, const std::map<std::string, Expr>& replacements) {
    switch (e.kind()) {
        case ExprKind::Constant: return e;
        case ExprKind::Symbol: {
            auto it = replacements.find(e.name());
            return it == replacements.end() ? e : it->second;
        }
        default: break;
    }
    std::vector<Expr> kids;
    for (const auto& c : e.children()) kids.push_back(replace(c, replacements));
    switch (e.kind()) {
        case ExprKind::Sum: return Expr::sum(std::move(kids));
        case ExprKind::Product: return Expr::product(std::move(kids));
        case ExprKind::Power: return Expr::power(kids[0], e.exponent());
        case ExprKind::Quotient: return Expr::quotient(kids[0], kids[1]);
        case ExprKind::Function: return Expr::apply(e.func(), kids[0]);
        default: return e;
    }
}

Expr conjugate_tree(const Expr& e) {
    if (e.is_constant()) return Expr::constant(e.value().conj());
    if (e.is_symbol()) return e;
    std::vector<Expr> kids;
    for (const auto& c : e.children()) kids.push_back(conjugate_tree(c));
    switch (e.kind()) {
        case ExprKind::Sum: return Expr::sum(std::move(kids));
        case ExprKind::Product: return Expr::product(std::move(kids));
        case ExprKind::Power: return Expr::power(kids[0], e.exponent());
        case ExprKind::Quotient: return Expr::quotient(kids[0], kids[1]);
        case ExprKind::Function: return Expr::apply(e.func(), kids[0]);
        default: return e;
    }
}

void collect_symbols(const Expr& e, std::set<std::string>& out) {
    if (e.is_symbol()) {
        out.insert(e.name());
        return;
    }
    for (const auto& c : e.children()) collect_symbols(c, out);
}

}  // namespace

Expr substitute(const Expr& e, const std::map<std::string, Expr>& replacements) {
    return canonicalize(replace(e, replacements));
}

Expr conjugate(const Expr& e) { return canonicalize(conjugate_tree(e)); }

std::set<std::string> free_symbols(const Expr& e) {
    std::set<std::string> out;
    collect_symbols(e, out);
    return out;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ProvedEqual: return "ProvedEqual";
        case Verdict::ProvedUnequal: return "ProvedUnequal";
        case Verdict::NumericallyEqual: return "NumericallyEqual";
    }
    return "?";
}

Verdict equals(const Expr& a, const Expr& b, int samples, std::uint64_t seed) {
    if (samples < 1) throw Error("equals needs at least one sample");
    if (canonicalize(a - b).is_zero()) return Verdict::ProvedEqual;

    std::set<std::string> symbols = free_symbols(a);
    for (const auto& s : free_symbols(b)) symbols.insert(s);

    constexpr int kMaxAttempts = 100;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coordinate(-2.0, 2.0);
    int accepted = 0;
    for (int attempt = 0; accepted < samples; ++attempt) {
        if (attempt >= kMaxAttempts)
            throw DomainError("could not find " + std::to_string(samples) + " sample points inside the domain");
        Point point;
        for (const auto& s : symbols) point[s] = coordinate(rng);
        std::complex<double> va, vb;
        try {
            va = evaluate_complex(a, point);
            vb = evaluate_complex(b, point);
        } catch (const DomainError&) {
            continue;
        }
        ++accepted;
        if (std::abs(va - vb) > 1e-9 * (1.0 + std::abs(va) + std::abs(vb))) return Verdict::ProvedUnequal;
    }
    return Verdict::NumericallyEqual;
}

}  // namespace geoquant
