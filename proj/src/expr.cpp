#include "geoquant/expr.hpp"

#include <utility>

#include "geoquant/errors.hpp"

namespace geoquant {

struct Expr::Node {
    ExprKind kind = ExprKind::Constant;
    GaussianRational value;
    std::string name;
    long exponent = 0;
    Func func = Func::Exp;
    std::vector<Expr> children;
};

std::string_view func_name(Func f) {
    switch (f) {
        case Func::Exp: return "exp";
        case Func::Ln: return "ln";
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Sqrt: return "sqrt";
    }
    return "?";
}

Expr::Expr() : Expr(GaussianRational(0)) {}
Expr::Expr(long value) : Expr(GaussianRational(value)) {}
Expr::Expr(GaussianRational value) {
    auto node = std::make_shared<Node>();
    node->value = std::move(value);
    node_ = std::move(node);
}

Expr Expr::constant(GaussianRational value) { return Expr(std::move(value)); }

Expr Expr::symbol(std::string name) {
    auto node = std::make_shared<Node>();
    node->kind = ExprKind::Symbol;
    node->name = std::move(name);
    return Expr(std::shared_ptr<const Node>(std::move(node)));
}

Expr Expr::sum(std::vector<Expr> terms) {
    std::vector<Expr> flat;
    bool all_constant = true;
    for (auto& t : terms) {
        if (t.kind() == ExprKind::Sum) {
            for (const auto& c : t.children()) flat.push_back(c);
        } else {
            flat.push_back(std::move(t));
        }
    }
    for (const auto& t : flat) all_constant = all_constant && t.is_constant();
    if (flat.empty()) return Expr();
    if (all_constant) {
        GaussianRational total;
        for (const auto& t : flat) total += t.value();
        return Expr(std::move(total));
    }
    if (flat.size() == 1) return flat.front();
    auto node = std::make_shared<Node>();
    node->kind = ExprKind::Sum;
    node->children = std::move(flat);
    return Expr(std::shared_ptr<const Node>(std::move(node)));
}

Expr Expr::product(std::vector<Expr> factors) {
    GaussianRational coefficient(1);
    bool has_constant = false;
    std::vector<Expr> rest;
    auto absorb = [&](const Expr& f) {
        if (f.is_constant()) {
            coefficient *= f.value();
            has_constant = true;
        } else {
            rest.push_back(f);
        }
    };
    for (const auto& f : factors) {
        if (f.kind() == ExprKind::Product) {
            for (const auto& c : f.children()) absorb(c);
        } else {
            absorb(f);
        }
    }
    if (rest.empty()) return Expr(std::move(coefficient));
    if (coefficient.is_zero()) return Expr();
    if (has_constant && !coefficient.is_one()) rest.insert(rest.begin(), Expr(std::move(coefficient)));
    if (rest.size() == 1) return rest.front();
    auto node = std::make_shared<Node>();
    node->kind = ExprKind::Product;
    node->children = std::move(rest);
    return Expr(std::shared_ptr<const Node>(std::move(node)));
}

Expr Expr::power(Expr base, long exponent) {
    if (exponent == 0) return Expr(1);
    if (exponent == 1) return base;
    if (base.is_constant()) return Expr(base.value().pow(exponent));
    auto node = std::make_shared<Node>();
    node->kind = ExprKind::Power;
    node->exponent = exponent;
    node->children = {std::move(base)};
    return Expr(std::shared_ptr<const Node>(std::move(node)));
}

Expr Expr::quotient(Expr numerator, Expr denominator) {
    if (numerator.is_constant() && denominator.is_constant()) return Expr(numerator.value() / denominator.value());
    auto node = std::make_shared<Node>();
    node->kind = ExprKind::Quotient;
    node->children = {std::move(numerator), std::move(denominator)};
    return Expr(std::shared_ptr<const Node>(std::move(node)));
}

Expr Expr::apply(Func f, Expr argument) {
    auto node = std::make_shared<Node>();
    node->kind = ExprKind::Function;
    node->func = f;
    node->children = {std::move(argument)};
    return Expr(std::shared_ptr<const Node>(std::move(node)));
}

Expr Expr::negate(const Expr& e) {
    if (e.is_constant()) return Expr(-e.value());
    if (e.kind() == ExprKind::Product && e.children().front().is_constant()) {
        std::vector<Expr> factors(e.children().begin(), e.children().end());
        factors.front() = Expr(-factors.front().value());
        return product(std::move(factors));
    }
    return product({Expr(-1), e});
}

ExprKind Expr::kind() const noexcept { return node_->kind; }
bool Expr::is_zero() const { return is_constant() && value().is_zero(); }
bool Expr::is_one() const { return is_constant() && value().is_one(); }

const GaussianRational& Expr::value() const {
    if (kind() != ExprKind::Constant) throw Error("expression is not a constant");
    return node_->value;
}

const std::string& Expr::name() const {
    if (kind() != ExprKind::Symbol) throw Error("expression is not a symbol");
    return node_->name;
}

long Expr::exponent() const {
    if (kind() != ExprKind::Power) throw Error("expression is not a power");
    return node_->exponent;
}

Func Expr::func() const {
    if (kind() != ExprKind::Function) throw Error("expression is not a function application");
    return node_->func;
}

std::span<const Expr> Expr::children() const { return node_->children; }

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case ExprKind::Constant: return x.value == y.value;
        case ExprKind::Symbol: return x.name == y.name;
        case ExprKind::Power:
            if (x.exponent != y.exponent) return false;
            break;
        case ExprKind::Function:
            if (x.func != y.func) return false;
            break;
        default: break;
    }
    return x.children == y.children;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

bool negative_leading(const Expr& e) {
    if (e.is_constant()) return e.value().looks_negative() && (e.value().is_real() || sgn(e.value().real()) == 0);
    if (e.kind() == ExprKind::Product) return negative_leading(e.children().front());
    return false;
}

// Safe as a power base, non-leading factor or denominator without parentheses.
bool atomic(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::Symbol:
        case ExprKind::Function: return true;
        case ExprKind::Constant: return e.value().is_integer() && sgn(e.value().real()) >= 0;
        default: return false;
    }
}

std::string print(const Expr& e);

std::string wrap(const Expr& e) { return "(" + print(e) + ")"; }

std::string print_factor(const Expr& e) {
    if (e.kind() == ExprKind::Power || atomic(e)) return print(e);
    return wrap(e);
}

std::string print(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::Constant: return e.value().to_string();
        case ExprKind::Symbol: return e.name();
        case ExprKind::Function:
            return std::string(func_name(e.func())) + "(" + print(e.children().front()) + ")";
        case ExprKind::Power: {
            const Expr& base = e.children().front();
            std::string b = atomic(base) ? print(base) : wrap(base);
            return b + "^" + std::to_string(e.exponent());
        }
        case ExprKind::Quotient: {
            const Expr& num = e.children()[0];
            const Expr& den = e.children()[1];
            std::string n = num.kind() == ExprKind::Sum ? wrap(num) : print(num);
            std::string d = (den.kind() == ExprKind::Power || atomic(den)) ? print(den) : wrap(den);
            return n + "/" + d;
        }
        case ExprKind::Product: {
            std::string out;
            auto factors = e.children();
            std::size_t start = 0;
            if (factors.front().is_constant()) {
                const auto& c = factors.front().value();
                if (c == GaussianRational(-1)) {
                    out = "-";
                } else {
                    out = c.to_string() + "*";
                }
                start = 1;
            }
            for (std::size_t k = start; k < factors.size(); ++k) {
                if (k > start) out += "*";
                out += print_factor(factors[k]);
            }
            return out;
        }
        case ExprKind::Sum: {
            std::string out;
            auto terms = e.children();
            for (std::size_t k = 0; k < terms.size(); ++k) {
                const Expr& t = terms[k];
                if (k == 0) {
                    out = t.kind() == ExprKind::Sum ? wrap(t) : print(t);
                } else if (negative_leading(t)) {
                    out += " - " + print(Expr::negate(t));
                } else {
                    out += " + " + (t.kind() == ExprKind::Sum ? wrap(t) : print(t));
                }
            }
            return out;
        }
    }
    return {};
}

}  // namespace

std::string Expr::to_string() const { return print(*this); }

}  // namespace geoquant
