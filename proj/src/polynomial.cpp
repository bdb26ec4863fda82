#include "geoquant/polynomial.hpp"

#include <algorithm>
#include <optional>

#include "geoquant/errors.hpp"

namespace geoquant {

Var make_symbol_var(const std::string& name) {
    return std::make_shared<const VarInfo>(VarInfo{VarInfo::Kind::Symbol, name, Expr::symbol(name)});
}

Var make_atom_var(Func f, const Expr& canonical_argument) {
    Expr application = Expr::apply(f, canonical_argument);
    return std::make_shared<const VarInfo>(VarInfo{VarInfo::Kind::Atom, application.to_string(), application});
}

int degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

int exponent_of(const Monomial& m, const Var& v) {
    for (const auto& [w, e] : m)
        if (w->kind == v->kind && w->key == v->key) return e;
    return 0;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    VarLess less;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && less(a[i].first, b[j].first))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || less(b[j].first, a[i].first)) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

namespace {

// a / b when every exponent of b is covered by a.
std::optional<Monomial> divide(const Monomial& a, const Monomial& b) {
    Monomial out;
    VarLess less;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && less(a[i].first, b[j].first))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || less(b[j].first, a[i].first)) {
            return std::nullopt;
        } else {
            int e = a[i].second - b[j].second;
            if (e < 0) return std::nullopt;
            if (e > 0) out.emplace_back(a[i].first, e);
            ++i;
            ++j;
        }
    }
    return out;
}

bool same_var(const Var& a, const Var& b) { return a->kind == b->kind && a->key == b->key; }

}  // namespace

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    VarLess less;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        // The earliest variable present in either decides.
        if (j == b.size() || (i < a.size() && less(a[i].first, b[j].first))) return false;
        if (i == a.size() || less(b[j].first, a[i].first)) return true;
        if (a[i].second != b[j].second) return a[i].second < b[j].second;
        ++i;
        ++j;
    }
    return false;
}

Polynomial::Polynomial(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

Polynomial Polynomial::variable(const Var& v, int power) {
    Polynomial p;
    if (power == 0) return Polynomial(1);
    p.terms_.emplace(Monomial{{v, power}}, GaussianRational(1));
    return p;
}

Polynomial Polynomial::term(Monomial m, GaussianRational c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

GaussianRational Polynomial::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

const std::pair<const Monomial, GaussianRational>& Polynomial::leading() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return *terms_.rbegin();
}

int Polynomial::total_degree() const { return terms_.empty() ? 0 : degree(terms_.rbegin()->first); }

std::set<Var, VarLess> Polynomial::variables() const {
    std::set<Var, VarLess> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) out.insert(v);
    return out;
}

bool Polynomial::contains(const Var& v) const { return degree_in(v) > 0; }

int Polynomial::degree_in(const Var& v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, exponent_of(m, v));
    return d;
}

std::map<int, Polynomial> Polynomial::coefficients_in(const Var& v) const {
    std::map<int, Polynomial> out;
    for (const auto& [m, c] : terms_) {
        Monomial rest;
        int k = 0;
        for (const auto& [w, e] : m) {
            if (same_var(w, v)) {
                k = e;
            } else {
                rest.emplace_back(w, e);
            }
        }
        out[k].add_term(rest, c);
    }
    return out;
}

Polynomial Polynomial::from_coefficients(const Var& v, const std::map<int, Polynomial>& coefficients) {
    Polynomial out;
    for (const auto& [k, p] : coefficients) out += p * variable(v, k);
    return out;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator-() const { return scaled(GaussianRational(-1)); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    if (c.is_zero()) return {};
    Polynomial out = *this;
    for (auto& [m, coeff] : out.terms_) coeff *= c;
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent > 0) base = base * base;
    }
    return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    GrlexLess less;
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    for (; i != a.terms_.end(); ++i, ++j) {
        if (less(i->first, j->first) || less(j->first, i->first)) return false;
        if (!(i->second == j->second)) return false;
    }
    return true;
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw ZeroDivisionError("division by the zero polynomial");
    const auto& [lead_m, lead_c] = divisor.leading();
    Polynomial quotient;
    Polynomial rest = *this;
    while (!rest.is_zero()) {
        const auto& [m, c] = rest.leading();
        auto q = divide(m, lead_m);
        if (!q) throw Error("polynomial division is not exact");
        Polynomial t = term(*q, c / lead_c);
        quotient += t;
        rest -= t * divisor;
    }
    return quotient;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return scaled(GaussianRational(1) / leading().second);
}

Polynomial Polynomial::formal_derivative(const Var& v) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Monomial reduced;
        int k = 0;
        for (const auto& [w, e] : m) {
            if (same_var(w, v)) {
                k = e;
                if (e > 1) reduced.emplace_back(w, e - 1);
            } else {
                reduced.emplace_back(w, e);
            }
        }
        if (k > 0) out.add_term(reduced, c * GaussianRational(k));
    }
    return out;
}

namespace {

Polynomial content_in(const Polynomial& p, const Var& v);

Polynomial primitive_part(const Polynomial& p, const Var& v) {
    if (p.is_zero()) return p;
    return p.exact_divide(content_in(p, v));
}

Polynomial content_in(const Polynomial& p, const Var& v) {
    Polynomial g;
    for (const auto& [k, c] : p.coefficients_in(v)) {
        g = Polynomial::gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

// lc(b)^k * a reduced modulo b as polynomials in v.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, const Var& v) {
    int db = b.degree_in(v);
    auto bc = b.coefficients_in(v);
    const Polynomial lead_b = bc.rbegin()->second;
    while (!a.is_zero()) {
        int da = a.degree_in(v);
        if (da < db) break;
        auto ac = a.coefficients_in(v);
        const Polynomial lead_a = ac.rbegin()->second;
        a = a * lead_b - lead_a * Polynomial::variable(v, da - db) * b;
    }
    return a;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(1);

    auto vars = a.variables();
    auto vb = b.variables();
    vars.insert(vb.begin(), vb.end());
    const Var& v = *vars.begin();

    if (!a.contains(v)) return gcd(a, content_in(b, v));
    if (!b.contains(v)) return gcd(content_in(a, v), b);

    Polynomial common = gcd(content_in(a, v), content_in(b, v));
    Polynomial f = primitive_part(a, v);
    Polynomial g = primitive_part(b, v);
    if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
    while (true) {
        if (g.is_zero()) break;
        if (g.degree_in(v) == 0) {
            f = Polynomial(1);
            break;
        }
        Polynomial r = pseudo_remainder(f, g, v);
        f = std::move(g);
        g = r.is_zero() ? r : primitive_part(r, v);
    }
    return (common * primitive_part(f, v)).monic();
}

Expr monomial_expr(const Monomial& m) {
    std::vector<Expr> factors;
    for (const auto& [v, e] : m) factors.push_back(Expr::power(v->expr, e));
    return Expr::product(std::move(factors));
}

Expr Polynomial::to_expr() const {
    if (terms_.empty()) return Expr();
    std::vector<Expr> parts;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::vector<Expr> factors{Expr::constant(it->second)};
        factors.push_back(monomial_expr(it->first));
        parts.push_back(Expr::product(std::move(factors)));
    }
    return Expr::sum(std::move(parts));
}

}  // namespace geoquant
