#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geoquant/gaussian_rational.hpp"
#include "geoquant/symbol_table.hpp"

namespace geoquant {

enum class ExprKind { Constant, Symbol, Sum, Product, Power, Quotient, Function };

/// Elementary functions recognized by the parser.
enum class Func { Exp, Ln, Sin, Cos, Sqrt };

std::string_view func_name(Func f);

/// Immutable symbolic expression tree.
///
/// Nodes are shared and never mutated, so copies are cheap and values can be
/// used from several threads without synchronization. The static builders do
/// light structural normalization only (flattening nested sums/products,
/// folding all-constant operands, collecting constant factors in front);
/// `canonicalize` produces the normal form.
class Expr {
public:
    /// The zero constant.
    Expr();
    Expr(long value);  // NOLINT(implicit)
    Expr(GaussianRational value);  // NOLINT(implicit)

    static Expr constant(GaussianRational value);
    static Expr symbol(std::string name);
    static Expr imaginary_unit() { return constant(GaussianRational::imaginary_unit()); }
    static Expr sum(std::vector<Expr> terms);
    static Expr product(std::vector<Expr> factors);
    static Expr power(Expr base, long exponent);
    static Expr quotient(Expr numerator, Expr denominator);
    static Expr apply(Func f, Expr argument);
    /// -e with the sign pushed into a leading constant factor when there is one.
    static Expr negate(const Expr& e);

    ExprKind kind() const noexcept;
    bool is_constant() const noexcept { return kind() == ExprKind::Constant; }
    bool is_symbol() const noexcept { return kind() == ExprKind::Symbol; }
    bool is_zero() const;
    bool is_one() const;

    /// Valid for Constant nodes.
    const GaussianRational& value() const;
    /// Valid for Symbol nodes.
    const std::string& name() const;
    /// Valid for Power nodes.
    long exponent() const;
    /// Valid for Function nodes.
    Func func() const;
    /// Operands: sum terms, product factors, {base}, {numerator, denominator}, {argument}.
    std::span<const Expr> children() const;

    /// Text in the input grammar; parse(to_string()) rebuilds the same tree for canonical forms.
    std::string to_string() const;

    friend bool operator==(const Expr& a, const Expr& b);

    friend Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
    friend Expr operator-(const Expr& a, const Expr& b) { return sum({a, negate(b)}); }
    friend Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
    friend Expr operator/(const Expr& a, const Expr& b) { return quotient(a, b); }
    Expr operator-() const { return negate(*this); }

    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses `text` against the expression grammar. Identifiers must be declared
/// in `symbols`; `i` denotes the imaginary unit.
Expr parse(std::string_view text, const SymbolTable& symbols);

/// Normal form: rational functions in the symbols and function atoms with
/// expanded, gcd-reduced numerator and monic denominator; graded
/// lexicographic monomial order with variables ordered by name.
Expr canonicalize(const Expr& e);

/// Partial derivative with respect to a symbol, in canonical form.
Expr differentiate(const Expr& e, const std::string& symbol);

/// Replaces symbols by expressions and canonicalizes the result.
Expr substitute(const Expr& e, const std::map<std::string, Expr>& replacements);

/// Complex conjugate treating every symbol as real.
Expr conjugate(const Expr& e);

std::set<std::string> free_symbols(const Expr& e);

enum class Verdict { ProvedEqual, ProvedUnequal, NumericallyEqual };

std::string_view verdict_name(Verdict v);

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Exact zero test of a-b, then random sampling of free symbols in [-2,2].
Verdict equals(const Expr& a, const Expr& b, int samples = 8, std::uint64_t seed = kDefaultSeed);

using Point = std::map<std::string, double>;

/// Real value at `point`; throws UnboundSymbolError, DomainError.
double evaluate(const Expr& e, const Point& point);
std::complex<double> evaluate_complex(const Expr& e, const Point& point);

/// Tree compiled once for repeated evaluation with positional symbol values.
class CompiledExpr {
public:
    CompiledExpr(const Expr& e, std::vector<std::string> slots);
    std::complex<double> operator()(std::span<const std::complex<double>> values) const;
    double real(std::span<const double> values) const;
    const std::vector<std::string>& slots() const noexcept { return slots_; }

    struct Instr {
        enum class Op { Constant, Slot, Add, Multiply, Divide, Power, Apply } op;
        std::complex<double> constant{};
        std::size_t operand = 0;  // slot index or operand count
        long exponent = 0;
        Func func = Func::Exp;
    };

private:
    std::vector<std::string> slots_;
    std::vector<Instr> program_;
    bool has_complex_constant_ = false;
};

}  // namespace geoquant
