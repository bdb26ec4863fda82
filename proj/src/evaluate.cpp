#include <algorithm>
#include <cmath>
#include <type_traits>

#include "geoquant/errors.hpp"
#include "geoquant/expr.hpp"

namespace geoquant {

namespace {

using Complex = std::complex<double>;

Complex apply_function(Func f, Complex x) {
    switch (f) {
        case Func::Exp: return std::exp(x);
        case Func::Sin: return std::sin(x);
        case Func::Cos: return std::cos(x);
        case Func::Ln:
            if (x.imag() != 0.0 || x.real() <= 0.0) throw DomainError("ln of a non-positive value");
            return std::log(x.real());
        case Func::Sqrt:
            if (x.imag() != 0.0 || x.real() < 0.0) throw DomainError("sqrt of a negative value");
            return std::sqrt(x.real());
    }
    return {};
}

Complex checked_divide(Complex a, Complex b) {
    if (b == Complex(0.0, 0.0)) throw DomainError("division by zero");
    return a / b;
}

Complex integer_power(Complex base, long exponent) {
    if (exponent < 0) return checked_divide(1.0, integer_power(base, -exponent));
    Complex result = 1.0;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

Complex walk(const Expr& e, const Point& point) {
    switch (e.kind()) {
        case ExprKind::Constant: return e.value().to_complex();
        case ExprKind::Symbol: {
            auto it = point.find(e.name());
            if (it == point.end()) throw UnboundSymbolError(e.name());
            return it->second;
        }
        case ExprKind::Sum: {
            Complex total = 0.0;
            for (const auto& t : e.children()) total += walk(t, point);
            return total;
        }
        case ExprKind::Product: {
            Complex total = 1.0;
            for (const auto& f : e.children()) total *= walk(f, point);
            return total;
        }
        case ExprKind::Power: return integer_power(walk(e.children().front(), point), e.exponent());
        case ExprKind::Quotient: return checked_divide(walk(e.children()[0], point), walk(e.children()[1], point));
        case ExprKind::Function: return apply_function(e.func(), walk(e.children().front(), point));
    }
    return {};
}

}  // namespace

std::complex<double> evaluate_complex(const Expr& e, const Point& point) { return walk(e, point); }

double evaluate(const Expr& e, const Point& point) {
    Complex v = walk(e, point);
    if (v.imag() != 0.0) throw DomainError("expression has a non-real value");
    return v.real();
}

namespace {

void emit(const Expr& e, const std::vector<std::string>& slots, std::vector<CompiledExpr::Instr>& program) {
    using Op = CompiledExpr::Instr::Op;
    switch (e.kind()) {
        case ExprKind::Constant:
            program.push_back({Op::Constant, e.value().to_complex()});
            return;
        case ExprKind::Symbol: {
            auto it = std::find(slots.begin(), slots.end(), e.name());
            if (it == slots.end()) throw UnboundSymbolError(e.name());
            program.push_back({Op::Slot, {}, static_cast<std::size_t>(it - slots.begin())});
            return;
        }
        default: break;
    }
    for (const auto& c : e.children()) emit(c, slots, program);
    std::size_t n = e.children().size();
    switch (e.kind()) {
        case ExprKind::Sum: program.push_back({Op::Add, {}, n}); break;
        case ExprKind::Product: program.push_back({Op::Multiply, {}, n}); break;
        case ExprKind::Quotient: program.push_back({Op::Divide}); break;
        case ExprKind::Power: program.push_back({Op::Power, {}, 0, e.exponent()}); break;
        case ExprKind::Function: program.push_back({Op::Apply, {}, 0, 0, e.func()}); break;
        default: break;
    }
}

double apply_function(Func f, double x) {
    switch (f) {
        case Func::Exp: return std::exp(x);
        case Func::Sin: return std::sin(x);
        case Func::Cos: return std::cos(x);
        case Func::Ln:
            if (x <= 0.0) throw DomainError("ln of a non-positive value");
            return std::log(x);
        case Func::Sqrt:
            if (x < 0.0) throw DomainError("sqrt of a negative value");
            return std::sqrt(x);
    }
    return {};
}

double checked_divide(double a, double b) {
    if (b == 0.0) throw DomainError("division by zero");
    return a / b;
}

double integer_power(double base, long exponent) {
    if (exponent < 0) return checked_divide(1.0, integer_power(base, -exponent));
    double result = 1.0;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

template <class T>
T execute(const std::vector<CompiledExpr::Instr>& program, std::span<const T> values) {
    using Op = CompiledExpr::Instr::Op;
    std::vector<T> stack;
    stack.reserve(16);
    for (const auto& in : program) {
        switch (in.op) {
            case Op::Constant:
                if constexpr (std::is_same_v<T, double>) {
                    stack.push_back(in.constant.real());
                } else {
                    stack.push_back(in.constant);
                }
                break;
            case Op::Slot: stack.push_back(values[in.operand]); break;
            case Op::Add: {
                T total = 0.0;
                for (std::size_t k = 0; k < in.operand; ++k) total += stack[stack.size() - 1 - k];
                stack.resize(stack.size() - in.operand);
                stack.push_back(total);
                break;
            }
            case Op::Multiply: {
                T total = 1.0;
                for (std::size_t k = 0; k < in.operand; ++k) total *= stack[stack.size() - 1 - k];
                stack.resize(stack.size() - in.operand);
                stack.push_back(total);
                break;
            }
            case Op::Divide: {
                T d = stack.back();
                stack.pop_back();
                stack.back() = checked_divide(stack.back(), d);
                break;
            }
            case Op::Power: stack.back() = integer_power(stack.back(), in.exponent); break;
            case Op::Apply: stack.back() = apply_function(in.func, stack.back()); break;
        }
    }
    return stack.back();
}

}  // namespace

CompiledExpr::CompiledExpr(const Expr& e, std::vector<std::string> slots) : slots_(std::move(slots)) {
    emit(e, slots_, program_);
    for (const auto& in : program_)
        has_complex_constant_ = has_complex_constant_ || (in.op == Instr::Op::Constant && in.constant.imag() != 0.0);
}

std::complex<double> CompiledExpr::operator()(std::span<const std::complex<double>> values) const {
    return execute<Complex>(program_, values);
}

double CompiledExpr::real(std::span<const double> values) const {
    if (has_complex_constant_) throw DomainError("expression has a non-real value");
    return execute<double>(program_, values);
}

}  // namespace geoquant
