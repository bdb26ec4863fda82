#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geoquant {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnknownSymbolError : public Error {
public:
    explicit UnknownSymbolError(std::string name)
        : Error("unknown symbol '" + name + "'"), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// A symbol used in an expression is not part of the chart it is applied to.
class ForeignSymbolError : public Error {
public:
    explicit ForeignSymbolError(std::string name)
        : Error("symbol '" + name + "' is not declared on the chart"), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class UnboundSymbolError : public Error {
public:
    explicit UnboundSymbolError(std::string name)
        : Error("no numeric value bound to '" + name + "'"), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// sqrt/ln outside the real domain, or a numeric division by zero.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Symbolic division by the zero polynomial.
class ZeroDivisionError : public Error {
public:
    using Error::Error;
};

class ChartError : public Error {
public:
    using Error::Error;
};

class ChartMismatchError : public Error {
public:
    ChartMismatchError() : Error("operands live on different charts") {}
};

/// The observable is outside the class a representation can quantize.
class NotQuantizableError : public Error {
public:
    NotQuantizableError(const std::string& message, std::string monomial)
        : Error(message), monomial_(std::move(monomial)) {}
    const std::string& monomial() const noexcept { return monomial_; }

private:
    std::string monomial_;
};

/// Rank deficiency or other structural violations of a distribution.
class DistributionError : public Error {
public:
    using Error::Error;
};

/// Non-compact leaves, multi-well level sets, unbracketed roots.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Grid size/decay violations for sampled wave functions.
class GridError : public Error {
public:
    using Error::Error;
};

}  // namespace geoquant
