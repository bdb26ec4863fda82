#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace geoquant {

/// Name of the reduced Planck constant parameter shared by every chart.
inline constexpr const char* kHbar = "hbar";

/// Ordered coordinate names plus named parameters with optional numeric bindings.
///
/// The identifier `i` is reserved for the imaginary unit and function names
/// (exp, ln, sin, cos, sqrt) cannot be declared.
class SymbolTable {
public:
    SymbolTable() = default;

    SymbolTable& add_coordinate(const std::string& name);
    SymbolTable& add_parameter(const std::string& name, std::optional<double> value = std::nullopt);
    /// Rebinds an existing parameter; throws if the name is not a parameter.
    SymbolTable& bind(const std::string& name, double value);

    bool contains(const std::string& name) const;
    bool is_coordinate(const std::string& name) const;
    bool is_parameter(const std::string& name) const;

    const std::vector<std::string>& coordinates() const noexcept { return coordinates_; }
    const std::vector<std::string>& parameters() const noexcept { return parameters_; }
    std::optional<double> binding(const std::string& name) const;
    /// Every parameter that has a numeric value.
    std::map<std::string, double> bindings() const;

    friend bool operator==(const SymbolTable&, const SymbolTable&) = default;

private:
    void check_new_name(const std::string& name) const;

    std::vector<std::string> coordinates_;
    std::vector<std::string> parameters_;
    std::map<std::string, double> values_;
};

}  // namespace geoquant
