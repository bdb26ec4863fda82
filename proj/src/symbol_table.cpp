#include "geoquant/symbol_table.hpp"

#include <algorithm>
#include <cctype>

#include "geoquant/errors.hpp"

namespace geoquant {

namespace {

bool valid_identifier(const std::string& name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

bool reserved(const std::string& name) {
    static const char* const kReserved[] = {"i", "exp", "ln", "sin", "cos", "sqrt"};
    return std::any_of(std::begin(kReserved), std::end(kReserved), [&](const char* r) { return name == r; });
}

bool contains_name(const std::vector<std::string>& names, const std::string& name) {
    return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace

void SymbolTable::check_new_name(const std::string& name) const {
    if (!valid_identifier(name)) throw Error("invalid identifier '" + name + "'");
    if (reserved(name)) throw Error("'" + name + "' is reserved");
    if (contains(name)) throw Error("duplicate symbol '" + name + "'");
}

SymbolTable& SymbolTable::add_coordinate(const std::string& name) {
    check_new_name(name);
    coordinates_.push_back(name);
    return *this;
}

SymbolTable& SymbolTable::add_parameter(const std::string& name, std::optional<double> value) {
    check_new_name(name);
    parameters_.push_back(name);
    if (value) values_[name] = *value;
    return *this;
}

SymbolTable& SymbolTable::bind(const std::string& name, double value) {
    if (!is_parameter(name)) throw UnknownSymbolError(name);
    values_[name] = value;
    return *this;
}

bool SymbolTable::contains(const std::string& name) const { return is_coordinate(name) || is_parameter(name); }
bool SymbolTable::is_coordinate(const std::string& name) const { return contains_name(coordinates_, name); }
bool SymbolTable::is_parameter(const std::string& name) const { return contains_name(parameters_, name); }

std::optional<double> SymbolTable::binding(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

std::map<std::string, double> SymbolTable::bindings() const { return values_; }

}  // namespace geoquant
