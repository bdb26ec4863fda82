#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace geoquant::cli {

inline constexpr const char* kVersion = "geoquant 0.1.0";

/// Process exit codes; golden tests depend on these values.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitInput = 2,
    kExitNotQuantizable = 3,
    kExitGeometry = 4,
    kExitVerification = 5,
};

struct Report {
    std::string command;
    nlohmann::json args = nlohmann::json::object();
    std::string input_digest;
    std::optional<nlohmann::json> payload;
    std::optional<std::string> error;

    bool ok() const noexcept { return !error.has_value(); }
    /// Keys come out sorted, so equal reports serialize to equal bytes.
    nlohmann::json to_json() const;
};

std::string sha256_hex(std::string_view data);

/// Digest over the command name, its arguments and the chart document text.
std::string input_digest(const std::string& command, const nlohmann::json& args,
                         const std::optional<std::string>& chart_document);

}  // namespace geoquant::cli
