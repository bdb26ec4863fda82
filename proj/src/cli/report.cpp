#include "geoquant/cli/report.hpp"

#include <array>
#include <openssl/evp.h>

#include "geoquant/errors.hpp"

namespace geoquant::cli {

nlohmann::json Report::to_json() const {
    nlohmann::json out;
    out["command"] = {{"name", command}, {"args", args}, {"input_digest", input_digest}};
    out["status"] = ok() ? "ok" : "error";
    out["error"] = error ? nlohmann::json(*error) : nlohmann::json(nullptr);
    out["payload"] = (ok() && payload) ? *payload : nlohmann::json(nullptr);
    out["version"] = kVersion;
    return out;
}

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 digest failed");
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int k = 0; k < length; ++k) {
        out += kHex[digest[k] >> 4];
        out += kHex[digest[k] & 0xF];
    }
    return out;
}

std::string input_digest(const std::string& command, const nlohmann::json& args,
                         const std::optional<std::string>& chart_document) {
    nlohmann::json input{{"command", command}, {"args", args}};
    input["chart"] = chart_document ? nlohmann::json(*chart_document) : nlohmann::json(nullptr);
    return sha256_hex(input.dump());
}

}  // namespace geoquant::cli
