#pragma once

#include <string>

#include <json.hpp>

#include "hypercurv/identities.hpp"

namespace hypercurv {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

/// Serializes with every floating-point number printed to 17 significant
/// digits; non-finite numbers become the strings "nan", "inf", "-inf".
std::string dump_json(const Json& j, int indent = 2);

Json to_json(const ShapeSpec& spec);
Json to_json(const IdentityReport& report);
Json to_json(const GaussBonnetConstants& constants);
Json to_json(const CalibrationResult& result);

/// Parses the constants file {"n": 4, "k-independent": true, "c": [c1, c2]}.
GaussBonnetConstants constants_from_json(const Json& j);
GaussBonnetConstants read_constants_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hypercurv
