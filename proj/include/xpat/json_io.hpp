#pragma once

#include "xpat/explorer.hpp"

#include <json.hpp>

#include <string>

namespace xpat {

struct GraphIOError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VersionError : GraphIOError {
    using GraphIOError::GraphIOError;
};
struct CorruptFileError : GraphIOError {
    using GraphIOError::GraphIOError;
};

// Polynomial: list of [coefficient (decimal string), exponent vector], terms
// in graded-lex order (leading term first).
nlohmann::json polyToJson(const Polynomial& p);
Polynomial polyFromJson(const nlohmann::json& j, int nvars = -1);

nlohmann::json rfToJson(const RationalFunction& f);
RationalFunction rfFromJson(const nlohmann::json& j);

nlohmann::json valueToJson(const SemifieldValue& v);
SemifieldValue valueFromJson(const nlohmann::json& j);

// Seed: {"B": row-major ints, "D": ints, "x": [values], "a": optional}
nlohmann::json xseedToJson(const XSeed& s);
XSeed xseedFromJson(const nlohmann::json& j);
nlohmann::json aseedToJson(const ASeed& s);
ASeed aseedFromJson(const nlohmann::json& j);

constexpr int kGraphSchemaVersion = 1;

nlohmann::json graphToJson(const ExchangeGraph& g);
ExchangeGraph graphFromJson(const nlohmann::json& j);

void saveGraph(const ExchangeGraph& g, const std::string& path);
ExchangeGraph loadGraph(const std::string& path);

// DOT rendering: nodes labeled by key prefix, edges by direction.
std::string graphToDot(const ExchangeGraph& g);

} // namespace xpat
