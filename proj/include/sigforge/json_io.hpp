#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "sigforge/cylinders.hpp"
#include "sigforge/hermitian.hpp"

namespace sigforge {

using Json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root-of-unity flag grammar: "zeta(m)" or "zeta(m)^p" with integer p.
Cyclotomic parse_omega(const std::string& text);

// Matrix exchange format: JSON array-of-arrays of cyclotomic serializations.
Json matrix_to_json(const CycloMatrix& m);
CycloMatrix matrix_from_json(const Json& j);

// Seifert matrices ingest from integer arrays or a built-in name.
Json seifert_to_json(const SeifertMatrix& v);
SeifertMatrix seifert_from_json(const Json& j);

// Script format: {"genus": g, "records": [{"depth": n, "knot": name-or-matrix}]}.
Json script_to_json(const InfectionScript& s);
InfectionScript script_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace sigforge
