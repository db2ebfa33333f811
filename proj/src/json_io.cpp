#include "sigforge/json_io.hpp"

#include <fstream>

namespace sigforge {

Cyclotomic parse_omega(const std::string& text)
{
    auto fail = [&]() -> void {
        throw std::invalid_argument("parse_omega: expected zeta(m) or zeta(m)^p, got '" + text +
                                    "'");
    };
    const std::string prefix = "zeta(";
    if (text.rfind(prefix, 0) != 0) fail();
    size_t close = text.find(')', prefix.size());
    if (close == std::string::npos) fail();
    long m = 0, p = 1;
    try {
        size_t used = 0;
        std::string inner = text.substr(prefix.size(), close - prefix.size());
        m = std::stol(inner, &used);
        if (used != inner.size()) fail();
        if (close + 1 < text.size()) {
            if (text[close + 1] != '^') fail();
            std::string exp = text.substr(close + 2);
            p = std::stol(exp, &used);
            if (used != exp.size()) fail();
        }
    } catch (const std::logic_error&) {
        fail();
    }
    if (m < 1) fail();
    return Cyclotomic::root_of_unity(m, p);
}

Json matrix_to_json(const CycloMatrix& m)
{
    Json rows = Json::array();
    for (long i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

CycloMatrix matrix_from_json(const Json& j)
{
    if (!j.is_array()) throw IoError("matrix_from_json: expected an array of rows");
    long n = static_cast<long>(j.size());
    CycloMatrix m(n);
    for (long i = 0; i < n; ++i) {
        if (!j[i].is_array() || static_cast<long>(j[i].size()) != n)
            throw IoError("matrix_from_json: matrix is not square");
        for (long k = 0; k < n; ++k) {
            const Json& cell = j[i][k];
            if (cell.is_string())
                m.at(i, k) = Cyclotomic::parse(cell.get<std::string>());
            else if (cell.is_number_integer())
                m.at(i, k) = Cyclotomic(cell.get<long>());
            else
                throw IoError("matrix_from_json: entries must be cyclo strings or integers");
        }
    }
    return m;
}

Json seifert_to_json(const SeifertMatrix& v)
{
    Json rows = Json::array();
    for (const auto& row : v.rows()) rows.push_back(row);
    return rows;
}

SeifertMatrix seifert_from_json(const Json& j)
{
    if (j.is_string()) return builtin_knot(j.get<std::string>());
    if (j.is_object() && j.contains("matrix")) return seifert_from_json(j.at("matrix"));
    if (!j.is_array()) throw IoError("seifert_from_json: expected a name or integer rows");
    std::vector<std::vector<long>> rows;
    for (const auto& r : j) rows.push_back(r.get<std::vector<long>>());
    return SeifertMatrix(std::move(rows));
}

Json script_to_json(const InfectionScript& s)
{
    Json records = Json::array();
    for (const auto& r : s.records())
        records.push_back(Json{{"depth", r.depth}, {"knot", seifert_to_json(r.knot)}});
    return Json{{"genus", s.genus()}, {"records", std::move(records)}};
}

InfectionScript script_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("genus") || !j.contains("records"))
        throw IoError("script_from_json: expected {genus, records}");
    std::vector<InfectionRecord> records;
    for (const auto& r : j.at("records"))
        records.emplace_back(r.at("depth").get<long>(), seifert_from_json(r.at("knot")));
    return InfectionScript(j.at("genus").get<long>(), std::move(records));
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace sigforge
