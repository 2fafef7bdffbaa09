#pragma once

#include <ctime>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "quartic/quartic_map.hpp"
#include "quartic/search.hpp"

namespace quartic {

// All big integers travel as decimal strings: the n = 5 components already
// have 39 digits and native JSON numbers would mangle them.

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline Integer integer_from_string(const std::string& text) {
    auto value = parse_integer(text);
    if (!value)
        throw ParseError("not a decimal integer: '" + text + "'");
    return *value;
}

inline nlohmann::json tuple_to_json(const QuarticTuple& t) {
    return nlohmann::json{{"X", to_string(t.X)},
                          {"Y", to_string(t.Y)},
                          {"U", to_string(t.U)},
                          {"V", to_string(t.V)}};
}

inline QuarticTuple tuple_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw ParseError("tuple: expected an object");
    for (const char* key : {"X", "Y", "U", "V"})
        if (!j.contains(key) || !j[key].is_string())
            throw ParseError(std::string("tuple: missing string field ") + key);
    return QuarticTuple{integer_from_string(j["X"].get<std::string>()),
                        integer_from_string(j["Y"].get<std::string>()),
                        integer_from_string(j["U"].get<std::string>()),
                        integer_from_string(j["V"].get<std::string>())};
}

// source_label normally mirrors the record's source enum; the CLI overrides
// it with "both" when a record has been cross-checked against the other path.
inline nlohmann::json record_to_json(const SolutionRecord& rec, bool include_raw,
                                     const std::string& source_label) {
    nlohmann::json j{{"n", rec.n},
                     {"source", source_label},
                     {"d", to_string(rec.d)},
                     {"primitive", tuple_to_json(rec.primitive)},
                     {"canonical", tuple_to_json(rec.canonical)}};
    if (include_raw)
        j["raw"] = tuple_to_json(rec.raw);
    return j;
}

inline nlohmann::json record_to_json(const SolutionRecord& rec,
                                     bool include_raw = false) {
    return record_to_json(rec, include_raw, source_name(rec.source));
}

struct ParsedRecord {
    unsigned long n = 0;
    std::string source;
    Integer d;
    std::optional<QuarticTuple> raw;
    QuarticTuple primitive;
    QuarticTuple canonical;
};

inline ParsedRecord record_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw ParseError("record: expected an object");
    if (!j.contains("n") || !j["n"].is_number_unsigned())
        throw ParseError("record: missing n");
    if (!j.contains("source") || !j["source"].is_string())
        throw ParseError("record: missing source");
    if (!j.contains("d") || !j["d"].is_string())
        throw ParseError("record: missing d");
    if (!j.contains("primitive") || !j.contains("canonical"))
        throw ParseError("record: missing tuples");
    ParsedRecord rec;
    rec.n = j["n"].get<unsigned long>();
    rec.source = j["source"].get<std::string>();
    rec.d = integer_from_string(j["d"].get<std::string>());
    rec.primitive = tuple_from_json(j["primitive"]);
    rec.canonical = tuple_from_json(j["canonical"]);
    if (j.contains("raw"))
        rec.raw = tuple_from_json(j["raw"]);
    return rec;
}

// CSV columns: n,d,X,Y,U,V,canonical_X..canonical_V,source with the
// primitive tuple in X..V; --raw appends raw_X..raw_V.
inline std::string csv_header(bool include_raw) {
    std::string head =
        "n,d,X,Y,U,V,canonical_X,canonical_Y,canonical_U,canonical_V,source";
    if (include_raw)
        head += ",raw_X,raw_Y,raw_U,raw_V";
    return head;
}

inline std::string record_to_csv(const SolutionRecord& rec, bool include_raw,
                                 const std::string& source_label) {
    std::ostringstream out;
    out << rec.n << ',' << to_string(rec.d) << ',' << to_string(rec.primitive.X)
        << ',' << to_string(rec.primitive.Y) << ',' << to_string(rec.primitive.U)
        << ',' << to_string(rec.primitive.V) << ',' << to_string(rec.canonical.X)
        << ',' << to_string(rec.canonical.Y) << ',' << to_string(rec.canonical.U)
        << ',' << to_string(rec.canonical.V) << ',' << source_label;
    if (include_raw)
        out << ',' << to_string(rec.raw.X) << ',' << to_string(rec.raw.Y) << ','
            << to_string(rec.raw.U) << ',' << to_string(rec.raw.V);
    return out.str();
}

inline ParsedRecord record_from_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ','))
        fields.push_back(field);
    if (fields.size() != 11 && fields.size() != 15)
        throw ParseError("csv record: expected 11 or 15 fields");
    ParsedRecord rec;
    try {
        rec.n = std::stoul(fields[0]);
    } catch (const std::exception&) {
        throw ParseError("csv record: bad n field");
    }
    rec.d = integer_from_string(fields[1]);
    rec.primitive = QuarticTuple{
        integer_from_string(fields[2]), integer_from_string(fields[3]),
        integer_from_string(fields[4]), integer_from_string(fields[5])};
    rec.canonical = QuarticTuple{
        integer_from_string(fields[6]), integer_from_string(fields[7]),
        integer_from_string(fields[8]), integer_from_string(fields[9])};
    rec.source = fields[10];
    if (fields.size() == 15)
        rec.raw = QuarticTuple{
            integer_from_string(fields[11]), integer_from_string(fields[12]),
            integer_from_string(fields[13]), integer_from_string(fields[14])};
    return rec;
}

inline nlohmann::json report_to_json(const SearchReport& report) {
    nlohmann::json tuples = nlohmann::json::array();
    for (const QuarticTuple& t : report.nondegenerate_primitives)
        tuples.push_back(tuple_to_json(t));
    return nlohmann::json{{"bound", report.bound},
                          {"nondegenerate_primitives", tuples},
                          {"degenerate_count", report.degenerate_count},
                          {"elapsed_seconds", report.elapsed.count()}};
}

inline std::string iso8601_utc_now() {
    std::time_t now = std::time(nullptr);
    std::tm parts{};
    gmtime_r(&now, &parts);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
    return buffer;
}

}  // namespace quartic
