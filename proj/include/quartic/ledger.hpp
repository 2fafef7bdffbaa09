#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quartic/quartic_map.hpp"
#include "quartic/serialize.hpp"

namespace quartic {

// Append-only solution ledger: one JSON object per line, UTF-8, no BOM,
// deduplicated on the canonical tuple.  Entries are verified when written
// and re-verified on audit, so a tampered file cannot pass silently.

class LedgerIoError : public std::runtime_error {
  public:
    explicit LedgerIoError(const std::string& what) : std::runtime_error(what) {}
};

class VerificationError : public std::runtime_error {
  public:
    explicit VerificationError(const std::string& what)
        : std::runtime_error(what) {}
};

struct LedgerEntry {
    QuarticTuple canonical;
    std::optional<unsigned long> n;  // generator multiple when known
    Integer d;
    std::string source;
    std::string timestamp;
};

inline std::string ledger_key(const QuarticTuple& t) {
    return to_string(t.X) + "|" + to_string(t.Y) + "|" + to_string(t.U) + "|" +
           to_string(t.V);
}

inline nlohmann::json entry_to_json(const LedgerEntry& entry) {
    nlohmann::json j{{"X", to_string(entry.canonical.X)},
                     {"Y", to_string(entry.canonical.Y)},
                     {"U", to_string(entry.canonical.U)},
                     {"V", to_string(entry.canonical.V)},
                     {"d", to_string(entry.d)},
                     {"source", entry.source},
                     {"timestamp", entry.timestamp}};
    if (entry.n)
        j["n"] = *entry.n;
    return j;
}

inline LedgerEntry entry_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw ParseError("ledger entry: expected an object");
    for (const char* key : {"X", "Y", "U", "V", "d"})
        if (!j.contains(key) || !j[key].is_string())
            throw ParseError(std::string("ledger entry: missing field ") + key);
    LedgerEntry entry;
    entry.canonical =
        QuarticTuple{integer_from_string(j["X"].get<std::string>()),
                     integer_from_string(j["Y"].get<std::string>()),
                     integer_from_string(j["U"].get<std::string>()),
                     integer_from_string(j["V"].get<std::string>())};
    entry.d = integer_from_string(j["d"].get<std::string>());
    if (j.contains("n")) {
        if (!j["n"].is_number_unsigned())
            throw ParseError("ledger entry: n must be a nonnegative number");
        entry.n = j["n"].get<unsigned long>();
    }
    entry.source = j.value("source", std::string());
    entry.timestamp = j.value("timestamp", std::string());
    return entry;
}

inline LedgerEntry entry_from_record(const SolutionRecord& rec,
                                     const std::string& source_label,
                                     std::string timestamp) {
    return LedgerEntry{rec.canonical, rec.n, rec.d, source_label,
                       std::move(timestamp)};
}

// Reads every entry; a line that is not valid JSON or not a valid entry
// raises ParseError (the CLI maps that to the malformed-file exit code).
inline std::vector<LedgerEntry> ledger_read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw LedgerIoError("cannot open ledger: " + path.string());
    std::vector<LedgerEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw ParseError("ledger line " + std::to_string(lineno) +
                             ": invalid JSON");
        try {
            entries.push_back(entry_from_json(j));
        } catch (const ParseError& err) {
            throw ParseError("ledger line " + std::to_string(lineno) + ": " +
                             err.what());
        }
    }
    return entries;
}

struct AppendResult {
    std::size_t appended = 0;
    std::size_t duplicates = 0;
};

// Verifies every incoming entry (equation holds, tuple is in canonical
// form), then appends the ones whose canonical tuple is not already present.
// Append is a set union: re-appending the same batch is a no-op.
inline AppendResult ledger_append(const std::filesystem::path& path,
                                  const std::vector<LedgerEntry>& incoming) {
    for (const LedgerEntry& entry : incoming) {
        if (!verify(entry.canonical))
            throw VerificationError("refusing to append " +
                                    ledger_key(entry.canonical) +
                                    ": fails the quartic equation");
        if (!(canonicalize(entry.canonical) == entry.canonical))
            throw VerificationError("refusing to append " +
                                    ledger_key(entry.canonical) +
                                    ": tuple is not in canonical form");
    }
    std::map<std::string, bool> seen;
    if (std::filesystem::exists(path))
        for (const LedgerEntry& entry : ledger_read(path))
            seen[ledger_key(entry.canonical)] = true;

    std::ofstream out(path, std::ios::app);
    if (!out)
        throw LedgerIoError("cannot open ledger for append: " + path.string());
    AppendResult result;
    for (const LedgerEntry& entry : incoming) {
        std::string key = ledger_key(entry.canonical);
        if (seen[key]) {
            ++result.duplicates;
            continue;
        }
        seen[key] = true;
        out << entry_to_json(entry).dump() << '\n';
        ++result.appended;
    }
    if (!out)
        throw LedgerIoError("write failed: " + path.string());
    return result;
}

struct AuditResult {
    std::size_t entries = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Re-verifies every stored entry and the dedup invariant.
inline AuditResult ledger_audit(const std::filesystem::path& path) {
    AuditResult result;
    std::map<std::string, bool> seen;
    for (const LedgerEntry& entry : ledger_read(path)) {
        ++result.entries;
        std::string key = ledger_key(entry.canonical);
        if (!verify(entry.canonical))
            result.failures.push_back(key + ": fails the quartic equation");
        else if (!(canonicalize(entry.canonical) == entry.canonical))
            result.failures.push_back(key + ": not in canonical form");
        if (seen[key])
            result.failures.push_back(key + ": duplicate entry");
        seen[key] = true;
    }
    return result;
}

}  // namespace quartic
