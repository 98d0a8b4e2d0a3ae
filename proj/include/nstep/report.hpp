#pragma once

// Sweep reports: canonical JSON, flat CSV, and an aligned text table.
//
// Big integers are always written as decimal strings. Field order is fixed,
// so parsing an emitted JSON report and dumping it again reproduces the same
// bytes. The only non-deterministic fields live under "timings_ms".

#include "nstep/bigint.hpp"
#include "nstep/construction.hpp"
#include "nstep/identities.hpp"
#include "nstep/sequence.hpp"
#include "nstep/sweep.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nstep {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = "nstep 1.0.0";

inline Json to_json(const IdentityCase& id) {
    Json j;
    j["kind"] = kind_name(id.kind);
    j["n"] = id.n;
    j["r"] = id.r;
    if (id.s) {
        j["s"] = *id.s;
    }
    if (id.p) {
        j["p"] = *id.p;
    }
    if (id.q) {
        j["q"] = *id.q;
    }
    j["convention"] = convention_name(id.conv);
    return j;
}

inline Json to_json(const VerificationRecord& rec) {
    Json j;
    Json c = to_json(rec.id);
    if (!rec.inputs.empty()) {
        c["inputs"] = rec.inputs;
    }
    j["case"] = std::move(c);
    j["lhs"] = to_decimal(rec.lhs);
    j["rhs"] = to_decimal(rec.rhs);
    j["pass"] = rec.pass;
    return j;
}

inline Json to_json(const Prop1Entry& entry) {
    const Prop1Record& rec = entry.record;
    Json j;
    j["case"] = Json{{"kind", "prop1"}, {"n", rec.n}, {"r", rec.r}, {"trial", entry.trial},
                     {"matrix", entry.matrix}, {"deleted", rec.deleted}};
    j["lhs"] = to_decimal(rec.minor_value);
    j["rhs"] = to_decimal(rec.rhs);
    j["pass"] = rec.pass;
    j["factors"] = Json{{"sign", rec.sign}, {"detQ", to_decimal(rec.detQ)}, {"detA", to_decimal(rec.detA)}};
    return j;
}

template <class Record>
Json records_to_json(const std::vector<Record>& records) {
    Json arr = Json::array();
    for (const auto& rec : records) {
        arr.push_back(to_json(rec));
    }
    return arr;
}

/// Assembles {version, command, params, records, summary, timings_ms}.
/// `timings` maps phase name to milliseconds.
inline Json make_report(std::string_view command, Json params, Json records,
                        const std::vector<std::pair<std::string, double>>& timings) {
    std::size_t passed = 0;
    for (const auto& rec : records) {
        passed += rec.at("pass").get<bool>() ? 1 : 0;
    }
    Json report;
    report["version"] = kVersion;
    report["command"] = command;
    report["params"] = std::move(params);
    const std::size_t total = records.size();
    report["records"] = std::move(records);
    report["summary"] = Json{{"total", total}, {"passed", passed}, {"failed", total - passed}};
    Json t = Json::object();
    for (const auto& [phase, ms] : timings) {
        t[phase] = ms;
    }
    report["timings_ms"] = std::move(t);
    return report;
}

inline bool report_all_pass(const Json& report) { return report.at("summary").at("failed").get<std::size_t>() == 0; }

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline std::string scalar_text(const Json& v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "true" : "false";
    }
    if (v.is_array()) {
        std::string out;
        for (const auto& e : v) {
            out += (out.empty() ? "" : " ") + scalar_text(e);
        }
        return out;
    }
    if (v.is_null()) {
        return "";
    }
    return v.dump();
}

// One flat row per record: case fields, then every other field; nested
// objects are flattened with their own keys.
inline std::vector<std::pair<std::string, std::string>> flatten_record(const Json& rec) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [key, value] : rec.items()) {
        if (value.is_object()) {
            for (const auto& [inner, inner_value] : value.items()) {
                out.emplace_back(inner, scalar_text(inner_value));
            }
        } else {
            out.emplace_back(key, scalar_text(value));
        }
    }
    return out;
}

struct FlatTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

inline FlatTable flatten_records(const Json& records) {
    FlatTable table;
    std::vector<std::vector<std::pair<std::string, std::string>>> flat;
    for (const auto& rec : records) {
        flat.push_back(flatten_record(rec));
        for (const auto& [key, value] : flat.back()) {
            if (std::find(table.columns.begin(), table.columns.end(), key) == table.columns.end()) {
                table.columns.push_back(key);
            }
        }
    }
    for (const auto& fields : flat) {
        std::vector<std::string> row(table.columns.size());
        for (const auto& [key, value] : fields) {
            const auto at = std::find(table.columns.begin(), table.columns.end(), key) - table.columns.begin();
            row[static_cast<std::size_t>(at)] = value;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n;") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

// Long integers are shortened to "1234567890...(512 digits)" in tables.
inline std::string abbreviate(const std::string& cell, std::size_t max_width = 32) {
    if (cell.size() <= max_width) {
        return cell;
    }
    return cell.substr(0, 12) + "...(" + std::to_string(cell.size()) + " chars)";
}

}  // namespace detail

inline std::string records_to_csv(const Json& records) {
    const auto table = detail::flatten_records(records);
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out += (c ? "," : "") + detail::csv_escape(table.columns[c]);
    }
    out += "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += (c ? "," : "") + detail::csv_escape(row[c]);
        }
        out += "\n";
    }
    return out;
}

inline std::string records_to_table(const Json& records) {
    auto table = detail::flatten_records(records);
    std::vector<std::size_t> width(table.columns.size());
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        width[c] = table.columns[c].size();
        for (auto& row : table.rows) {
            row[c] = detail::abbreviate(row[c]);
            width[c] = std::max(width[c], row[c].size());
        }
    }
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) {
                out += "  ";
            }
            out += cells[c] + std::string(width[c] - cells[c].size(), ' ');
        }
        while (!out.empty() && out.back() == ' ') {
            out.pop_back();
        }
        return out + "\n";
    };
    std::string out = line(table.columns);
    for (const auto& row : table.rows) {
        out += line(row);
    }
    return out;
}

/// Table rendering of a whole report: records followed by the summary line.
inline std::string report_to_table(const Json& report) {
    const Json& summary = report.at("summary");
    std::string out = records_to_table(report.at("records"));
    out += "total " + summary.at("total").dump() + ", passed " + summary.at("passed").dump() + ", failed " +
           summary.at("failed").dump() + "\n";
    for (const auto& [phase, ms] : report.at("timings_ms").items()) {
        char buffer[64];
        std::snprintf(buffer, sizeof buffer, "%.3f", ms.get<double>());
        out += "time " + phase + ": " + buffer + " ms\n";
    }
    return out;
}

inline Json to_json(const std::vector<ProbeCell>& cells) {
    Json arr = Json::array();
    for (const auto& cell : cells) {
        arr.push_back(Json{{"family", kind_name(cell.family)},
                           {"convention", cell.convention},
                           {"n", cell.n},
                           {"total", cell.total},
                           {"passed", cell.passed},
                           {"all_pass", cell.total == cell.passed}});
    }
    return arr;
}

}  // namespace nstep
