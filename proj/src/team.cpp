#include "teamind/team.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include <json.hpp>

namespace teamind {

std::size_t Schema::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < attributes.size(); ++i) {
        if (attributes[i] == name) return i;
    }
    throw InputError("unknown attribute: " + name);
}

Team::Team(Schema schema, std::vector<std::vector<std::string>> rows)
    : schema_(std::move(schema)) {
    std::unordered_set<std::string> seen_names;
    for (const auto& name : schema_.attributes) {
        if (name.empty()) {
            throw InputError("empty attribute name in schema");
        }
        if (!seen_names.insert(name).second) {
            throw InputError("duplicate attribute name: " + name);
        }
    }
    std::unordered_set<std::string> seen_rows;
    rows_.reserve(rows.size());
    for (auto& row : rows) {
        if (row.size() != schema_.attributes.size()) {
            throw InputError("row has " + std::to_string(row.size()) + " values, expected " +
                             std::to_string(schema_.attributes.size()));
        }
        std::string key;
        for (const auto& v : row) {
            key += std::to_string(v.size());
            key += ':';
            key += v;
        }
        if (seen_rows.insert(std::move(key)).second) {
            rows_.push_back(std::move(row));
        }
    }
}

std::vector<std::size_t> Team::resolve(const AttributeTuple& tuple) const {
    std::vector<std::size_t> cols;
    cols.reserve(tuple.names.size());
    for (const auto& name : tuple.names) {
        cols.push_back(schema_.index_of(name));
    }
    return cols;
}

std::string Team::project_key(std::size_t i, const std::vector<std::size_t>& cols) const {
    std::string key;
    for (std::size_t c : cols) {
        const std::string& v = rows_[i][c];
        key += std::to_string(v.size());
        key += ':';
        key += v;
    }
    return key;
}

std::vector<std::string> Team::project(std::size_t i,
                                       const std::vector<std::size_t>& cols) const {
    std::vector<std::string> out;
    out.reserve(cols.size());
    for (std::size_t c : cols) {
        out.push_back(rows_[i][c]);
    }
    return out;
}

namespace {

struct CsvRecord {
    std::size_t line;
    std::vector<std::string> fields;
};

// RFC-4180 style records: comma separated, double-quote escaping, CRLF or
// LF line ends, quoted fields may span lines. Each record carries the line
// it starts on.
std::vector<CsvRecord> parse_csv(const std::string& text) {
    std::vector<CsvRecord> records;
    std::size_t i = 0;
    std::size_t line = 1;
    const std::size_t n = text.size();
    while (i < n) {
        std::size_t record_line = line;
        std::vector<std::string> fields;
        std::string field;
        bool done_record = false;
        while (!done_record) {
            if (i < n && text[i] == '"') {
                ++i;
                while (true) {
                    if (i >= n) {
                        throw FormatError("unterminated quoted field", record_line);
                    }
                    char ch = text[i];
                    if (ch == '"') {
                        if (i + 1 < n && text[i + 1] == '"') {
                            field += '"';
                            i += 2;
                        } else {
                            ++i;
                            break;
                        }
                    } else {
                        if (ch == '\n') ++line;
                        field += ch;
                        ++i;
                    }
                }
            } else {
                while (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
                    field += text[i];
                    ++i;
                }
            }
            if (i < n && text[i] == ',') {
                fields.push_back(std::move(field));
                field.clear();
                ++i;
                continue;
            }
            fields.push_back(std::move(field));
            field.clear();
            if (i < n && text[i] == '\r') ++i;
            if (i < n && text[i] == '\n') {
                ++i;
                ++line;
            }
            done_record = true;
        }
        // A lone empty trailing line is not a record.
        if (fields.size() == 1 && fields[0].empty() && i >= n) {
            break;
        }
        records.push_back(CsvRecord{record_line, std::move(fields)});
    }
    return records;
}

Team team_from_csv(const std::string& text) {
    std::vector<CsvRecord> records = parse_csv(text);
    if (records.empty() ||
        (records[0].fields.size() == 1 && records[0].fields[0].empty())) {
        throw FormatError("empty header", 1);
    }
    Schema schema{records[0].fields};
    std::unordered_set<std::string> seen;
    for (const auto& name : schema.attributes) {
        if (name.empty()) {
            throw FormatError("empty attribute name in header", 1);
        }
        if (!seen.insert(name).second) {
            throw FormatError("duplicate attribute name: " + name, 1);
        }
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size() - 1);
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].fields.size() != schema.attributes.size()) {
            throw FormatError("row has " + std::to_string(records[r].fields.size()) +
                                  " fields, expected " +
                                  std::to_string(schema.attributes.size()),
                              records[r].line);
        }
        rows.push_back(std::move(records[r].fields));
    }
    return Team(std::move(schema), std::move(rows));
}

Team team_from_json(const std::string& text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw FormatError("expected a JSON array of objects");
    }
    Schema schema;
    std::vector<std::vector<std::string>> rows;
    for (std::size_t idx = 0; idx < doc.size(); ++idx) {
        const auto& obj = doc[idx];
        if (!obj.is_object()) {
            throw FormatError("element " + std::to_string(idx) + " is not an object");
        }
        if (idx == 0) {
            for (auto it = obj.begin(); it != obj.end(); ++it) {
                schema.attributes.push_back(it.key());
            }
        }
        if (obj.size() != schema.attributes.size()) {
            throw FormatError("element " + std::to_string(idx) + " has " +
                              std::to_string(obj.size()) + " keys, expected " +
                              std::to_string(schema.attributes.size()));
        }
        std::vector<std::string> row;
        row.reserve(schema.attributes.size());
        for (const auto& name : schema.attributes) {
            auto it = obj.find(name);
            if (it == obj.end()) {
                throw FormatError("element " + std::to_string(idx) + " is missing key " + name);
            }
            if (!it->is_string()) {
                throw FormatError("element " + std::to_string(idx) + " key " + name +
                                  " is not a string");
            }
            row.push_back(it->get<std::string>());
        }
        rows.push_back(std::move(row));
    }
    return Team(std::move(schema), std::move(rows));
}

}  // namespace

Team load_team(const std::string& text, TeamFormat format) {
    return format == TeamFormat::csv ? team_from_csv(text) : team_from_json(text);
}

Team load_team_file(const std::string& path, TeamFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_team(buf.str(), format);
}

FinitePartitionAlgebra kernel_algebra(const Team& team, const AttributeTuple& x) {
    std::vector<std::size_t> cols = team.resolve(x);
    std::unordered_map<std::string, std::size_t> fiber_of;
    std::vector<RowSet> blocks;
    const std::size_t n = team.row_count();
    for (std::size_t i = 0; i < n; ++i) {
        std::string key = team.project_key(i, cols);
        auto [it, inserted] = fiber_of.try_emplace(std::move(key), blocks.size());
        if (inserted) {
            blocks.emplace_back(n);
        }
        blocks[it->second].set(i);
    }
    return FinitePartitionAlgebra(team.universe(), std::move(blocks));
}

}  // namespace teamind
