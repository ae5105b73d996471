#include "corrkit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "corrkit/error.hpp"

namespace corrkit {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        fields.emplace_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

RawTable read_csv(std::istream& in) {
    std::string line;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        if (!trim(line).empty()) {
            header = split_csv_line(line);
            break;
        }
    }
    if (header.empty()) {
        throw Error(ErrorCode::ParseError, "csv input has no header row");
    }
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            const std::size_t row = rows.size() + 1;
            throw Error(ErrorCode::ParseError,
                        "row " + std::to_string(row) + " has " + std::to_string(fields.size()) +
                            " fields, header has " + std::to_string(header.size()),
                        row);
        }
        rows.push_back(std::move(fields));
    }
    return RawTable(std::move(header), std::move(rows));
}

std::string cell_text(const nlohmann::ordered_json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number()) return value.dump();
    return {};  // null, bool, arrays and objects do not parse as reals
}

RawTable read_jsonl(std::istream& in) {
    std::string line;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const std::size_t row = rows.size() + 1;
        nlohmann::ordered_json record;
        try {
            record = nlohmann::ordered_json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorCode::ParseError, "record " + std::to_string(row) + ": " + e.what(), row);
        }
        if (!record.is_object()) {
            throw Error(ErrorCode::ParseError, "record " + std::to_string(row) + " is not an object", row);
        }
        if (header.empty()) {
            for (const auto& item : record.items()) header.push_back(item.key());
        }
        std::vector<std::string> cells;
        cells.reserve(header.size());
        for (const auto& key : header) {
            const auto it = record.find(key);
            if (it == record.end()) {
                throw Error(ErrorCode::ParseError,
                            "record " + std::to_string(row) + " lacks key '" + key + "'", row, key);
            }
            cells.push_back(cell_text(*it));
        }
        rows.push_back(std::move(cells));
    }
    if (header.empty()) {
        throw Error(ErrorCode::ParseError, "jsonl input has no records");
    }
    return RawTable(std::move(header), std::move(rows));
}

}  // namespace

DataFormat format_from_path(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    return (ext == ".jsonl" || ext == ".ndjson") ? DataFormat::jsonl : DataFormat::csv;
}

DataFormat parse_format(std::string_view name) {
    if (name == "csv") return DataFormat::csv;
    if (name == "jsonl") return DataFormat::jsonl;
    throw Error(ErrorCode::InvalidArgument, "unknown data format '" + std::string(name) + "'");
}

RawTable::RawTable(std::vector<std::string> header, std::vector<std::vector<std::string>> rows)
    : header_(std::move(header)), rows_(std::move(rows)) {}

bool RawTable::has_column(std::string_view name) const noexcept {
    return std::find(header_.begin(), header_.end(), name) != header_.end();
}

std::size_t RawTable::index_of(std::string_view name) const {
    const auto it = std::find(header_.begin(), header_.end(), name);
    if (it == header_.end()) {
        throw Error(ErrorCode::MissingColumn, "column '" + std::string(name) + "' not found", std::nullopt,
                    std::string(name));
    }
    return static_cast<std::size_t>(it - header_.begin());
}

std::vector<double> RawTable::numeric_column(std::string_view name) const {
    const std::size_t col = index_of(name);
    std::vector<double> values;
    values.reserve(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::string_view text = rows_[r][col];
        if (!text.empty() && text.front() == '+') text.remove_prefix(1);
        double value = 0.0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
            throw Error(ErrorCode::ParseError,
                        "row " + std::to_string(r + 1) + ", column '" + std::string(name) + "': '" +
                            rows_[r][col] + "' is not a real number",
                        r + 1, std::string(name));
        }
        if (!std::isfinite(value)) {
            throw Error(ErrorCode::NonFiniteValue,
                        "row " + std::to_string(r + 1) + ", column '" + std::string(name) + "' is not finite",
                        r + 1, std::string(name));
        }
        values.push_back(value);
    }
    return values;
}

RawTable read_table(std::istream& in, DataFormat format) {
    return format == DataFormat::csv ? read_csv(in) : read_jsonl(in);
}

RawTable load_table(const std::filesystem::path& path, DataFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::FileNotFound, "cannot open '" + path.string() + "'");
    }
    return read_table(in, format);
}

PairedSample load_paired(const std::filesystem::path& path, DataFormat format,
                         std::string_view x_col, std::string_view y_col) {
    const RawTable table = load_table(path, format);
    auto xs = table.numeric_column(x_col);
    auto ys = table.numeric_column(y_col);
    return PairedSample(std::move(xs), std::move(ys));
}

std::string format_real(double value) {
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, end);
}

void write_paired_csv(std::ostream& out, const PairedSample& sample,
                      std::string_view x_name, std::string_view y_name) {
    out << x_name << ',' << y_name << '\n';
    for (std::size_t i = 0; i < sample.size(); ++i) {
        out << format_real(sample.xs()[i]) << ',' << format_real(sample.ys()[i]) << '\n';
    }
    if (!out) {
        throw Error(ErrorCode::IoError, "failed writing csv output");
    }
}

}  // namespace corrkit
