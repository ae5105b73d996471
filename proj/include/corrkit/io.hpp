#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corrkit/types.hpp"

namespace corrkit {

enum class DataFormat { csv, jsonl };

/// Picks jsonl for `.jsonl`/`.ndjson` extensions, csv otherwise.
DataFormat format_from_path(const std::filesystem::path& path);
DataFormat parse_format(std::string_view name);

/// Cells as read from disk, before numeric conversion. CSV dialect: comma
/// separator, first row is the header, '.' decimal point, no quoting.
/// JSONL: one object per line; the first record fixes the column order.
class RawTable {
public:
    RawTable(std::vector<std::string> header, std::vector<std::vector<std::string>> rows);

    const std::vector<std::string>& header() const noexcept { return header_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    bool has_column(std::string_view name) const noexcept;

    /// Parses one column as reals. Throws MissingColumn, ParseError(row, column)
    /// or NonFiniteValue(row); rows are 1-based, header excluded.
    std::vector<double> numeric_column(std::string_view name) const;

private:
    std::size_t index_of(std::string_view name) const;

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

RawTable read_table(std::istream& in, DataFormat format);
RawTable load_table(const std::filesystem::path& path, DataFormat format);

PairedSample load_paired(const std::filesystem::path& path, DataFormat format,
                         std::string_view x_col, std::string_view y_col);

/// Shortest decimal text that parses back to the same double.
std::string format_real(double value);

/// Writes a two-column csv with header `x_name,y_name`.
void write_paired_csv(std::ostream& out, const PairedSample& sample,
                      std::string_view x_name = "x", std::string_view y_name = "y");

}  // namespace corrkit
