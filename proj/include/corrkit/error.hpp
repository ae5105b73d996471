#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace corrkit {

enum class ErrorCode {
    FileNotFound,
    ParseError,
    MissingColumn,
    ShortSample,
    NonFiniteValue,
    EmptyInput,
    DegenerateVariance,
    UndefinedDirection,
    TooFewPoints,
    AllTied,
    ConstantX,
    ConstantY,
    SingularScatter,
    InvalidPlan,
    InvalidParams,
    InvalidArgument,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type. `row` and `column`
// are filled for ingestion errors (1-based data row, header excluded).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<std::size_t> row = std::nullopt,
          std::string column = {});

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> row() const noexcept { return row_; }
    const std::string& column() const noexcept { return column_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> row_;
    std::string column_;
};

}  // namespace corrkit
