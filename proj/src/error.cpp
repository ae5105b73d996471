#include "corrkit/error.hpp"

namespace corrkit {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::FileNotFound: return "FileNotFound";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::MissingColumn: return "MissingColumn";
        case ErrorCode::ShortSample: return "ShortSample";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::DegenerateVariance: return "DegenerateVariance";
        case ErrorCode::UndefinedDirection: return "UndefinedDirection";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::AllTied: return "AllTied";
        case ErrorCode::ConstantX: return "ConstantX";
        case ErrorCode::ConstantY: return "ConstantY";
        case ErrorCode::SingularScatter: return "SingularScatter";
        case ErrorCode::InvalidPlan: return "InvalidPlan";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> row, std::string column)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      row_(row),
      column_(std::move(column)) {}

}  // namespace corrkit
