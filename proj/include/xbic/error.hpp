#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace xbic {

/// Failure kinds raised by the library. Each maps onto one of three coarse
/// categories (configuration, data, numerical) which the CLI turns into exit
/// codes.
enum class Errc {
    FileNotFound,
    MalformedRow,
    NonPositivePrice,
    UnsortedDates,
    EmptyIntersection,
    SeriesTooShort,
    DimensionMismatch,
    RankDeficient,
    DomainError,
    DegenerateSeries,
    VarianceCollapse,
    BadExponent,
    DegenerateWindow,
    LagTooLarge,
    InvalidArgument,
    IoError,
};

enum class ErrorCategory { Config, Data, Numerical };

constexpr std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::FileNotFound: return "FileNotFound";
        case Errc::MalformedRow: return "MalformedRow";
        case Errc::NonPositivePrice: return "NonPositivePrice";
        case Errc::UnsortedDates: return "UnsortedDates";
        case Errc::EmptyIntersection: return "EmptyIntersection";
        case Errc::SeriesTooShort: return "SeriesTooShort";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::RankDeficient: return "RankDeficient";
        case Errc::DomainError: return "DomainError";
        case Errc::DegenerateSeries: return "DegenerateSeries";
        case Errc::VarianceCollapse: return "VarianceCollapse";
        case Errc::BadExponent: return "BadExponent";
        case Errc::DegenerateWindow: return "DegenerateWindow";
        case Errc::LagTooLarge: return "LagTooLarge";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

constexpr ErrorCategory category_of(Errc code) noexcept {
    switch (code) {
        case Errc::BadExponent:
        case Errc::InvalidArgument:
            return ErrorCategory::Config;
        case Errc::FileNotFound:
        case Errc::MalformedRow:
        case Errc::NonPositivePrice:
        case Errc::UnsortedDates:
        case Errc::EmptyIntersection:
        case Errc::SeriesTooShort:
        case Errc::DimensionMismatch:
            return ErrorCategory::Data;
        default:
            return ErrorCategory::Numerical;
    }
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::optional<std::size_t> line = std::nullopt)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), line_(line) {}

    Errc code() const noexcept { return code_; }
    ErrorCategory category() const noexcept { return category_of(code_); }

    /// 1-based input line for row-level ingest failures.
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    Errc code_;
    std::optional<std::size_t> line_;
};

}  // namespace xbic
