#pragma once

// Text matrix files: first line n, then n rows of n 1-based entries.
// Row x column y holds x*y in the right convention; left-convention files
// (x*y stored at row y column x) are transposed on load.

#include <cstdint>
#include <string>
#include <string_view>

#include "quandle/core.hpp"

namespace quandle {

enum class Convention { right, left };

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_, column_;
};

class MissingFile : public Error {
public:
    using Error::Error;
};

/// 0-based raw table, before any validation.
RawTable parse_matrix(std::string_view text, Convention convention = Convention::right);

QuandleTable parse_quandle(std::string_view text, Convention convention = Convention::right, Mode mode = Mode::rack);

std::string read_file(const std::string& path);

QuandleTable load(const std::string& path, Convention convention = Convention::right, Mode mode = Mode::rack);

/// Canonical text form in the right convention.
std::string emit(const QuandleTable& X);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string digest(std::string_view bytes);

}  // namespace quandle
