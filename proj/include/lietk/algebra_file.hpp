#pragma once

#include "lietk/errors.hpp"
#include "lietk/lie_algebra.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lietk {

/// Malformed algebra file. Line and column are 1-based; column 0 means the
/// whole line (or, for JSON, that the position is unknown).
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column)
    {
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct AlgebraFile {
    static constexpr int current_format_version = 1;

    int format_version = current_format_version;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<BracketRecord> brackets;
    std::vector<Vector> toral;  // empty when no toral block was given

    std::shared_ptr<const LieAlgebra> algebra() const;
};

/// Plain text:
///
///     dim 3
///     labels e f h
///     bracket 0 1 -> 2:1
///     bracket 0 2 -> 0:-2
///     toral 0 0 1
///
/// Blank lines and `#` comments are ignored. A document starting with `{` is
/// read as JSON with the same fields ("dim", "labels", "brackets" as
/// [i, j, k, "p/q"] rows, "toral" as rows of strings).
AlgebraFile parse_algebra_file(std::string_view text);
AlgebraFile parse_algebra_text(std::string_view text);
AlgebraFile parse_algebra_json(std::string_view text);

std::string to_text(const AlgebraFile& file);
std::string to_json_text(const AlgebraFile& file);

/// Sorted records of `algebra` (i < j, nonzero coefficients) with the given toral rows.
AlgebraFile make_algebra_file(const LieAlgebra& algebra, const std::vector<Vector>& toral);

/// FNV-1a over the raw bytes, rendered as "fnv1a64:<16 hex digits>".
std::string content_digest(std::string_view bytes);

}  // namespace lietk
