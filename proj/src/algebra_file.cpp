#include "lietk/algebra_file.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace lietk {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
        }
        if (pos == line.size()) {
            break;
        }
        const std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
        }
        out.push_back({line.substr(start, pos - start), start + 1});
    }
    return out;
}

std::size_t parse_index(std::string_view text, std::size_t line, std::size_t column)
{
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw ParseError(line, column, "expected a non-negative integer, got '" + std::string(text) + "'");
    }
    return value;
}

Rational parse_coefficient(std::string_view text, std::size_t line, std::size_t column)
{
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw ParseError(line, column, "expected a rational p or p/q, got '" + std::string(text) + "'");
    }
}

void check_index(std::size_t index, std::size_t dim, std::size_t line, std::size_t column)
{
    if (index >= dim) {
        throw ParseError(line, column,
                         "index " + std::to_string(index) + " out of range for dim " + std::to_string(dim));
    }
}

}  // namespace

std::shared_ptr<const LieAlgebra> AlgebraFile::algebra() const
{
    return std::make_shared<const LieAlgebra>(dim, labels, brackets);
}

AlgebraFile parse_algebra_file(std::string_view text)
{
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            continue;
        }
        return c == '{' ? parse_algebra_json(text) : parse_algebra_text(text);
    }
    throw ParseError(1, 0, "empty algebra file");
}

AlgebraFile parse_algebra_text(std::string_view text)
{
    AlgebraFile file;
    bool have_dim = false;
    bool have_labels = false;
    std::size_t line_no = 0;
    std::size_t last_line = 0;

    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        last_line = line_no;
        const auto& keyword = tokens[0];

        if (keyword.text == "format_version") {
            if (tokens.size() != 2) {
                throw ParseError(line_no, keyword.column, "format_version takes one value");
            }
            const auto v = parse_index(tokens[1].text, line_no, tokens[1].column);
            if (v != AlgebraFile::current_format_version) {
                throw ParseError(line_no, tokens[1].column, "unsupported format_version " + std::to_string(v));
            }
            continue;
        }
        if (keyword.text == "dim") {
            if (have_dim) {
                throw ParseError(line_no, keyword.column, "dim given twice");
            }
            if (tokens.size() != 2) {
                throw ParseError(line_no, keyword.column, "dim takes one value");
            }
            file.dim = parse_index(tokens[1].text, line_no, tokens[1].column);
            if (file.dim == 0) {
                throw ParseError(line_no, tokens[1].column, "dim must be positive");
            }
            have_dim = true;
            continue;
        }
        if (!have_dim) {
            throw ParseError(line_no, keyword.column, "expected 'dim N' before '" + std::string(keyword.text) + "'");
        }

        if (keyword.text == "labels") {
            if (have_labels) {
                throw ParseError(line_no, keyword.column, "labels given twice");
            }
            if (tokens.size() != file.dim + 1) {
                throw ParseError(line_no, keyword.column,
                                 "expected " + std::to_string(file.dim) + " labels, got " +
                                     std::to_string(tokens.size() - 1));
            }
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                file.labels.emplace_back(tokens[t].text);
            }
            have_labels = true;
        } else if (keyword.text == "bracket") {
            if (tokens.size() < 5 || tokens[3].text != "->") {
                throw ParseError(line_no, keyword.column, "expected 'bracket i j -> k:p/q [k:p/q ...]'");
            }
            const auto i = parse_index(tokens[1].text, line_no, tokens[1].column);
            const auto j = parse_index(tokens[2].text, line_no, tokens[2].column);
            check_index(i, file.dim, line_no, tokens[1].column);
            check_index(j, file.dim, line_no, tokens[2].column);
            if (i >= j) {
                throw ParseError(line_no, tokens[1].column, "bracket indices must satisfy i < j");
            }
            for (std::size_t t = 4; t < tokens.size(); ++t) {
                const auto colon = tokens[t].text.find(':');
                if (colon == std::string_view::npos) {
                    throw ParseError(line_no, tokens[t].column, "expected k:p/q, got '" + std::string(tokens[t].text) + "'");
                }
                const auto k = parse_index(tokens[t].text.substr(0, colon), line_no, tokens[t].column);
                check_index(k, file.dim, line_no, tokens[t].column);
                const auto coeff =
                    parse_coefficient(tokens[t].text.substr(colon + 1), line_no, tokens[t].column + colon + 1);
                file.brackets.push_back({i, j, k, coeff});
            }
        } else if (keyword.text == "toral") {
            if (tokens.size() != file.dim + 1) {
                throw ParseError(line_no, keyword.column,
                                 "toral row needs " + std::to_string(file.dim) + " coefficients, got " +
                                     std::to_string(tokens.size() - 1));
            }
            Vector row;
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                row.push_back(parse_coefficient(tokens[t].text, line_no, tokens[t].column));
            }
            file.toral.push_back(std::move(row));
        } else {
            throw ParseError(line_no, keyword.column, "unknown keyword '" + std::string(keyword.text) + "'");
        }
    }
    if (!have_dim) {
        throw ParseError(last_line == 0 ? 1 : last_line, 0, "missing 'dim N'");
    }
    return file;
}

namespace {

using nlohmann::json;

[[noreturn]] void json_error(const std::string& what)
{
    throw ParseError(1, 0, what);
}

Rational json_rational(const json& value, const std::string& where)
{
    if (value.is_number_integer()) {
        return Rational(value.get<long>());
    }
    if (!value.is_string()) {
        json_error(where + ": rationals must be strings like \"-3/2\" (floats are rejected)");
    }
    try {
        return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument&) {
        json_error(where + ": bad rational '" + value.get<std::string>() + "'");
    }
}

std::size_t json_index(const json& value, const std::string& where)
{
    if (!value.is_number_unsigned()) {
        json_error(where + ": expected a non-negative integer");
    }
    return value.get<std::size_t>();
}

}  // namespace

AlgebraFile parse_algebra_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports a byte offset; convert it to line and column.
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t p = 0; p + 1 < e.byte && p < text.size(); ++p) {
            if (text[p] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(line, column, "invalid JSON");
    }
    if (!doc.is_object()) {
        json_error("top level must be an object");
    }
    AlgebraFile file;
    if (doc.contains("format_version")) {
        if (!doc["format_version"].is_number_integer() ||
            doc["format_version"].get<int>() != AlgebraFile::current_format_version) {
            json_error("unsupported format_version");
        }
    }
    if (!doc.contains("dim")) {
        json_error("missing \"dim\"");
    }
    file.dim = json_index(doc["dim"], "dim");
    if (file.dim == 0) {
        json_error("dim must be positive");
    }
    if (doc.contains("labels")) {
        const auto& labels = doc["labels"];
        if (!labels.is_array() || labels.size() != file.dim) {
            json_error("labels must be an array of " + std::to_string(file.dim) + " strings");
        }
        for (const auto& l : labels) {
            if (!l.is_string()) {
                json_error("labels must be strings");
            }
            file.labels.push_back(l.get<std::string>());
        }
    }
    if (doc.contains("brackets")) {
        if (!doc["brackets"].is_array()) {
            json_error("brackets must be an array");
        }
        std::size_t n = 0;
        for (const auto& row : doc["brackets"]) {
            const std::string where = "brackets[" + std::to_string(n++) + "]";
            if (!row.is_array() || row.size() != 4) {
                json_error(where + ": expected [i, j, k, \"p/q\"]");
            }
            const auto i = json_index(row[0], where);
            const auto j = json_index(row[1], where);
            const auto k = json_index(row[2], where);
            if (i >= file.dim || j >= file.dim || k >= file.dim) {
                json_error(where + ": index out of range");
            }
            if (i >= j) {
                json_error(where + ": indices must satisfy i < j");
            }
            file.brackets.push_back({i, j, k, json_rational(row[3], where)});
        }
    }
    if (doc.contains("toral")) {
        if (!doc["toral"].is_array()) {
            json_error("toral must be an array of rows");
        }
        std::size_t n = 0;
        for (const auto& row : doc["toral"]) {
            const std::string where = "toral[" + std::to_string(n++) + "]";
            if (!row.is_array() || row.size() != file.dim) {
                json_error(where + ": expected " + std::to_string(file.dim) + " coefficients");
            }
            Vector v;
            for (const auto& c : row) {
                v.push_back(json_rational(c, where));
            }
            file.toral.push_back(std::move(v));
        }
    }
    return file;
}

std::string to_text(const AlgebraFile& file)
{
    std::ostringstream out;
    out << "dim " << file.dim << "\n";
    if (!file.labels.empty()) {
        out << "labels";
        for (const auto& l : file.labels) {
            out << ' ' << l;
        }
        out << "\n";
    }
    // One line per (i, j), terms in file order.
    for (std::size_t r = 0; r < file.brackets.size();) {
        const auto& head = file.brackets[r];
        out << "bracket " << head.i << ' ' << head.j << " ->";
        for (; r < file.brackets.size() && file.brackets[r].i == head.i && file.brackets[r].j == head.j; ++r) {
            out << ' ' << file.brackets[r].k << ':' << to_string(file.brackets[r].coeff);
        }
        out << "\n";
    }
    for (const auto& row : file.toral) {
        out << "toral";
        for (const auto& c : row) {
            out << ' ' << to_string(c);
        }
        out << "\n";
    }
    return out.str();
}

std::string to_json_text(const AlgebraFile& file)
{
    json doc;
    doc["format_version"] = file.format_version;
    doc["dim"] = file.dim;
    if (!file.labels.empty()) {
        doc["labels"] = file.labels;
    }
    doc["brackets"] = json::array();
    for (const auto& r : file.brackets) {
        doc["brackets"].push_back({r.i, r.j, r.k, to_string(r.coeff)});
    }
    if (!file.toral.empty()) {
        doc["toral"] = json::array();
        for (const auto& row : file.toral) {
            json out = json::array();
            for (const auto& c : row) {
                out.push_back(to_string(c));
            }
            doc["toral"].push_back(out);
        }
    }
    return doc.dump(2) + "\n";
}

AlgebraFile make_algebra_file(const LieAlgebra& algebra, const std::vector<Vector>& toral)
{
    AlgebraFile file;
    file.dim = algebra.dim();
    file.labels = algebra.labels();
    file.brackets = algebra.records();
    file.toral = toral;
    return file;
}

std::string content_digest(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

}  // namespace lietk
