#include "quandle/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace quandle {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

long long to_integer(const Token& t, std::size_t line) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
    return v;
}

}  // namespace

RawTable parse_matrix(std::string_view text, Convention convention) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    std::size_t li = 0;
    auto skip_blank = [&] {
        while (li < lines.size() && tokenize(lines[li]).empty()) ++li;
    };
    skip_blank();
    if (li == lines.size()) throw ParseError(1, 1, "empty file");
    auto head = tokenize(lines[li]);
    if (head.size() != 1) throw ParseError(li + 1, head.size() > 1 ? head[1].column : 1, "first line must hold the order only");
    const long long n = to_integer(head[0], li + 1);
    if (n < 1) throw ParseError(li + 1, head[0].column, "order must be positive");
    ++li;

    RawTable raw(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
    for (long long r = 0; r < n; ++r) {
        skip_blank();
        if (li >= lines.size())
            throw ParseError(li + 1, 1, "expected row " + std::to_string(r + 1) + " of " + std::to_string(n));
        auto toks = tokenize(lines[li]);
        if (toks.size() != static_cast<std::size_t>(n)) {
            const std::size_t col = toks.size() > static_cast<std::size_t>(n) ? toks[static_cast<std::size_t>(n)].column
                                                                                : lines[li].size() + 1;
            throw ParseError(li + 1, col,
                             "row has " + std::to_string(toks.size()) + " entries, expected " + std::to_string(n));
        }
        for (long long c = 0; c < n; ++c) {
            const long long v = to_integer(toks[static_cast<std::size_t>(c)], li + 1) - 1;
            if (convention == Convention::right)
                raw[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            else
                raw[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = v;
        }
        ++li;
    }
    skip_blank();
    if (li < lines.size()) throw ParseError(li + 1, 1, "unexpected content after the matrix");
    return raw;
}

QuandleTable parse_quandle(std::string_view text, Convention convention, Mode mode) {
    return QuandleTable::from_rows(parse_matrix(text, convention), mode);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFile("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

QuandleTable load(const std::string& path, Convention convention, Mode mode) {
    return parse_quandle(read_file(path), convention, mode);
}

std::string emit(const QuandleTable& X) {
    const std::size_t n = X.order();
    std::string out = std::to_string(n) + "\n";
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (y) out += ' ';
            out += std::to_string(X.op(static_cast<Element>(x), static_cast<Element>(y)) + 1);
        }
        out += '\n';
    }
    return out;
}

std::string digest(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) h = (h ^ c) * 1099511628211ULL;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace quandle
