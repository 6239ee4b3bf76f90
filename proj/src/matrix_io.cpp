#include "omplab/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace omplab {

ParseError::ParseError(const std::string& message, int line_, int column_)
    : std::runtime_error(message + " (line " + std::to_string(line_) + ", column " +
                         std::to_string(column_) + ")"),
      line(line_), column(column_)
{
}

namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

// Splits a line into whitespace-separated tokens with 1-based columns.
std::vector<Token> tokenize_line(const std::string& line, int line_no)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i >= line.size())
            break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        tokens.push_back({line.substr(start, i - start), line_no, static_cast<int>(start) + 1});
    }
    return tokens;
}

int parse_int(const Token& t)
{
    int value = 0;
    const char* begin = t.text.data();
    const char* end = begin + t.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("expected an integer, got '" + t.text + "'", t.line, t.column);
    return value;
}

double parse_double(const Token& t)
{
    double value = 0.0;
    const char* begin = t.text.data();
    const char* end = begin + t.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("expected a number, got '" + t.text + "'", t.line, t.column);
    if (!std::isfinite(value))
        throw ParseError("non-finite value '" + t.text + "'", t.line, t.column);
    return value;
}

std::vector<std::string> read_lines(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'", 0, 0);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

} // namespace

DenseMatrix load_matrix(const std::string& path)
{
    const auto lines = read_lines(path);

    std::size_t li = 0;
    std::vector<Token> header;
    while (li < lines.size()) {
        header = tokenize_line(lines[li], static_cast<int>(li) + 1);
        ++li;
        if (!header.empty())
            break;
    }
    if (header.empty())
        throw ParseError("missing 'rows cols' header", 1, 1);
    if (header.size() != 2)
        throw ParseError("header must be exactly 'rows cols'", header[0].line,
                         header.size() > 2 ? header[2].column : header[0].column);
    const int rows = parse_int(header[0]);
    const int cols = parse_int(header[1]);
    if (rows < 1 || cols < 1)
        throw ParseError("dimensions must be positive", header[0].line, header[0].column);

    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(rows) * cols);
    int rows_seen = 0;
    for (; li < lines.size(); ++li) {
        const auto tokens = tokenize_line(lines[li], static_cast<int>(li) + 1);
        if (tokens.empty())
            continue;
        if (rows_seen == rows)
            throw ParseError("more than " + std::to_string(rows) + " rows", tokens[0].line,
                             tokens[0].column);
        if (static_cast<int>(tokens.size()) != cols)
            throw ParseError("row " + std::to_string(rows_seen + 1) + " has " +
                                 std::to_string(tokens.size()) + " entries, expected " +
                                 std::to_string(cols) + " (dimension inconsistency)",
                             tokens[0].line, tokens[0].column);
        for (const auto& t : tokens)
            entries.push_back(parse_double(t));
        ++rows_seen;
    }
    if (rows_seen != rows)
        throw ParseError("found " + std::to_string(rows_seen) + " rows, expected " +
                             std::to_string(rows) + " (dimension inconsistency)",
                         static_cast<int>(lines.size()), 1);
    return DenseMatrix(rows, cols, std::move(entries));
}

void save_matrix(const DenseMatrix& a, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << a.rows() << ' ' << a.cols() << '\n';
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (j > 0)
                out << ' ';
            out << format_double(a(i, j));
        }
        out << '\n';
    }
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

std::vector<double> load_vector(const std::string& path)
{
    const auto lines = read_lines(path);

    std::size_t li = 0;
    std::vector<Token> header;
    while (li < lines.size()) {
        header = tokenize_line(lines[li], static_cast<int>(li) + 1);
        ++li;
        if (!header.empty())
            break;
    }
    if (header.empty())
        throw ParseError("missing length header", 1, 1);
    if (header.size() != 1)
        throw ParseError("header must be a single length", header[0].line, header[1].column);
    const int n = parse_int(header[0]);
    if (n < 1)
        throw ParseError("length must be positive", header[0].line, header[0].column);

    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(n));
    for (; li < lines.size(); ++li) {
        for (const auto& t : tokenize_line(lines[li], static_cast<int>(li) + 1)) {
            if (static_cast<int>(v.size()) == n)
                throw ParseError("more than " + std::to_string(n) + " entries", t.line, t.column);
            v.push_back(parse_double(t));
        }
    }
    if (static_cast<int>(v.size()) != n)
        throw ParseError("found " + std::to_string(v.size()) + " entries, expected " +
                             std::to_string(n) + " (dimension inconsistency)",
                         static_cast<int>(lines.size()), 1);
    return v;
}

void save_vector(const std::vector<double>& v, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << v.size() << '\n';
    for (double x : v)
        out << format_double(x) << '\n';
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

std::string format_double(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{})
        throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

} // namespace omplab
