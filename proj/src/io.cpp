#include "conehull/io.hpp"

#include <charconv>
#include <stdexcept>

namespace conehull {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char ch : s)
    {
        if (ch < '0' || ch > '9')
            return false;
    }
    return true;
}

struct Line
{
    std::size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_whitespace(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size())
    {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text, std::size_t& last_line)
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos < text.size())
    {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        auto tokens = split_whitespace(text.substr(pos, end - pos));
        if (!tokens.empty() && tokens.front().front() != '#')
            out.push_back({number, std::move(tokens)});
        pos = end + 1;
    }
    last_line = number;
    return out;
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* what)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
    return value;
}

QVector parse_row(const Line& line, std::size_t n)
{
    if (line.tokens.size() != n)
        throw ParseError(line.number, "expected " + std::to_string(n) + " entries, found " +
                                          std::to_string(line.tokens.size()));
    QVector row;
    row.reserve(n);
    for (auto t : line.tokens)
    {
        try
        {
            row.push_back(parse_rational(t));
        }
        catch (const std::invalid_argument& e)
        {
            throw ParseError(line.number, e.what());
        }
    }
    return row;
}

}  // namespace

Rational parse_rational(std::string_view token)
{
    const std::string original(token);
    bool negative = false;
    if (!token.empty() && (token.front() == '+' || token.front() == '-'))
    {
        negative = token.front() == '-';
        token.remove_prefix(1);
    }
    std::string_view num = token, den;
    if (auto slash = token.find('/'); slash != std::string_view::npos)
    {
        num = token.substr(0, slash);
        den = token.substr(slash + 1);
        if (!all_digits(den))
            throw std::invalid_argument("malformed rational '" + original + "'");
    }
    if (!all_digits(num))
        throw std::invalid_argument("malformed rational '" + original + "'");

    mpz_class p(std::string(num), 10);
    mpz_class q = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (q == 0)
        throw std::invalid_argument("zero denominator in '" + original + "'");
    Rational value(negative ? mpz_class(-p) : p, q);
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

InequalitySystem parse_system(std::string_view text)
{
    std::size_t last_line = 0;
    const auto lines = content_lines(text, last_line);
    if (lines.empty())
        throw ParseError(last_line + 1, "missing header 'n m'");

    const Line& header = lines.front();
    if (header.tokens.size() != 2)
        throw ParseError(header.number, "header must be 'n m'");
    const std::size_t n = parse_count(header.tokens[0], header.number, "dimension");
    const std::size_t m = parse_count(header.tokens[1], header.number, "row count");
    if (n == 0)
        throw ParseError(header.number, "dimension must be positive");

    InequalitySystem system(n);
    for (std::size_t k = 1; k < lines.size(); ++k)
    {
        if (k > m)
            throw ParseError(lines[k].number, "more than " + std::to_string(m) + " rows");
        system.add(LinearForm(parse_row(lines[k], n)));
    }
    if (system.size() < m)
        throw ParseError(last_line + 1, "expected " + std::to_string(m) + " rows, found " +
                                            std::to_string(system.size()));
    return system;
}

std::string write_system(const InequalitySystem& system)
{
    std::string out = std::to_string(system.dimension()) + " " + std::to_string(system.size()) + "\n";
    for (const auto& f : system.forms())
    {
        for (std::size_t i = 0; i < f.coefficients.size(); ++i)
        {
            if (i)
                out += ' ';
            out += format_rational(f.coefficients[i]);
        }
        out += '\n';
    }
    return out;
}

std::string write_cone(const ConeDescription& cone)
{
    std::string out;
    auto block = [&out](const char* tag, const std::vector<QVector>& rows) {
        out += tag;
        out += ' ';
        out += std::to_string(rows.size());
        out += '\n';
        for (const auto& row : rows)
        {
            for (std::size_t i = 0; i < row.size(); ++i)
            {
                if (i)
                    out += ' ';
                out += format_rational(row[i]);
            }
            out += '\n';
        }
    };
    block("U", cone.lineality);
    block("V", cone.rays);
    return out;
}

ConeDescription parse_cone(std::string_view text, std::size_t dimension)
{
    std::size_t last_line = 0;
    const auto lines = content_lines(text, last_line);
    ConeDescription cone;
    cone.dimension = dimension;

    std::size_t k = 0;
    auto block = [&](std::string_view tag, std::vector<QVector>& rows) {
        if (k >= lines.size())
            throw ParseError(last_line + 1, "missing '" + std::string(tag) + "' block");
        const Line& head = lines[k++];
        if (head.tokens.size() != 2 || head.tokens[0] != tag)
            throw ParseError(head.number, "expected '" + std::string(tag) + " <count>'");
        const std::size_t count = parse_count(head.tokens[1], head.number, "count");
        for (std::size_t i = 0; i < count; ++i)
        {
            if (k >= lines.size())
                throw ParseError(last_line + 1, "truncated '" + std::string(tag) + "' block");
            rows.push_back(parse_row(lines[k++], dimension));
        }
    };
    block("U", cone.lineality);
    block("V", cone.rays);
    if (k < lines.size())
        throw ParseError(lines[k].number, "trailing content");
    return cone;
}

}  // namespace conehull
