#include "qgj/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace qgj {

ParseError::ParseError(std::string message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

namespace {

struct Token {
    std::string text;
    std::size_t line, column;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1, column = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
            continue;
        }
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++column;
            ++i;
            continue;
        }
        Token tok{{}, line, column};
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '#') {
            tok.text += text[i];
            ++i;
            ++column;
        }
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

std::size_t parse_count(const Token& tok, const char* what) {
    try {
        const long long v = std::stoll(tok.text);
        if (v < 1)
            throw std::invalid_argument("non-positive");
        return std::size_t(v);
    } catch (const std::exception&) {
        throw ParseError(std::string("bad ") + what + " '" + tok.text + "'", tok.line, tok.column);
    }
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
    const std::vector<Token> tokens = tokenize(text);
    if (tokens.size() < 2)
        throw ParseError("missing dimension header", 1, 1);
    const std::size_t rows = parse_count(tokens[0], "row count");
    const std::size_t cols = parse_count(tokens[1], "column count");
    if (tokens.size() - 2 < rows * cols) {
        const Token& last = tokens.back();
        throw ParseError("expected " + std::to_string(rows * cols) + " entries, found " +
                             std::to_string(tokens.size() - 2),
                         last.line, last.column);
    }
    if (tokens.size() - 2 > rows * cols) {
        const Token& extra = tokens[2 + rows * cols];
        throw ParseError("unexpected trailing token '" + extra.text + "'", extra.line,
                         extra.column);
    }
    std::vector<Rational> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 2; i < tokens.size(); ++i) {
        try {
            entries.push_back(Rational::parse(tokens[i].text));
        } catch (const std::exception&) {
            throw ParseError("malformed entry '" + tokens[i].text + "'", tokens[i].line,
                             tokens[i].column);
        }
    }
    return Matrix(rows, cols, std::move(entries));
}

AugmentedSystem parse_system(std::string_view text) {
    const Matrix aug = parse_matrix(text);
    if (aug.cols() < 2)
        throw ParseError("augmented system needs at least 2 columns", 1, 1);
    return AugmentedSystem::from_augmented(aug);
}

AugmentedSystem load_system(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_system(buffer.str());
}

std::string format_rational(const Rational& r) {
    return r.to_string();
}

std::string format_matrix(const Matrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                out += ' ';
            out += format_rational(m.at(r, c));
        }
        out += '\n';
    }
    return out;
}

}  // namespace qgj
