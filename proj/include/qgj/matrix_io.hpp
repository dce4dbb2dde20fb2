#ifndef QGJ_MATRIX_IO_HPP
#define QGJ_MATRIX_IO_HPP

#include "qgj/matrix.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgj {

/// Parse failure with 1-based position information.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

/// Text format: first line "m n", then m lines of n whitespace-separated
/// integer or "p/q" tokens. '#' starts a comment. Augmented systems use
/// "m n+1" with the last column as rhs.
Matrix parse_matrix(std::string_view text);
AugmentedSystem parse_system(std::string_view text);
AugmentedSystem load_system(const std::string& path);

std::string format_rational(const Rational& r);     // "p" or "p/q"
std::string format_matrix(const Matrix& m);

}  // namespace qgj

#endif
