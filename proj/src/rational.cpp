#include "qgj/rational.hpp"

namespace qgj {

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(BigInt(std::string(text)));
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational: malformed token '" + std::string(text) + "'");
    }
}

std::string Rational::to_string() const {
    std::string s = numerator().str();
    if (!is_integer())
        s += "/" + denominator().str();
    return s;
}

}  // namespace qgj
