#ifndef QGJ_RATIONAL_HPP
#define QGJ_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qgj {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator. Zero is uniquely 0/1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}
    Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
        value_ = Rep(num) / Rep(den);
    }

    // Accepts "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return denominator() == 1; }

    double to_double() const { return value_.convert_to<double>(); }
    std::string to_string() const;

    Rational operator-() const { Rational r; r.value_ = -value_; return r; }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::invalid_argument("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

    Rational reciprocal() const {
        if (is_zero())
            throw std::invalid_argument("Rational: reciprocal of zero");
        return Rational(denominator(), numerator());
    }

private:
    using Rep = boost::multiprecision::cpp_rational;
    Rep value_;
};

}  // namespace qgj

#endif
