#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sheafcalc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// Generalized binomial coefficient m(m-1)...(m-k+1)/k!, valid for negative m.
/// Zero for k < 0.
inline Integer binomial(const Integer &m, std::int64_t k) {
    if (k < 0)
        return 0;
    Integer num = 1;
    Integer den = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        num *= m - i;
        den *= i + 1;
    }
    return num / den;
}

inline std::string to_string(const Integer &x) { return x.str(); }

/// Lowest terms, "p" or "p/q".
inline std::string to_string(const Rational &x) {
    const Integer num = boost::multiprecision::numerator(x);
    const Integer den = boost::multiprecision::denominator(x);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

inline bool is_integral(const Rational &x) { return boost::multiprecision::denominator(x) == 1; }

} // namespace sheafcalc

namespace sheafcalc {

/// Malformed textual input; line and column are 1-based, 0 when unknown.
class ParseError : public Error {
  public:
    ParseError(const std::string &message, std::size_t line = 0, std::size_t column = 0)
        : Error(format(message, line, column)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    static std::string format(const std::string &message, std::size_t line, std::size_t column) {
        if (line == 0)
            return message;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
};

} // namespace sheafcalc
