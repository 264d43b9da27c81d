#pragma once

#include "sheafcalc/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace sheafcalc {

/// Univariate polynomial in t with exact rational coefficients.
///
/// Used for Euler characteristics and Hilbert polynomials. Coefficients are
/// stored lowest degree first with trailing zeros stripped, so the zero
/// polynomial has an empty coefficient vector and structural equality is
/// polynomial equality.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::int64_t c) : coeffs_{Rational(c)} { normalize(); }
    Polynomial(Rational c) : coeffs_{std::move(c)} { normalize(); }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial t() { return Polynomial(std::vector<Rational>{0, 1}); }

    /// a*t + b
    static Polynomial linear(const Rational &a, const Rational &b) {
        return Polynomial(std::vector<Rational>{b, a});
    }

    /// C(t + a + n, n) = (t+a+1)(t+a+2)...(t+a+n)/n!, i.e. chi(O_{P^n}(a)(t)).
    static Polynomial binomial_in_t(std::int64_t n, std::int64_t a) {
        Polynomial p(1);
        Integer fact = 1;
        for (std::int64_t k = 1; k <= n; ++k) {
            p *= linear(1, a + k);
            fact *= k;
        }
        return p / Rational(fact);
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const std::vector<Rational> &coeffs() const { return coeffs_; }

    Rational operator()(const Rational &x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    /// p(t + a)
    Polynomial shifted(std::int64_t a) const {
        Polynomial result;
        Polynomial power(1);
        const Polynomial step = linear(1, a);
        for (const auto &c : coeffs_) {
            result += power * c;
            power *= step;
        }
        return result;
    }

    /// True if the polynomial takes integer values on all integers.
    bool is_integer_valued() const {
        // Integer-valued iff integral on deg+1 consecutive integers.
        for (int x = 0; x <= std::max(degree(), 0); ++x)
            if (!is_integral((*this)(x)))
                return false;
        return true;
    }

    Polynomial &operator+=(const Polynomial &o) {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        normalize();
        return *this;
    }
    Polynomial &operator-=(const Polynomial &o) { return *this += -o; }
    Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto &c : a.coeffs_)
            c = -c;
        return a;
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(Polynomial a, const Rational &s) {
        for (auto &c : a.coeffs_)
            c *= s;
        a.normalize();
        return a;
    }
    friend Polynomial operator/(Polynomial a, const Rational &s) {
        for (auto &c : a.coeffs_)
            c /= s;
        return a;
    }
    friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.coeffs_ == b.coeffs_; }

    /// Highest degree first, explicit signs, no spaces: "3t+6", "-t+1", "t^2-1/2t".
    std::string str(char var = 't') const {
        if (is_zero())
            return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rational &c = coeffs_[static_cast<std::size_t>(k)];
            if (c == 0)
                continue;
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (neg)
                out += "-";
            else if (!out.empty())
                out += "+";
            if (k == 0 || mag != 1)
                out += to_string(mag);
            if (k >= 1)
                out += var;
            if (k >= 2)
                out += "^" + std::to_string(k);
        }
        return out;
    }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

} // namespace sheafcalc
