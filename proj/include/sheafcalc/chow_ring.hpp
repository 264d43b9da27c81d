#pragma once

#include "sheafcalc/numeric.hpp"
#include "sheafcalc/sheaf.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sheafcalc {

/// Element of the Chow ring Z[h]/(h^{n+1}) of P^n, stored as c_0..c_n.
class ChowClass {
  public:
    explicit ChowClass(int dim = 3) : dim_(dim), coeffs_(static_cast<std::size_t>(dim) + 1) {
        if (dim < 1)
            throw DimensionMismatch("ambient dimension must be positive");
    }

    /// Coefficients past h^dim must be zero.
    ChowClass(int dim, std::vector<Integer> coeffs) : ChowClass(dim) {
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (k < coeffs_.size())
                coeffs_[k] = std::move(coeffs[k]);
            else if (coeffs[k] != 0)
                throw DimensionMismatch("coefficient of h^" + std::to_string(k) + " exceeds P^" +
                                        std::to_string(dim));
        }
    }

    ChowClass(int dim, std::initializer_list<std::int64_t> coeffs)
        : ChowClass(dim, std::vector<Integer>(coeffs.begin(), coeffs.end())) {}

    static ChowClass one(int dim = 3) { return ChowClass(dim, {1}); }
    /// 1 + a h
    static ChowClass linear(std::int64_t a, int dim = 3) { return ChowClass(dim, {1, a}); }

    int dim() const { return dim_; }
    const std::vector<Integer> &coeffs() const { return coeffs_; }
    const Integer &operator[](std::size_t k) const { return coeffs_.at(k); }
    Integer &operator[](std::size_t k) { return coeffs_.at(k); }

    /// Largest k with c_k != 0, or -1 for the zero class.
    int top_degree() const {
        for (int k = dim_; k >= 0; --k)
            if (coeffs_[static_cast<std::size_t>(k)] != 0)
                return k;
        return -1;
    }

    friend bool operator==(const ChowClass &, const ChowClass &) = default;

  private:
    int dim_;
    std::vector<Integer> coeffs_;
};

inline void require_same_dim(const ChowClass &a, const ChowClass &b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("Chow classes on P^" + std::to_string(a.dim()) + " and P^" +
                                std::to_string(b.dim()));
}

inline void require_unit(const ChowClass &c) {
    if (c[0] != 1)
        throw Error("expected constant term 1, got " + c[0].str());
}

/// Truncated product.
inline ChowClass mul(const ChowClass &a, const ChowClass &b) {
    require_same_dim(a, b);
    const auto n = static_cast<std::size_t>(a.dim());
    ChowClass out(a.dim());
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

inline ChowClass operator*(const ChowClass &a, const ChowClass &b) { return mul(a, b); }

inline ChowClass inv(const ChowClass &c);

/// c^e; negative exponents go through inv.
inline ChowClass pow(const ChowClass &c, std::int64_t e) {
    if (e < 0)
        return pow(inv(c), -e);
    ChowClass out = ChowClass::one(c.dim());
    for (std::int64_t i = 0; i < e; ++i)
        out = mul(out, c);
    return out;
}

/// Inverse of a class with c_0 = 1, by the recursion u_k = -sum_{i=1..k} c_i u_{k-i}.
inline ChowClass inv(const ChowClass &c) {
    require_unit(c);
    const auto n = static_cast<std::size_t>(c.dim());
    ChowClass u(c.dim());
    u[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Integer acc = 0;
        for (std::size_t i = 1; i <= k; ++i)
            acc += c[i] * u[k - i];
        u[k] = -acc;
    }
    return u;
}

/// Total Chern class of an atom. T(a) comes from the twisted Euler sequence
/// 0 -> O(a) -> (n+1)O(a+1) -> T(a) -> 0; Omega(a) is the dual of T(-a).
inline ChowClass chern_of_atom(const SheafAtom &atom, int dim = 3) {
    require_atom_dimension(atom, dim);
    switch (atom.kind) {
    case AtomKind::LineBundle:
        return ChowClass::linear(atom.twist, dim);
    case AtomKind::Tangent:
        return mul(pow(ChowClass::linear(atom.twist + 1, dim), dim + 1), inv(ChowClass::linear(atom.twist, dim)));
    case AtomKind::Cotangent: {
        ChowClass c = chern_of_atom(SheafAtom::tangent(-atom.twist), dim);
        for (std::size_t k = 1; k < c.coeffs().size(); k += 2)
            c[k] = -c[k];
        return c;
    }
    }
    throw Error("unknown atom kind");
}

inline ChowClass chern_of_sum(const SheafSum &sum, int dim = 3) {
    ChowClass c = ChowClass::one(dim);
    for (const auto &[atom, mult] : sum.terms())
        c = mul(c, pow(chern_of_atom(atom, dim), mult));
    return c;
}

/// Whitney formula along the complex: even positions multiply, odd positions divide.
inline ChowClass chern_from_complex(const FreeComplex &complex) {
    ChowClass even = ChowClass::one(complex.dim());
    ChowClass odd = ChowClass::one(complex.dim());
    for (std::size_t i = 0; i < complex.length(); ++i) {
        auto &target = (i % 2 == 0) ? even : odd;
        target = mul(target, chern_of_sum(complex.term(i), complex.dim()));
    }
    return mul(even, inv(odd));
}

class MalformedComplex : public Error {
  public:
    using Error::Error;
};

/// Alternating rank sum; negative means the complex cannot be exact.
inline std::int64_t rank_of_complex(const FreeComplex &complex) {
    std::int64_t r = 0;
    for (std::size_t i = 0; i < complex.length(); ++i) {
        const auto ri = complex.term(i).rank(complex.dim());
        r += (i % 2 == 0) ? ri : -ri;
    }
    if (r < 0)
        throw MalformedComplex("alternating rank is negative (" + std::to_string(r) + ")");
    return r;
}

/// Chern class of E(t) for a (virtual) sheaf of the given rank:
/// c_k(E(t)) = sum_i C(rank - i, k - i) c_i t^{k-i}.
///
/// The binomial is the generalized one, so ranks smaller than the degree of c
/// (ideal sheaves, rank-0 classes) twist correctly as K-theory classes.
inline ChowClass twist(const ChowClass &c, std::int64_t rank, std::int64_t t) {
    require_unit(c);
    const auto n = static_cast<std::size_t>(c.dim());
    ChowClass out(c.dim());
    for (std::size_t k = 0; k <= n; ++k) {
        Integer acc = 0;
        Integer tpow = 1;
        for (std::size_t i = k + 1; i-- > 0;) {
            const auto j = static_cast<std::int64_t>(k - i);
            acc += binomial(Integer(rank) - static_cast<std::int64_t>(i), j) * c[i] * tpow;
            tpow *= t;
        }
        out[k] = acc;
    }
    return out;
}

/// Euler characteristic on P^3 by Hirzebruch-Riemann-Roch:
/// degree-3 part of ch(E) * td(P^3), td = 1 + 2h + 11/6 h^2 + h^3.
inline Integer hrr_chi(std::int64_t rank, const ChowClass &c) {
    if (c.dim() != 3)
        throw DimensionMismatch("hrr_chi is implemented on P^3 only");
    require_unit(c);
    const Rational c1(c[1]), c2(c[2]), c3(c[3]);
    const Rational ch1 = c1;
    const Rational ch2 = (c1 * c1 - 2 * c2) / 2;
    const Rational ch3 = (c1 * c1 * c1 - 3 * c1 * c2 + 3 * c3) / 6;
    const Rational chi = ch3 + 2 * ch2 + Rational(11, 6) * ch1 + Rational(rank);
    if (!is_integral(chi))
        throw Error("rank " + std::to_string(rank) + " with this Chern class gives non-integral chi " +
                    to_string(chi));
    return boost::multiprecision::numerator(chi);
}

struct LineFactor {
    std::int64_t a;
    ChowClass quotient;

    friend bool operator==(const LineFactor &, const LineFactor &) = default;
};

/// All a in [-bound, bound], ascending, with c = (1 + a h) * q and deg q <= rank - 1.
inline std::vector<LineFactor> factor_line(const ChowClass &c, std::int64_t rank, std::int64_t bound = 10) {
    require_unit(c);
    if (rank < 2)
        throw Error("factor_line needs rank >= 2, got " + std::to_string(rank));
    std::vector<LineFactor> out;
    for (std::int64_t a = -bound; a <= bound; ++a) {
        ChowClass q = mul(inv(ChowClass::linear(a, c.dim())), c);
        if (q.top_degree() <= rank - 1)
            out.push_back({a, std::move(q)});
    }
    return out;
}

} // namespace sheafcalc
