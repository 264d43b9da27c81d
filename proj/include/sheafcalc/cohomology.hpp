#pragma once

#include "sheafcalc/numeric.hpp"
#include "sheafcalc/polynomial.hpp"
#include "sheafcalc/sheaf.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace sheafcalc {

/// h^i(P^n, O(a)).
inline Integer h_line(int n, int i, std::int64_t a) {
    if (n < 1 || i < 0 || i > n)
        throw Error("cohomological index " + std::to_string(i) + " out of range for P^" + std::to_string(n));
    if (i == 0)
        return a >= 0 ? binomial(a + n, n) : Integer(0);
    if (i == n)
        return a <= -n - 1 ? binomial(-a - 1, n) : Integer(0);
    return 0;
}

/// Cohomology of twists of T and Omega on P^3.
///
/// Derived from the Euler sequence 0 -> O(a) -> 4O(a+1) -> T(a) -> 0. The only
/// non-injective map in its long exact sequence is H^3(O(-4)) -> 4H^3(O(-3)) = 0,
/// which gives h^2(T(-4)) = 1. Omega is handled by Serre duality,
/// h^i(Omega(a)) = h^{3-i}(T(-a-4)).
class BottTable {
  public:
    static constexpr std::int64_t window = 12;

    static const BottTable &instance() {
        static const BottTable table;
        return table;
    }

    Integer tangent(int i, std::int64_t a) const {
        if (i < 0 || i > 3)
            throw Error("cohomological index out of range for P^3");
        if (a >= -window && a <= window)
            return tangent_[static_cast<std::size_t>(a + window)][static_cast<std::size_t>(i)];
        return derive_tangent(i, a);
    }

    Integer cotangent(int i, std::int64_t a) const { return tangent(3 - i, -a - 4); }

    static Integer derive_tangent(int i, std::int64_t a) {
        const Integer kernel = (a == -4) ? 1 : 0;
        switch (i) {
        case 0:
            return 4 * h_line(3, 0, a + 1) - h_line(3, 0, a);
        case 1:
            return 0;
        case 2:
            return kernel;
        case 3:
            return 4 * h_line(3, 3, a + 1) - h_line(3, 3, a) + kernel;
        }
        throw Error("cohomological index out of range for P^3");
    }

  private:
    BottTable() {
        for (std::int64_t a = -window; a <= window; ++a)
            for (int i = 0; i <= 3; ++i)
                tangent_[static_cast<std::size_t>(a + window)][static_cast<std::size_t>(i)] = derive_tangent(i, a);
    }

    std::array<std::array<Integer, 4>, 2 * window + 1> tangent_;
};

inline Integer h_atom(int i, const SheafAtom &atom, int dim = 3) {
    require_atom_dimension(atom, dim);
    switch (atom.kind) {
    case AtomKind::LineBundle:
        return h_line(dim, i, atom.twist);
    case AtomKind::Tangent:
        return BottTable::instance().tangent(i, atom.twist);
    case AtomKind::Cotangent:
        return BottTable::instance().cotangent(i, atom.twist);
    }
    throw Error("unknown atom kind");
}

/// chi(atom(t)) as a polynomial in t.
inline Polynomial chi_atom_poly(const SheafAtom &atom, int dim = 3) {
    require_atom_dimension(atom, dim);
    switch (atom.kind) {
    case AtomKind::LineBundle:
        return Polynomial::binomial_in_t(dim, atom.twist);
    case AtomKind::Tangent:
        return Polynomial::binomial_in_t(3, atom.twist + 1) * Rational(4) - Polynomial::binomial_in_t(3, atom.twist);
    case AtomKind::Cotangent:
        return Polynomial::binomial_in_t(3, atom.twist - 1) * Rational(4) - Polynomial::binomial_in_t(3, atom.twist);
    }
    throw Error("unknown atom kind");
}

inline Polynomial chi_sum_poly(const SheafSum &sum, int dim = 3) {
    Polynomial p;
    for (const auto &[atom, mult] : sum.terms())
        p += chi_atom_poly(atom, dim) * Rational(mult);
    return p;
}

/// chi of the presented sheaf twisted by t.
inline Polynomial chi_complex_poly(const FreeComplex &complex) {
    Polynomial p;
    for (std::size_t i = 0; i < complex.length(); ++i) {
        const Polynomial term = chi_sum_poly(complex.term(i), complex.dim());
        if (i % 2 == 0)
            p += term;
        else
            p -= term;
    }
    return p;
}

inline Integer h_sum(int i, const SheafSum &sum, int dim = 3) {
    Integer total = 0;
    for (const auto &[atom, mult] : sum.terms())
        total += mult * h_atom(i, atom, dim);
    return total;
}

/// Outcome of h0_from_resolution. An empty value means the shape of the
/// resolution does not determine h^0; reason says which term blocked it.
struct H0Result {
    std::optional<Integer> value;
    std::string reason;

    bool determinate() const { return value.has_value(); }
};

/// h^0 of the presented sheaf twisted by t.
///
/// Splitting the resolution into short exact sequences K_{p+1} -> F_p -> K_p
/// shows h^0(K_0) = sum (-1)^p h^0(F_p(t)) as soon as h^q(F_p(t)) = 0 for all
/// 1 <= q <= p. When some such group is nonzero the answer depends on the
/// differentials and the result is indeterminate.
inline H0Result h0_from_resolution(const FreeComplex &complex, std::int64_t t) {
    const FreeComplex twisted = twist_complex(complex, t);
    const int n = twisted.dim();
    for (std::size_t p = 1; p < twisted.length(); ++p) {
        for (int q = 1; q <= std::min<int>(static_cast<int>(p), n); ++q) {
            for (const auto &[atom, mult] : twisted.term(p).terms()) {
                const Integer h = h_atom(q, atom, n);
                if (h != 0)
                    return {std::nullopt, "h^" + std::to_string(q) + " of a twist-" + std::to_string(atom.twist) +
                                              " atom in position " + std::to_string(p) + " is " + h.str()};
            }
        }
    }
    Integer total = 0;
    for (std::size_t p = 0; p < twisted.length(); ++p) {
        const Integer h = h_sum(0, twisted.term(p), n);
        total += (p % 2 == 0) ? h : Integer(-h);
    }
    if (total < 0)
        throw Error("negative h^0 from resolution; the complex cannot be exact");
    return {total, {}};
}

/// sum_p (-1)^p sum_{q >= 1} (-1)^q h^q(F_p(t)): the gap between chi(t) and the
/// alternating h^0 sum over the terms.
inline Integer higher_cohomology_defect(const FreeComplex &complex, std::int64_t t) {
    const FreeComplex twisted = twist_complex(complex, t);
    Integer total = 0;
    for (std::size_t p = 0; p < twisted.length(); ++p) {
        for (int q = 1; q <= twisted.dim(); ++q) {
            const Integer h = h_sum(q, twisted.term(p), twisted.dim());
            total += ((p + static_cast<std::size_t>(q)) % 2 == 0) ? h : Integer(-h);
        }
    }
    return total;
}

} // namespace sheafcalc
