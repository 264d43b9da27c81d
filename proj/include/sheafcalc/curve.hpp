#pragma once

#include "sheafcalc/numeric.hpp"
#include "sheafcalc/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sheafcalc {

/// Numeric shadow of a curve in P^3: degree, arithmetic genus, and the twist e
/// with omega_Y = O_Y(e) when there is one.
///
/// Disjoint unions keep their connected components; their dualizing sheaf is
/// described componentwise even when no global twist exists.
class CurveClass {
  public:
    CurveClass(std::int64_t degree, std::int64_t genus, std::optional<std::int64_t> omega_twist = std::nullopt)
        : degree_(degree), genus_(genus), omega_twist_(omega_twist) {
        if (degree < 1)
            throw Error("curve degree must be positive, got " + std::to_string(degree));
        if (omega_twist && 2 * genus - 2 != degree * *omega_twist)
            throw Error("omega_Y = O_Y(" + std::to_string(*omega_twist) + ") contradicts 2p_a - 2 = d e for (d, p_a) = (" +
                        std::to_string(degree) + ", " + std::to_string(genus) + ")");
    }

    /// p_a of a disjoint union is sum p_a(C_i) - (#components - 1).
    static CurveClass disjoint_union(const std::vector<CurveClass> &parts) {
        if (parts.empty())
            throw Error("disjoint union of no curves");
        std::int64_t d = 0;
        std::int64_t p = 1;
        std::vector<CurveClass> flat;
        for (const auto &part : parts) {
            d += part.degree();
            p += part.genus() - 1;
            if (part.components_.empty())
                flat.push_back(part);
            else
                flat.insert(flat.end(), part.components_.begin(), part.components_.end());
        }
        CurveClass out(d, p);
        if (flat.size() > 1)
            out.components_ = std::move(flat);
        else
            out.omega_twist_ = flat.front().omega_twist_;
        return out;
    }

    std::int64_t degree() const { return degree_; }
    std::int64_t genus() const { return genus_; }
    const std::optional<std::int64_t> &omega_twist() const { return omega_twist_; }
    const std::vector<CurveClass> &components() const { return components_; }

    friend bool operator==(const CurveClass &, const CurveClass &) = default;

  private:
    std::int64_t degree_;
    std::int64_t genus_;
    std::optional<std::int64_t> omega_twist_;
    std::vector<CurveClass> components_;
};

inline std::int64_t disjoint_union_genus(const std::vector<std::int64_t> &genera) {
    std::int64_t p = 1;
    for (auto g : genera)
        p += g - 1;
    return p;
}

/// d t + 1 - p_a
inline Polynomial hilbert_poly(const CurveClass &y) {
    return Polynomial::linear(y.degree(), 1 - y.genus());
}

/// chi(omega_Y(t)). Uses omega_Y = O_Y(e) or the components when known,
/// otherwise duality on a locally CM curve, chi(omega_Y(t)) = d t + p_a - 1.
inline Polynomial dualizing_chi(const CurveClass &y) {
    if (!y.components().empty()) {
        Polynomial p;
        for (const auto &c : y.components())
            p += dualizing_chi(c);
        return p;
    }
    if (y.omega_twist())
        return hilbert_poly(y).shifted(*y.omega_twist());
    return Polynomial::linear(y.degree(), y.genus() - 1);
}

/// chi(O_Z(t)) for a complete intersection of surfaces of degrees d1, d2, from the Koszul complex.
inline Polynomial ci_chi(std::int64_t d1, std::int64_t d2) {
    return Polynomial::binomial_in_t(3, 0) - Polynomial::binomial_in_t(3, -d1) - Polynomial::binomial_in_t(3, -d2) +
           Polynomial::binomial_in_t(3, -d1 - d2);
}

/// Complete intersection of type (d1, d2); omega_Z = O_Z(d1 + d2 - 4).
inline CurveClass ci_curve(std::int64_t d1, std::int64_t d2) {
    if (d1 < 1 || d2 < 1)
        throw Error("complete intersection degrees must be positive");
    const std::int64_t d = d1 * d2;
    const std::int64_t e = d1 + d2 - 4;
    return CurveClass(d, 1 + d * e / 2, e);
}

/// Genus of the zero locus of a section of a rank-2 bundle, 2p_a - 2 = c2 (c1 - 4).
inline Rational serre_rank2_genus(std::int64_t c1, std::int64_t c2) {
    return 1 + Rational(c2 * (c1 - 4), 2);
}

/// The zero-locus class for (c1, c2), or nothing when the genus is not integral.
inline std::optional<CurveClass> rank2_zero_locus(std::int64_t c1, std::int64_t c2) {
    const Rational g = serre_rank2_genus(c1, c2);
    if (c2 < 1 || !is_integral(g))
        return std::nullopt;
    return CurveClass(c2, static_cast<std::int64_t>(boost::multiprecision::numerator(g)), c1 - 4);
}

/// c3 of the bundle E in 0 -> 2O -> E -> I_Y(3) -> 0: c3 = 2p_a - 2 + d(4 - c1).
inline std::int64_t c3_from_curve(std::int64_t c1, const CurveClass &y) {
    if (c1 != 3)
        throw Error("c3_from_curve supports c1 = 3 only");
    return 2 * y.genus() - 2 + y.degree() * (4 - c1);
}

class LiaisonInconsistency : public Error {
  public:
    using Error::Error;
};

struct LiaisonResult {
    CurveClass residue;
    Polynomial chi; ///< Hilbert polynomial of the residue
};

/// Residue of y in a complete intersection Z of type (d1, d2).
///
/// Computed twice: from the genus formula p' - p = (d1 + d2 - 4)(d' - d)/2, and
/// from chi(O_Y') = chi(O_Z) - chi(omega_Y (x) omega_Z^{-1}). The two must agree.
inline LiaisonResult liaison_residue(std::int64_t d1, std::int64_t d2, const CurveClass &y) {
    if (d1 < 1 || d2 < 1)
        throw Error("complete intersection degrees must be positive");
    const std::int64_t dz = d1 * d2;
    if (y.degree() >= dz)
        throw Error("curve of degree " + std::to_string(y.degree()) + " leaves no residue in a (" +
                    std::to_string(d1) + "," + std::to_string(d2) + ") complete intersection");
    const std::int64_t ez = d1 + d2 - 4;
    const std::int64_t d_res = dz - y.degree();
    const std::int64_t twice_shift = ez * (d_res - y.degree());
    const std::int64_t p_res = y.genus() + twice_shift / 2;

    const Polynomial chi = ci_chi(d1, d2) - dualizing_chi(y).shifted(-ez);
    const Polynomial expected = Polynomial::linear(d_res, 1 - p_res);
    if (!(chi == expected))
        throw LiaisonInconsistency("liaison routes disagree: genus formula gives " + expected.str() +
                                   ", chi bookkeeping gives " + chi.str());
    return {CurveClass(d_res, p_res), chi};
}

/// chi of a multiple structure filtered with quotients O_L(s_1), ..., O_L(s_k).
inline Polynomial multiple_line_chi(const std::vector<std::int64_t> &twists) {
    if (twists.empty())
        throw Error("a multiple line structure needs at least one quotient");
    Polynomial p;
    for (auto s : twists)
        p += Polynomial::linear(1, s + 1);
    return p;
}

/// Existence of a locally Cohen-Macaulay curve of degree d and genus p_a:
/// p_a = (d-1)(d-2)/2, or d > 1 and p_a <= (d-2)(d-3)/2.
inline bool cm_exists(std::int64_t d, std::int64_t pa) {
    if (d < 1)
        throw Error("degree must be positive");
    if (2 * pa == (d - 1) * (d - 2))
        return true;
    return d > 1 && 2 * pa <= (d - 2) * (d - 3);
}

/// h^0(O_Y(k)) on a smooth rational curve embedded with degree embedding_degree.
inline Integer section_count_rational(std::int64_t embedding_degree, std::int64_t k) {
    if (embedding_degree < 1)
        throw Error("embedding degree must be positive");
    return std::max<std::int64_t>(0, k * embedding_degree + 1);
}

} // namespace sheafcalc
