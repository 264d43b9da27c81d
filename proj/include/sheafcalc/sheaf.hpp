#pragma once

#include "sheafcalc/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sheafcalc {

enum class AtomKind { LineBundle, Tangent, Cotangent };

/// O(a), T(a) or Omega(a) on P^n. Tangent and cotangent atoms need n = 3.
struct SheafAtom {
    AtomKind kind = AtomKind::LineBundle;
    std::int64_t twist = 0;

    static SheafAtom line(std::int64_t a) { return {AtomKind::LineBundle, a}; }
    static SheafAtom tangent(std::int64_t a) { return {AtomKind::Tangent, a}; }
    static SheafAtom cotangent(std::int64_t a) { return {AtomKind::Cotangent, a}; }

    SheafAtom twisted(std::int64_t t) const { return {kind, twist + t}; }

    friend auto operator<=>(const SheafAtom &, const SheafAtom &) = default;
};

/// Rank of an atom on P^dim.
inline std::int64_t atom_rank(const SheafAtom &atom, int dim) {
    return atom.kind == AtomKind::LineBundle ? 1 : dim;
}

inline void require_atom_dimension(const SheafAtom &atom, int dim) {
    if (atom.kind != AtomKind::LineBundle && dim != 3)
        throw DimensionMismatch("tangent and cotangent atoms are only supported on P^3, got P^" +
                                std::to_string(dim));
}

/// Direct sum of atoms with positive multiplicities, kept sorted by (kind, twist)
/// with equal atoms merged.
class SheafSum {
  public:
    using Term = std::pair<SheafAtom, std::int64_t>;

    SheafSum() = default;
    SheafSum(std::initializer_list<Term> terms) {
        for (const auto &[atom, mult] : terms)
            add(atom, mult);
    }

    static SheafSum of(SheafAtom atom, std::int64_t mult = 1) {
        SheafSum s;
        s.add(atom, mult);
        return s;
    }

    void add(SheafAtom atom, std::int64_t mult) {
        if (mult < 1)
            throw Error("multiplicity must be positive, got " + std::to_string(mult));
        auto it = std::lower_bound(terms_.begin(), terms_.end(), atom,
                                   [](const Term &t, const SheafAtom &a) { return t.first < a; });
        if (it != terms_.end() && it->first == atom)
            it->second += mult;
        else
            terms_.insert(it, {atom, mult});
    }

    void add(const SheafSum &other) {
        for (const auto &[atom, mult] : other.terms_)
            add(atom, mult);
    }

    const std::vector<Term> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    std::int64_t rank(int dim) const {
        std::int64_t r = 0;
        for (const auto &[atom, mult] : terms_)
            r += mult * atom_rank(atom, dim);
        return r;
    }

    SheafSum twisted(std::int64_t t) const {
        SheafSum s;
        for (const auto &[atom, mult] : terms_)
            s.terms_.push_back({atom.twisted(t), mult});
        return s;
    }

    friend bool operator==(const SheafSum &, const SheafSum &) = default;

  private:
    std::vector<Term> terms_;
};

/// Shape of an exact complex 0 -> F_k -> ... -> F_1 -> F_0 -> presented -> 0.
///
/// Only the terms are recorded, never the differentials. terms()[i] is F_i, so
/// index 0 is the term adjacent to the presented sheaf. Exactness is taken on
/// trust from whoever built the complex.
class FreeComplex {
  public:
    FreeComplex() = default;
    FreeComplex(std::vector<SheafSum> terms, std::string presented = "E", int dim = 3)
        : terms_(std::move(terms)), presented_(std::move(presented)), dim_(dim) {
        if (terms_.empty())
            throw Error("a complex needs at least one term");
        if (dim_ < 1)
            throw DimensionMismatch("ambient dimension must be positive");
        for (const auto &sum : terms_)
            for (const auto &[atom, mult] : sum.terms())
                require_atom_dimension(atom, dim_);
    }

    const std::vector<SheafSum> &terms() const { return terms_; }
    const SheafSum &term(std::size_t i) const { return terms_.at(i); }
    std::size_t length() const { return terms_.size(); }
    const std::string &presented() const { return presented_; }
    int dim() const { return dim_; }
    bool exact() const { return true; }

    friend bool operator==(const FreeComplex &, const FreeComplex &) = default;

  private:
    std::vector<SheafSum> terms_;
    std::string presented_ = "E";
    int dim_ = 3;
};

/// Twist every atom by t; the result presents the t-twist of the presented sheaf.
inline FreeComplex twist_complex(const FreeComplex &c, std::int64_t t) {
    if (t == 0)
        return c;
    std::vector<SheafSum> terms;
    terms.reserve(c.length());
    for (const auto &sum : c.terms())
        terms.push_back(sum.twisted(t));
    std::string name = c.presented() + "(" + std::to_string(t) + ")";
    return FreeComplex(std::move(terms), std::move(name), c.dim());
}

/// Replace each T(a) by its Euler resolution 0 -> O(a) -> 4O(a+1) -> T(a) -> 0,
/// spliced one position higher. Leaves line bundles and cotangent atoms alone.
inline FreeComplex resolve_tangents(const FreeComplex &c) {
    std::vector<SheafSum> terms(c.length());
    for (std::size_t i = 0; i < c.length(); ++i) {
        for (const auto &[atom, mult] : c.term(i).terms()) {
            if (atom.kind != AtomKind::Tangent) {
                terms[i].add(atom, mult);
                continue;
            }
            terms[i].add(SheafAtom::line(atom.twist + 1), 4 * mult);
            if (terms.size() <= i + 1)
                terms.resize(i + 2);
            terms[i + 1].add(SheafAtom::line(atom.twist), mult);
        }
    }
    return FreeComplex(std::move(terms), c.presented(), c.dim());
}

} // namespace sheafcalc
