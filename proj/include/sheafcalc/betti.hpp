#pragma once

#include "sheafcalc/numeric.hpp"
#include "sheafcalc/polynomial.hpp"
#include "sheafcalc/sheaf.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace sheafcalc {

/// Graded Betti numbers beta_{i,j} of the ideal of a curve in P^3.
///
/// Position i holds beta_{i,j} copies of O(-j), so the ideal sheaf is resolved by
/// 0 -> F_2 -> F_1 -> F_0 -> I_Y -> 0 with F_i = sum_j beta_{i,j} O(-j).
/// Tables are assumed minimal; that is not checked.
class BettiTable {
  public:
    using Key = std::pair<int, std::int64_t>;

    BettiTable() = default;
    explicit BettiTable(std::string subject) : subject_(std::move(subject)) {}
    BettiTable(std::string subject, std::initializer_list<std::tuple<int, std::int64_t, std::int64_t>> entries)
        : subject_(std::move(subject)) {
        for (const auto &[i, j, beta] : entries)
            add(i, j, beta);
        validate();
    }

    void add(int i, std::int64_t j, std::int64_t beta) {
        if (i < 0 || i > 3)
            throw Error("homological index " + std::to_string(i) + " out of range [0, 3]");
        if (beta < 1)
            throw Error("Betti number must be positive, got " + std::to_string(beta));
        entries_[{i, j}] += beta;
    }

    /// Alternating rank sum must be 1 (an ideal sheaf).
    void validate() const {
        if (entries_.empty())
            throw Error("empty Betti table");
        std::int64_t rank = 0;
        for (const auto &[key, beta] : entries_)
            rank += (key.first % 2 == 0) ? beta : -beta;
        if (rank != 1)
            throw Error("Betti table for '" + subject_ + "' has alternating rank " + std::to_string(rank) +
                        ", expected 1");
    }

    const std::string &subject() const { return subject_; }
    void set_subject(std::string s) { subject_ = std::move(s); }
    const std::map<Key, std::int64_t> &entries() const { return entries_; }
    int length() const { return entries_.empty() ? 0 : std::prev(entries_.end())->first.first + 1; }

    friend bool operator==(const BettiTable &, const BettiTable &) = default;

  private:
    std::string subject_;
    std::map<Key, std::int64_t> entries_;
};

/// Resolution of the ideal sheaf I_Y as a FreeComplex.
inline FreeComplex ideal_complex(const BettiTable &table) {
    table.validate();
    std::vector<SheafSum> terms(static_cast<std::size_t>(table.length()));
    for (const auto &[key, beta] : table.entries())
        terms[static_cast<std::size_t>(key.first)].add(SheafAtom::line(-key.second), beta);
    return FreeComplex(std::move(terms), "I_" + table.subject(), 3);
}

/// chi(O_Y(t)) = chi(O(t)) - sum (-1)^i beta_{i,j} chi(O(t - j)).
inline Polynomial hilb_from_betti(const BettiTable &table) {
    table.validate();
    Polynomial p = Polynomial::binomial_in_t(3, 0);
    for (const auto &[key, beta] : table.entries()) {
        const Polynomial term = Polynomial::binomial_in_t(3, -key.second) * Rational(beta);
        if (key.first % 2 == 0)
            p -= term;
        else
            p += term;
    }
    return p;
}

/// Castelnuovo-Mumford regularity of the ideal, max (j - i).
inline std::int64_t regularity(const BettiTable &table) {
    table.validate();
    std::int64_t reg = std::numeric_limits<std::int64_t>::min();
    for (const auto &[key, beta] : table.entries())
        reg = std::max(reg, key.second - key.first);
    return reg;
}

inline std::int64_t max_gen_degree(const BettiTable &table) {
    table.validate();
    std::int64_t deg = std::numeric_limits<std::int64_t>::min();
    for (const auto &[key, beta] : table.entries())
        if (key.first == 0)
            deg = std::max(deg, key.second);
    return deg;
}

enum class GgVerdict { GgCertified, NotGg, Unknown };

inline std::string to_string(GgVerdict v) {
    switch (v) {
    case GgVerdict::GgCertified:
        return "GgCertified";
    case GgVerdict::NotGg:
        return "NotGg";
    case GgVerdict::Unknown:
        return "Unknown";
    }
    return "?";
}

inline GgVerdict parse_gg_verdict(const std::string &s) {
    if (s == "GgCertified")
        return GgVerdict::GgCertified;
    if (s == "NotGg")
        return GgVerdict::NotGg;
    if (s == "Unknown")
        return GgVerdict::Unknown;
    throw ParseError("unknown global generation verdict '" + s + "'");
}

struct GgCheck {
    GgVerdict verdict;
    std::string reason; // generator-degree | regularity | generator-degree-ci | gap
};

/// Global generation of I_Y(m) from the table alone.
///
/// A generator above m rules it out, m >= regularity certifies it. With
/// ci_hint the caller vouches that the ideal sheaf is generated by the
/// table's generators in their own degrees (complete intersections, and more
/// generally minimal resolutions of saturated ideals), so m >= the top
/// generator degree suffices.
inline GgCheck gg_twist_check(const BettiTable &table, std::int64_t m, bool ci_hint = false) {
    const auto gen = max_gen_degree(table);
    if (gen > m)
        return {GgVerdict::NotGg, "generator-degree"};
    if (m >= regularity(table))
        return {GgVerdict::GgCertified, "regularity"};
    if (ci_hint)
        return {GgVerdict::GgCertified, "generator-degree-ci"};
    return {GgVerdict::Unknown, "gap"};
}

// Text format: one "i j beta" record per line, '#' starts a comment, and a
// "# subject: <name>" comment names the table.

inline BettiTable parse_betti(const std::string &text) {
    BettiTable table;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    static const std::string subject_tag = "# subject:";
    while (std::getline(in, line)) {
        ++lineno;
        if (line.rfind(subject_tag, 0) == 0) {
            std::string name = line.substr(subject_tag.size());
            const auto first = name.find_first_not_of(" \t");
            const auto last = name.find_last_not_of(" \t\r");
            table.set_subject(first == std::string::npos ? "" : name.substr(first, last - first + 1));
            continue;
        }
        const auto hash = line.find('#');
        const std::string body = line.substr(0, hash);
        std::istringstream fields(body);
        long long i = 0, j = 0, beta = 0;
        if (!(fields >> i)) {
            if (body.find_first_not_of(" \t\r") != std::string::npos)
                throw ParseError("expected 'i j beta'", lineno, body.find_first_not_of(" \t\r") + 1);
            continue;
        }
        if (!(fields >> j >> beta))
            throw ParseError("expected 'i j beta'", lineno, 1);
        std::string extra;
        if (fields >> extra)
            throw ParseError("trailing text '" + extra + "'", lineno, body.find(extra) + 1);
        try {
            table.add(static_cast<int>(i), j, beta);
        } catch (const Error &e) {
            throw ParseError(e.what(), lineno, 1);
        }
    }
    table.validate();
    return table;
}

inline std::string format_betti(const BettiTable &table) {
    std::string out;
    if (!table.subject().empty())
        out += "# subject: " + table.subject() + "\n";
    for (const auto &[key, beta] : table.entries())
        out += std::to_string(key.first) + " " + std::to_string(key.second) + " " + std::to_string(beta) + "\n";
    return out;
}

} // namespace sheafcalc
