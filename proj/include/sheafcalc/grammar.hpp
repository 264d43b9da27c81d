#pragma once

#include "sheafcalc/chow_ring.hpp"
#include "sheafcalc/numeric.hpp"
#include "sheafcalc/sheaf.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sheafcalc {

// Complex grammar:
//
//   complex := "0" "->" sum ("->" sum)* "->" name "->" "0"
//   sum     := term ("+" term)*
//   term    := [mult] ("O" | "T" | "Om") ["(" int ")"]
//
// The leftmost sum is the highest homological position; the sum written next
// to the name is position 0. Whitespace is ignored everywhere.

namespace detail {

class Cursor {
  public:
    Cursor(std::string_view text, std::size_t begin, std::size_t end) : text_(text), pos_(begin), end_(end) {}

    void skip_ws() {
        while (pos_ < end_ && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= end_;
    }
    char peek() {
        skip_ws();
        return pos_ < end_ ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char *what) {
        if (!accept(c))
            fail(std::string("expected ") + what);
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    std::int64_t integer() {
        skip_ws();
        const std::size_t start = pos_;
        std::int64_t value = 0;
        while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > (std::int64_t{1} << 40))
                fail("integer too large");
            ++pos_;
        }
        if (pos_ == start)
            fail("expected an integer");
        return value;
    }

    std::int64_t signed_integer() {
        if (accept('-'))
            return -integer();
        accept('+');
        return integer();
    }

    [[noreturn]] void fail(const std::string &message) const {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(message, line, col);
    }

    std::size_t pos() const { return pos_; }

  private:
    std::string_view text_;
    std::size_t pos_;
    std::size_t end_;
};

inline SheafSum parse_sum(std::string_view text, std::size_t begin, std::size_t end, int dim) {
    Cursor cur(text, begin, end);
    SheafSum sum;
    do {
        if (cur.peek() == '-')
            cur.fail("negative multiplicity");
        std::int64_t mult = 1;
        if (cur.at_digit()) {
            mult = cur.integer();
            if (mult == 0)
                cur.fail("multiplicity must be positive");
        }
        AtomKind kind = AtomKind::LineBundle;
        if (cur.accept('O')) {
            kind = cur.accept('m') ? AtomKind::Cotangent : AtomKind::LineBundle;
        } else if (cur.accept('T')) {
            kind = AtomKind::Tangent;
        } else {
            cur.fail("expected O, T or Om");
        }
        if (kind != AtomKind::LineBundle && dim != 3)
            cur.fail("T and Om atoms are only supported on P^3");
        std::int64_t a = 0;
        if (cur.accept('(')) {
            a = cur.signed_integer();
            cur.expect(')', "')'");
        }
        sum.add(SheafAtom{kind, a}, mult);
    } while (cur.accept('+'));
    if (!cur.done())
        cur.fail("unexpected character");
    return sum;
}

} // namespace detail

inline FreeComplex parse_complex(std::string_view text, int dim = 3) {
    // Split at top-level "->".
    std::vector<std::pair<std::size_t, std::size_t>> pieces;
    std::size_t start = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] == '-' && text[i + 1] == '>') {
            pieces.emplace_back(start, i);
            start = i + 2;
            ++i;
        }
    }
    pieces.emplace_back(start, text.size());

    auto trimmed = [&](std::size_t b, std::size_t e) {
        std::string out;
        for (std::size_t i = b; i < e; ++i)
            if (!std::isspace(static_cast<unsigned char>(text[i])))
                out += text[i];
        return out;
    };
    auto fail_at = [&](std::size_t b, const std::string &msg) {
        detail::Cursor cur(text, b, text.size());
        cur.skip_ws();
        cur.fail(msg);
    };

    if (pieces.size() < 4)
        fail_at(0, "expected '0 -> <sum> -> ... -> <name> -> 0'");
    if (trimmed(pieces.front().first, pieces.front().second) != "0")
        fail_at(pieces.front().first, "complex must start with '0 ->'");
    if (trimmed(pieces.back().first, pieces.back().second) != "0")
        fail_at(pieces.back().first, "complex must end with '-> 0'");
    const auto &name_piece = pieces[pieces.size() - 2];
    std::string name = trimmed(name_piece.first, name_piece.second);
    if (name.empty())
        fail_at(name_piece.first, "missing name of the presented sheaf");

    std::vector<SheafSum> terms;
    for (std::size_t k = pieces.size() - 3; k >= 1; --k) {
        if (trimmed(pieces[k].first, pieces[k].second).empty())
            fail_at(pieces[k].first, "empty term");
        terms.push_back(detail::parse_sum(text, pieces[k].first, pieces[k].second, dim));
    }
    return FreeComplex(std::move(terms), std::move(name), dim);
}

inline std::string format_atom(const SheafAtom &atom) {
    std::string out;
    switch (atom.kind) {
    case AtomKind::LineBundle:
        out = "O";
        break;
    case AtomKind::Tangent:
        out = "T";
        break;
    case AtomKind::Cotangent:
        out = "Om";
        break;
    }
    if (atom.kind != AtomKind::LineBundle || atom.twist != 0)
        out += "(" + std::to_string(atom.twist) + ")";
    return out;
}

inline std::string format_sum(const SheafSum &sum) {
    if (sum.empty())
        return "0";
    std::string out;
    for (const auto &[atom, mult] : sum.terms()) {
        if (!out.empty())
            out += " + ";
        if (mult != 1)
            out += std::to_string(mult);
        out += format_atom(atom);
    }
    return out;
}

inline std::string format_complex(const FreeComplex &complex) {
    std::string out = "0";
    for (std::size_t i = complex.length(); i-- > 0;)
        out += " -> " + format_sum(complex.term(i));
    out += " -> " + complex.presented() + " -> 0";
    return out;
}

/// "1 + 3h + 6h^2 + 12h^3"; zero terms dropped except the constant.
inline std::string format_chow(const ChowClass &c) {
    std::string out = c[0].str();
    for (std::size_t k = 1; k < c.coeffs().size(); ++k) {
        const Integer &x = c[k];
        if (x == 0)
            continue;
        out += x < 0 ? " - " : " + ";
        const Integer mag = x < 0 ? Integer(-x) : x;
        if (mag != 1)
            out += mag.str();
        out += "h";
        if (k > 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

/// Accepts "1 3 9 27", "1,3,9,27" or "1 + 3h + 9h^2 + 27h^3".
inline ChowClass parse_chow(std::string_view text, int dim = 3) {
    std::vector<Integer> coeffs(static_cast<std::size_t>(dim) + 1);
    detail::Cursor cur(text, 0, text.size());
    if (text.find('h') == std::string_view::npos) {
        std::size_t k = 0;
        while (!cur.done()) {
            if (k > static_cast<std::size_t>(dim))
                cur.fail("too many coefficients for P^" + std::to_string(dim));
            coeffs[k++] = cur.signed_integer();
            cur.accept(',');
        }
        if (k == 0)
            cur.fail("expected coefficients");
        return ChowClass(dim, std::move(coeffs));
    }
    bool first = true;
    while (!cur.done()) {
        std::int64_t sign = 1;
        if (cur.accept('-'))
            sign = -1;
        else if (!cur.accept('+') && !first)
            cur.fail("expected '+' or '-'");
        first = false;
        std::int64_t coeff = 1;
        bool had_coeff = false;
        if (cur.at_digit()) {
            coeff = cur.integer();
            had_coeff = true;
            cur.accept('*');
        }
        std::int64_t power = 0;
        if (cur.accept('h')) {
            power = 1;
            if (cur.accept('^'))
                power = cur.integer();
        } else if (!had_coeff) {
            cur.fail("expected a coefficient or h");
        }
        if (power > dim)
            cur.fail("power of h exceeds P^" + std::to_string(dim));
        coeffs[static_cast<std::size_t>(power)] += sign * coeff;
    }
    return ChowClass(dim, std::move(coeffs));
}

} // namespace sheafcalc
