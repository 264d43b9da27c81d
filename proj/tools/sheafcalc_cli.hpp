#pragma once

#include "sheafcalc/sheafcalc.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sheafcalc::cli {

enum ExitCode : int { Ok = 0, VerificationFailed = 1, UsageError = 2, Indeterminate = 3 };

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline BettiTable load_betti(const std::string &path) {
    try {
        return parse_betti(read_file(path));
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline std::pair<std::int64_t, std::int64_t> parse_pair(const std::string &text, const std::string &flag) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos)
            throw std::invalid_argument(text);
        std::size_t used = 0;
        const auto a = std::stoll(text.substr(0, comma), &used);
        if (used != comma)
            throw std::invalid_argument(text);
        const auto rest = text.substr(comma + 1);
        const auto b = std::stoll(rest, &used);
        if (used != rest.size())
            throw std::invalid_argument(text);
        return {a, b};
    } catch (const std::exception &) {
        throw ParseError(flag + " expects two comma-separated integers, got '" + text + "'");
    }
}

/// Recorded claims for a liaison problem, looked up in the registry by data.
inline std::vector<std::string> liaison_notes(std::int64_t d1, std::int64_t d2, const CurveClass &y,
                                              const LiaisonResult &res) {
    std::vector<std::string> notes;
    Registry reg;
    try {
        reg = load_registry(default_registry_path());
    } catch (const Error &) {
        return notes;
    }
    for (const auto &x : reg.exclusions) {
        if (!x.ci || !((x.ci->first == d1 && x.ci->second == d2) || (x.ci->first == d2 && x.ci->second == d1)))
            continue;
        std::optional<CurveClass> subject = x.curve;
        if (!subject && !x.components.empty())
            subject = CurveClass::disjoint_union(x.components);
        if (!subject || subject->degree() != y.degree() || subject->genus() != y.genus())
            continue;
        for (const auto &c : x.checks) {
            if (c.kind != "residue" || c.args.size() != 5)
                continue;
            const CurveClass claimed(std::stoll(c.args[3]), std::stoll(c.args[4]));
            if (claimed.degree() != res.residue.degree() || claimed.genus() != res.residue.genus())
                notes.push_back("divergence: " + x.label + " records chi=" + hilbert_poly(claimed).str() +
                                " from the source; both routes give chi=" + res.chi.str());
        }
    }
    return notes;
}

inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Chern classes, cohomology and liaison bookkeeping for sheaves on projective space"};
    app.name("sheafcalc");
    app.require_subcommand(1);

    std::string complex_text, file, coeffs, ci_text, curve_text, format = "text", registry_path;
    std::int64_t twist_by = 0, at = 0, dim = 3, rank = 0, bound = 10, entry = 0;
    std::optional<std::int64_t> omega;
    bool have_twist = false, have_at = false, ci_hint = false, strict = false;

    auto *chern = app.add_subcommand("chern", "total Chern class and rank of the presented sheaf");
    chern->add_option("complex", complex_text, "complex, e.g. \"0 -> O(-3) -> 4O -> E -> 0\"")->required();
    chern->add_option("--twist", twist_by, "report E(k) instead of E");
    chern->add_option("--dim", dim, "ambient P^n, n <= 6 (T and Om need n = 3)")->check(CLI::Range(1, 6));

    auto *chi = app.add_subcommand("chi", "Euler characteristic of E(t)");
    chi->add_option("complex", complex_text, "complex")->required();
    chi->add_option("--at", at, "evaluate at t");
    chi->add_option("--dim", dim, "ambient P^n")->check(CLI::Range(1, 6));

    auto *h0 = app.add_subcommand("h0", "h^0(E(t)) when the resolution determines it");
    h0->add_option("complex", complex_text, "complex")->required();
    h0->add_option("--at", at, "twist t")->required();
    h0->add_option("--dim", dim, "ambient P^n")->check(CLI::Range(1, 6));

    auto *b2h = app.add_subcommand("betti2hilb", "Hilbert polynomial of a curve from its Betti table");
    b2h->add_option("file", file, "Betti table file")->required();

    auto *reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of an ideal sheaf");
    reg->add_option("file", file, "Betti table file")->required();

    auto *gg = app.add_subcommand("ggcheck", "global generation of I_Y(m)");
    gg->add_option("file", file, "Betti table file")->required();
    gg->add_option("--twist", twist_by, "m")->required();
    gg->add_flag("--ci", ci_hint, "ideal sheaf is generated in its generator degrees");

    auto *liaison = app.add_subcommand("liaison", "residual curve in a complete intersection");
    liaison->add_option("--ci", ci_text, "d1,d2")->required();
    liaison->add_option("--curve", curve_text, "d,pa")->required();
    liaison->add_option("--omega", omega, "omega_Y = O_Y(e)");

    auto *factor = app.add_subcommand("factor", "split off factors 1 + a h");
    factor->add_option("coeffs", coeffs, "\"1 3 9 27\" or \"1 + 3h + 9h^2 + 27h^3\"")->required();
    factor->add_option("--rank", rank, "rank r")->required();
    factor->add_option("--bound", bound, "search |a| <= B");
    factor->add_option("--dim", dim, "ambient P^n")->check(CLI::Range(1, 6));

    auto *verify = app.add_subcommand("verify", "replay the registry");
    verify->add_option("--entry", entry, "only entry k")->check(CLI::Range(1, 9));
    verify->add_flag("--strict", strict, "treat divergence annotations as failures");
    verify->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    verify->add_option("--registry", registry_path, "registry file (default $SHEAFCALC_REGISTRY)");

    auto *excl = app.add_subcommand("exclusions", "list excluded cases with their replayed verdicts");
    excl->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    excl->add_option("--registry", registry_path, "registry file");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : UsageError;
    }
    have_twist = chern->count("--twist") > 0;
    have_at = chi->count("--at") > 0;

    try {
        if (*chern) {
            const FreeComplex c = parse_complex(complex_text, static_cast<int>(dim));
            const std::int64_t r = rank_of_complex(c);
            ChowClass cc = chern_from_complex(c);
            if (have_twist)
                cc = twist(cc, r, twist_by);
            out << "rank " << r << "; " << format_chow(cc) << "\n";
            return Ok;
        }
        if (*chi) {
            const FreeComplex c = parse_complex(complex_text, static_cast<int>(dim));
            const Polynomial p = chi_complex_poly(c);
            if (have_at)
                out << to_string(p(at)) << "\n";
            else
                out << p.str() << "\n";
            return Ok;
        }
        if (*h0) {
            const FreeComplex c = parse_complex(complex_text, static_cast<int>(dim));
            const H0Result r = h0_from_resolution(c, at);
            if (!r.determinate()) {
                out << "indeterminate\n";
                err << "reason: " << r.reason << "\n";
                return Indeterminate;
            }
            out << r.value->str() << "\n";
            return Ok;
        }
        if (*b2h) {
            out << hilb_from_betti(load_betti(file)).str() << "\n";
            return Ok;
        }
        if (*reg) {
            out << regularity(load_betti(file)) << "\n";
            return Ok;
        }
        if (*gg) {
            const GgCheck v = gg_twist_check(load_betti(file), twist_by, ci_hint);
            out << to_string(v.verdict) << " (" << v.reason << ")\n";
            return v.verdict == GgVerdict::Unknown ? Indeterminate : Ok;
        }
        if (*liaison) {
            const auto [d1, d2] = parse_pair(ci_text, "--ci");
            const auto [d, pa] = parse_pair(curve_text, "--curve");
            const CurveClass y(d, pa, omega);
            const LiaisonResult res = liaison_residue(d1, d2, y);
            out << "residue: d=" << res.residue.degree() << " pa=" << res.residue.genus() << " chi=" << res.chi.str()
                << "\n";
            for (const auto &note : liaison_notes(d1, d2, y, res))
                out << note << "\n";
            return Ok;
        }
        if (*factor) {
            const ChowClass c = parse_chow(coeffs, static_cast<int>(dim));
            const auto fs = factor_line(c, rank, bound);
            if (fs.empty())
                out << "none\n";
            for (const auto &f : fs)
                out << "(" << format_chow(ChowClass::linear(f.a, c.dim())) << ")(" << format_chow(f.quotient) << ")\n";
            return Ok;
        }
        if (*verify || *excl) {
            const Registry r = load_registry(registry_path.empty() ? default_registry_path() : registry_path);
            Report rep;
            if (*excl)
                rep = list_exclusions(r);
            else
                rep = entry ? verify_entry(r, static_cast<int>(entry)) : verify_all(r);
            out << (format == "structured" ? render_structured(rep, strict) : render_text(rep, strict));
            return rep.passed(strict) ? Ok : VerificationFailed;
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
    return UsageError;
}

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace sheafcalc::cli
