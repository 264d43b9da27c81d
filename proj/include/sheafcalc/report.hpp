#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sheafcalc {

struct CheckResult {
    std::string scope; // "entry:3", "exclusion:two-disjoint-conics", "identity", "registry"
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
    std::string note;
    bool divergence = false; // source value differs from the recomputed one
};

class Report {
  public:
    void add(CheckResult r) { results_.push_back(std::move(r)); }
    void append(const Report &other) { results_.insert(results_.end(), other.results_.begin(), other.results_.end()); }

    const std::vector<CheckResult> &results() const { return results_; }

    /// Divergences count as failures only when strict.
    bool passed(bool strict = false) const {
        for (const auto &r : results_)
            if (!r.pass || (strict && r.divergence))
                return false;
        return true;
    }

    bool scope_passed(const std::string &scope, bool strict = false) const {
        for (const auto &r : results_)
            if (r.scope == scope && (!r.pass || (strict && r.divergence)))
                return false;
        return true;
    }

    std::size_t divergences() const {
        std::size_t n = 0;
        for (const auto &r : results_)
            n += r.divergence ? 1 : 0;
        return n;
    }

    std::vector<std::string> scopes() const {
        std::vector<std::string> out;
        for (const auto &r : results_)
            if (out.empty() || out.back() != r.scope)
                out.push_back(r.scope);
        return out;
    }

  private:
    std::vector<CheckResult> results_;
};

inline std::string status_word(const CheckResult &r, bool strict) {
    if (!r.pass)
        return "FAIL";
    if (r.divergence)
        return strict ? "FAIL" : "NOTE";
    return "PASS";
}

/// Human readable: one line per check, then per-kind totals and the verdict.
inline std::string render_text(const Report &report, bool strict = false) {
    std::string out;
    std::size_t entries = 0, entries_ok = 0, exclusions = 0, exclusions_ok = 0;
    for (const auto &scope : report.scopes()) {
        const bool ok = report.scope_passed(scope, strict);
        if (scope.rfind("entry:", 0) == 0) {
            ++entries;
            entries_ok += ok;
        } else if (scope.rfind("exclusion:", 0) == 0) {
            ++exclusions;
            exclusions_ok += ok;
        }
    }
    for (const auto &r : report.results()) {
        out += "[" + status_word(r, strict) + "] " + r.scope + " " + r.name + ": ";
        if (r.pass)
            out += r.actual;
        else
            out += "expected " + r.expected + ", got " + r.actual;
        if (!r.note.empty())
            out += " (" + r.note + ")";
        out += "\n";
    }
    if (entries > 0)
        out += std::to_string(entries_ok) + "/" + std::to_string(entries) + " entries PASS\n";
    if (exclusions > 0)
        out += std::to_string(exclusions_ok) + "/" + std::to_string(exclusions) + " exclusions PASS\n";
    if (report.divergences() > 0)
        out += std::to_string(report.divergences()) + " divergence annotation(s)" +
               (strict ? " treated as failures\n" : "\n");
    out += report.passed(strict) ? "RESULT PASS\n" : "RESULT FAIL\n";
    return out;
}

/// One record per line, tab-separated key=value fields in a fixed order.
inline std::string render_structured(const Report &report, bool strict = false) {
    auto clean = [](std::string s) {
        for (auto &c : s)
            if (c == '\t' || c == '\n')
                c = ' ';
        return s;
    };
    std::string out;
    for (const auto &r : report.results()) {
        out += "record=check\tscope=" + r.scope + "\tname=" + r.name + "\tstatus=" + status_word(r, strict) +
               "\texpected=" + clean(r.expected) + "\tactual=" + clean(r.actual) +
               "\tdivergence=" + (r.divergence ? "yes" : "no") + "\tnote=" + clean(r.note) + "\n";
    }
    out += "record=summary\tchecks=" + std::to_string(report.results().size()) +
           "\tdivergences=" + std::to_string(report.divergences()) + "\tstrict=" + (strict ? "yes" : "no") +
           "\tresult=" + (report.passed(strict) ? "PASS" : "FAIL") + "\n";
    return out;
}

} // namespace sheafcalc
