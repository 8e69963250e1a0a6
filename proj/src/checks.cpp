#include "spectramark/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spectramark {

const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

BoundEntry make_bound(std::string name, double lhs, double rhs, std::string cited, std::optional<std::size_t> node,
                      std::optional<std::size_t> frequency, bool strict) {
    BoundEntry e;
    e.name = std::move(name);
    e.node = node;
    e.frequency = frequency;
    e.lhs = lhs;
    e.rhs = rhs;
    e.slack = rhs - lhs;
    e.cited = std::move(cited);
    e.strict = strict;
    bool ok;
    if (!std::isfinite(e.slack))
        ok = false;
    else if (strict)
        ok = e.slack > bound_abs_tol;
    else
        ok = e.slack >= -(bound_abs_tol + bound_rel_tol * std::max(std::abs(lhs), std::abs(rhs)));
    e.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return e;
}

BoundEntry skipped_bound(std::string name, std::string reason, std::string cited, std::optional<std::size_t> node,
                         std::optional<std::size_t> frequency) {
    BoundEntry e;
    e.name = std::move(name);
    e.reason = std::move(reason);
    e.cited = std::move(cited);
    e.node = node;
    e.frequency = frequency;
    e.status = CheckStatus::skipped;
    e.lhs = e.rhs = e.slack = std::numeric_limits<double>::quiet_NaN();
    return e;
}

void BoundReport::append(const BoundReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

std::size_t BoundReport::count(CheckStatus s) const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [s](const BoundEntry& e) { return e.status == s; }));
}

std::size_t BoundReport::count(CheckStatus s, const std::string& prefix) const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [&](const BoundEntry& e) {
        return e.status == s && e.name.compare(0, prefix.size(), prefix) == 0;
    }));
}

double BoundReport::worst_slack() const {
    double w = std::numeric_limits<double>::infinity();
    for (const auto& e : entries)
        if (e.status != CheckStatus::skipped) w = std::min(w, e.slack);
    return w;
}

std::vector<const BoundEntry*> BoundReport::failures() const {
    std::vector<const BoundEntry*> out;
    for (const auto& e : entries)
        if (e.status == CheckStatus::fail) out.push_back(&e);
    return out;
}

void IdentityReport::add(std::string name, std::string scope, double residual, double tolerance, std::string cited) {
    const bool ok = std::isfinite(residual) && residual <= tolerance;
    checks.push_back({std::move(name), std::move(scope), residual, tolerance, ok, std::move(cited)});
}

void IdentityReport::append(const IdentityReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool IdentityReport::all_pass() const { return failures() == 0; }

std::size_t IdentityReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const IdentityCheck& c) { return !c.pass; }));
}

double IdentityReport::max_residual(const std::string& prefix) const {
    double m = 0.0;
    for (const auto& c : checks)
        if (c.name.compare(0, prefix.size(), prefix) == 0) m = std::max(m, c.residual);
    return m;
}

} // namespace spectramark
