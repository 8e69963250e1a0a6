#pragma once

#include <optional>
#include <string>
#include <vector>

namespace spectramark {

enum class CheckStatus { pass, fail, skipped };
const char* to_string(CheckStatus s);

/// Inequality lhs <= rhs (or lhs < rhs when strict), with oriented slack rhs - lhs.
struct BoundEntry {
    std::string name;
    std::optional<std::size_t> node;      ///< 0-based
    std::optional<std::size_t> frequency; ///< 0-based
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    CheckStatus status = CheckStatus::pass;
    std::string reason; ///< machine-readable code for skipped entries
    std::string cited;  ///< the inequality as a formula
    bool strict = false;
};

inline constexpr double bound_abs_tol = 1e-9;
inline constexpr double bound_rel_tol = 1e-9;

/// Pass iff slack >= -(1e-9 + 1e-9 max(|lhs|,|rhs|)); strict entries need slack > 1e-9.
BoundEntry make_bound(std::string name, double lhs, double rhs, std::string cited, std::optional<std::size_t> node = {},
                      std::optional<std::size_t> frequency = {}, bool strict = false);
BoundEntry skipped_bound(std::string name, std::string reason, std::string cited, std::optional<std::size_t> node = {},
                         std::optional<std::size_t> frequency = {});

struct BoundReport {
    std::vector<BoundEntry> entries;

    void add(BoundEntry e) { entries.push_back(std::move(e)); }
    void append(const BoundReport& other);
    std::size_t count(CheckStatus s) const;
    std::size_t count(CheckStatus s, const std::string& name_prefix) const;
    bool all_pass() const { return count(CheckStatus::fail) == 0; }
    /// Smallest slack over non-skipped entries (+inf if none).
    double worst_slack() const;
    std::vector<const BoundEntry*> failures() const;
};

/// Equality check: residual <= tolerance.
struct IdentityCheck {
    std::string name;
    std::string scope;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    std::string cited;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    void add(std::string name, std::string scope, double residual, double tolerance, std::string cited);
    void append(const IdentityReport& other);
    bool all_pass() const;
    std::size_t failures() const;
    /// Largest residual among checks whose name starts with prefix.
    double max_residual(const std::string& name_prefix) const;
};

} // namespace spectramark
