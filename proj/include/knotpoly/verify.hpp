#ifndef KNOTPOLY_VERIFY_HPP
#define KNOTPOLY_VERIFY_HPP

#include <string>
#include <vector>

namespace knotpoly {

struct CheckLine {
    std::string name;
    bool pass;
    std::string note;  // shown for context or on failure
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckLine> lines;
    bool all_passed() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

/// Exact symbolic identity checks (generating function, specialized
/// coefficients, quartic structure, discriminant factorizations, palindromes).
SuiteResult verify_identities();

/// Exact low-m Jones values and the special-point spectra at t = 1, +-i.
SuiteResult verify_values();

/// Numeric locus endpoints against their reference decimal values.
SuiteResult verify_endpoints();

/// Zero-set properties at scale (m = 10, 20, 50).
SuiteResult verify_zero_properties();

/// Runs the named suite ("identities", "values", "endpoints", "zeros") or all.
std::vector<SuiteResult> run_verify_suites(const std::string& which);

} // namespace knotpoly

#endif
