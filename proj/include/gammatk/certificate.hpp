#pragma once

#include <string>
#include <vector>

namespace gammatk {

enum class Verdict { Pass, Fail, Inconclusive };

/// One named numeric check inside a certificate.
struct Check {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool ok = false;
};

/// Machine-readable verdict object. Pass iff every check is within its
/// threshold; verdicts carry the numeric witnesses and the tolerances used.
struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Check> checks;
    std::string notes;

    /// Records measured <= threshold and updates nothing else.
    Check& add_check(const std::string& name, double measured, double threshold);
    /// Records an already-decided pass/fail (for structural checks).
    Check& add_flag(const std::string& name, bool ok);

    /// Sets verdict = Pass iff all checks passed, Fail otherwise.
    void finalize();

    bool passed() const { return verdict == Verdict::Pass; }
    const Check* find(const std::string& name) const;
};

std::string to_string(Verdict v);

}  // namespace gammatk
