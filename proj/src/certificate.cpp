#include "gammatk/certificate.hpp"

#include <algorithm>

namespace gammatk {

Check& Certificate::add_check(const std::string& name, double measured, double threshold) {
    checks.push_back(Check{name, measured, threshold, measured <= threshold});
    return checks.back();
}

Check& Certificate::add_flag(const std::string& name, bool ok) {
    checks.push_back(Check{name, ok ? 0.0 : 1.0, 0.0, ok});
    return checks.back();
}

void Certificate::finalize() {
    const bool all = std::all_of(checks.begin(), checks.end(),
                                 [](const Check& c) { return c.ok; });
    verdict = all ? Verdict::Pass : Verdict::Fail;
}

const Check* Certificate::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "Pass";
        case Verdict::Fail: return "Fail";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

}  // namespace gammatk
