#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace cusp {

/// One verified identity: a short anchor string, the verdict, and a
/// verbatim witness when it fails.
struct CheckResult {
    std::string identity;
    bool pass = false;
    std::string witness;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

using CheckList = std::vector<CheckResult>;

inline bool all_pass(const CheckList& checks)
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

inline void append(CheckList& into, const CheckList& more)
{
    into.insert(into.end(), more.begin(), more.end());
}

} // namespace cusp
