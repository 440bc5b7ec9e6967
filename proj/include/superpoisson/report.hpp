/*
 * report.hpp -- pass/fail bookkeeping for the axiom and theorem checkers.
 *
 * A Report is an ordered list of named results.  Skipped checks carry the
 * reason in `detail` and do not count against all_passed().
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace superpoisson {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail; // witness on failure, reason on skip, empty otherwise
};

struct Report {
    std::vector<CheckResult> checks;
    long long wall_ms = -1; // suite duration; negative when not measured

    void pass(std::string name, std::string detail = {})
    {
        checks.push_back({std::move(name), CheckStatus::Pass, std::move(detail)});
    }

    void fail(std::string name, std::string detail)
    {
        checks.push_back({std::move(name), CheckStatus::Fail, std::move(detail)});
    }

    void skip(std::string name, std::string reason)
    {
        checks.push_back({std::move(name), CheckStatus::Skip, std::move(reason)});
    }

    void add(std::string name, bool ok, std::string witness)
    {
        if (ok)
            pass(std::move(name));
        else
            fail(std::move(name), std::move(witness));
    }

    void append(const Report& other)
    {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    // prefix every check name of `other` with "<prefix>."
    void append(const std::string& prefix, const Report& other)
    {
        for (CheckResult r : other.checks) {
            r.name = prefix + "." + r.name;
            checks.push_back(std::move(r));
        }
    }

    bool all_passed() const
    {
        for (const auto& r : checks)
            if (r.status == CheckStatus::Fail)
                return false;
        return true;
    }

    const CheckResult* find(const std::string& name) const
    {
        for (const auto& r : checks)
            if (r.name == name)
                return &r;
        return nullptr;
    }
};

} // namespace superpoisson
