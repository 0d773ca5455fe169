// Structured verification results, shared by every suite.
// Serialized schema: {suite, timestamp, seed, checks: [{name, pass,
// residual, tolerance, notes}]}. The timestamp stays empty unless the caller
// opts in, so identical runs serialize byte-identically.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cptkit {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string notes;
};

struct Report {
    std::string suite;
    std::string timestamp;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    void add(std::string name, bool pass, double residual, double tolerance,
             std::string notes = {})
    {
        checks.push_back({std::move(name), pass, residual, tolerance, std::move(notes)});
    }

    // pass = residual <= tolerance
    void require(std::string name, double residual, double tolerance,
                 std::string notes = {})
    {
        add(std::move(name), residual <= tolerance, residual, tolerance, std::move(notes));
    }

    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }

    double max_residual() const
    {
        double worst = 0.0;
        for (const auto& c : checks)
            worst = c.residual > worst ? c.residual : worst;
        return worst;
    }

    std::vector<std::string> failing() const
    {
        std::vector<std::string> names;
        for (const auto& c : checks)
            if (!c.pass)
                names.push_back(c.name);
        return names;
    }
};

std::string to_json(const Report& report);
std::string to_csv(const Report& report);
void write_text_file(const std::string& path, const std::string& contents);

} // namespace cptkit
