#pragma once

#include <string>
#include <vector>

namespace ffgs {

// One verified condition: name, verdict, and where it first failed.
struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    void add(const std::string& name, bool pass, const std::string& detail = "")
    {
        checks.push_back(Check{name, pass, detail});
    }

    bool ok() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }

    std::string first_failure() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
        return "";
    }
};

}  // namespace ffgs
