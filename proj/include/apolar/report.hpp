#ifndef APOLAR_REPORT_HPP
#define APOLAR_REPORT_HPP

#include <string>
#include <vector>

namespace apolar {

// Named sub-check results collected by the verification routines.
struct SubCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Report {
    std::vector<SubCheck> checks;

    void add(std::string name, bool ok, std::string detail = {})
    {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }

    void merge(const Report& other, const std::string& prefix = {})
    {
        for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.ok, c.detail});
    }

    bool ok() const
    {
        if (checks.empty()) return false;
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }

    std::vector<std::string> failures() const
    {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.ok) out.push_back(c.name);
        return out;
    }

    const SubCheck* find(const std::string& name) const
    {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

} // namespace apolar

#endif
