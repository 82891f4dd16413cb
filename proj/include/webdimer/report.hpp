#pragma once

#include <string>
#include <vector>

namespace webdimer {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample payload or note
};

struct Report {
    std::vector<Check> checks;
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

}  // namespace webdimer
