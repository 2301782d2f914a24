#pragma once
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace lefschetz {

// Structured pass/fail evidence: one row per checked sub-case, with enough
// data to re-run that case by hand.
struct VerificationCase {
    std::string label;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerificationReport {
    std::string theorem_id;
    nlohmann::json params = nlohmann::json::object();
    bool passed = true;
    std::vector<VerificationCase> cases;

    void add(std::string label, std::string expected, std::string actual) {
        bool ok = expected == actual;
        passed = passed && ok;
        cases.push_back({std::move(label), std::move(expected), std::move(actual), ok});
    }
    void add_bool(std::string label, bool ok) {
        passed = passed && ok;
        cases.push_back({std::move(label), "true", ok ? "true" : "false", ok});
    }

    nlohmann::json to_json() const {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : cases)
            cs.push_back({{"case", c.label},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass}});
        return {{"theorem", theorem_id}, {"params", params}, {"passed", passed}, {"cases", cs}};
    }
};

} // namespace lefschetz
