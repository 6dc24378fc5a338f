#ifndef TCONV_RECORD_HPP
#define TCONV_RECORD_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace tconv {

/// Machine-readable result of one CLI invocation.  Serializes with sorted
/// keys; exact rationals travel as "p/q" strings and never pass through
/// floating point.
struct OutputRecord {
    struct CheckEntry {
        std::string name;
        bool pass = false;
        std::string detail;
    };

    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json outputs = nlohmann::json::object();
    std::vector<CheckEntry> checks;

    nlohmann::json to_json() const;

    /// True when every attached check passed (vacuously true when empty).
    bool all_checks_pass() const;
};

}  // namespace tconv

#endif  // TCONV_RECORD_HPP
