#include "tconv/record.hpp"

namespace tconv {

nlohmann::json OutputRecord::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    nlohmann::json checks_obj = nlohmann::json::object();
    for (const auto& c : checks) {
        checks_obj[c.name] = c.pass;
    }
    j["checks"] = checks_obj;
    return j;
}

bool OutputRecord::all_checks_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

}  // namespace tconv
