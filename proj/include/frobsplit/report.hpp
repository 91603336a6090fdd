#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frobsplit {

// Deterministic record of one verification run.  Identical
// (check, parameters, seed) produce byte-identical JSON except wall_time_ms.
struct VerificationReport {
    std::string check;
    nlohmann::json parameters = nlohmann::json::object();
    std::optional<std::uint64_t> seed;
    std::uint64_t trials = 0;
    std::vector<nlohmann::json> failures;
    std::uint64_t wall_time_ms = 0;
    std::vector<std::string> notes;

    bool pass() const { return failures.empty(); }

    void fail(nlohmann::json counterexample) {
        failures.push_back(std::move(counterexample));
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["check"] = check;
        j["parameters"] = parameters;
        if (seed) j["seed"] = *seed;
        j["trials"] = trials;
        j["failures"] = failures;
        j["pass"] = pass();
        j["wall_time_ms"] = wall_time_ms;
        if (!notes.empty()) j["notes"] = notes;
        return j;
    }
};

} // namespace frobsplit
