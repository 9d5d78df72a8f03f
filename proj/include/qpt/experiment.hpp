#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qpt {

// Key-value experiment description, parsed from `key = value` lines with `#`
// comments. Validation is strict: unknown keys are rejected with their name,
// requireds are reported together, and randomized experiments must carry a
// seed.
struct ExperimentConfig {
    std::vector<std::pair<std::string, std::string>> entries;

    const std::string* find(const std::string& key) const;
    std::string at(const std::string& key) const;
};

ExperimentConfig parse_config_text(const std::string& text);

struct ExperimentOutcome {
    std::vector<std::string> artifacts;  // paths written, in order
    std::string summary;                 // one line for the console
    bool verdict_negative = false;       // a well-formed run whose answer is "no"
};

// dispatches on the `experiment` key and writes artifacts under the prefix
// (prefix + ".json", prefix + ".csv" where applicable)
ExperimentOutcome run_experiment(const ExperimentConfig& cfg, const std::string& out_prefix);

}  // namespace qpt
