#ifndef HOUGHTON_HARNESS_HPP
#define HOUGHTON_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "houghton/cover.hpp"
#include "houghton/cubical_complex.hpp"

namespace houghton {

using Json = nlohmann::ordered_json;

/// One experiment: a region plus the checks to run on it. Mirrors the CLI
/// flags; a JSON config file supplies the same keys and flags override it.
struct ExperimentConfig {
    std::string name = "experiment";
    int n = 2;
    std::vector<std::int64_t> chi_coeffs; // empty = default (-1,...,-1,0)
    int f_bound = -1;                     // -1 = default 3n-3
    int window = 2;
    std::vector<std::string> seeds;       // canonical encodings; empty = {id} ∪ {tau_i}
    std::vector<std::string> checks;      // empty = all
    int jobs = 1;
    bool timings = false;
    std::vector<int> desc_f_levels;       // empty = defaults {2n, .., 3n-3+n}
    int desc_min_vertices = -1;           // -1 = default by n

    static ExperimentConfig from_json(const Json& j);
    Json to_json() const;

    Character character() const;          // ascending standard form of chi_coeffs
    RegionSpec region_spec() const;       // ambient spec (no chi filter)
    std::vector<EventualInjection> seed_injections() const;
    void validate() const;
};

struct CheckRecord {
    std::string name;
    std::string status; // pass | fail | skipped
    Json details;
    double wall_ms = 0;
};

struct Report {
    Json config_echo;
    Json region_stats;
    std::vector<CheckRecord> checks;
    bool all_pass = true;

    Json to_json(bool with_timings) const;
    std::string to_string(bool with_timings) const;
};

/// All check names, in the order they run.
const std::vector<std::string>& all_check_names();

/// Build the region and run the selected checks. Exit-code semantics are the
/// caller's job: all_pass=false means a check failed. Configuration errors
/// throw ConfigError before any region work; resource-guard trips surface as
/// a failed build record inside the report.
Report run(const ExperimentConfig& config);

/// Rebuild and re-check across a window sweep, reporting whether piece
/// counts, nerve homology and witness flags stabilize, and flagging blanket
/// merges between consecutive windows.
Report stability_sweep(const ExperimentConfig& config, const std::vector<int>& windows);

} // namespace houghton

#endif
