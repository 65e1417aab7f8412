#pragma once

#include <map>
#include <optional>
#include <string>

#include "dcsim/types.hpp"

namespace dcsim {

/// How a user reacts to a demand-response window:
///  - Rigid:    submit as in the original workload (baseline)
///  - Renounce: drop submissions that fall inside the window
///  - Delay:    resubmit them at the end of the window
///  - Degrad:   halve the requested cores (rounded up), same duration
///  - Reconfig: halve the cores but stretch the duration to keep the mass
enum class Behavior { Rigid, Renounce, Delay, Degrad, Reconfig };

const char* to_string(Behavior behavior);
Behavior parse_behavior(const std::string& name); // throws ConfigError

/// Per-user behavior resolution; users without an override use the default.
struct BehaviorAssignment {
    Behavior default_behavior = Behavior::Rigid;
    std::map<std::string, Behavior> per_user;

    Behavior resolve(const std::string& user) const;
};

/// Transform one job. Jobs submitted outside the window pass through
/// unchanged; Renounce drops in-window jobs (returns nullopt). Delayed jobs
/// keep their original submit time as metadata.
std::optional<Job> apply_behavior(const Job& job, Behavior behavior,
                                  const DemandResponseWindow& window);

/// Apply each user's behavior to the whole workload and re-sort the result.
ExperimentWorkload transform_workload(const ExperimentWorkload& workload,
                                      const BehaviorAssignment& assignment);

} // namespace dcsim
