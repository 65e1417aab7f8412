#include "dcsim/behaviors.hpp"

#include <algorithm>

#include "dcsim/errors.hpp"

namespace dcsim {

const char* to_string(Behavior behavior)
{
    switch (behavior) {
    case Behavior::Rigid: return "rigid";
    case Behavior::Renounce: return "renounce";
    case Behavior::Delay: return "delay";
    case Behavior::Degrad: return "degrad";
    case Behavior::Reconfig: return "reconfig";
    }
    return "?";
}

Behavior parse_behavior(const std::string& name)
{
    if (name == "rigid") return Behavior::Rigid;
    if (name == "renounce") return Behavior::Renounce;
    if (name == "delay") return Behavior::Delay;
    if (name == "degrad") return Behavior::Degrad;
    if (name == "reconfig") return Behavior::Reconfig;
    throw ConfigError("unknown behavior: '" + name + "'");
}

Behavior BehaviorAssignment::resolve(const std::string& user) const
{
    const auto it = per_user.find(user);
    return it == per_user.end() ? default_behavior : it->second;
}

std::optional<Job> apply_behavior(const Job& job, Behavior behavior,
                                  const DemandResponseWindow& window)
{
    if (!window.contains(job.submit_time))
        return job;

    switch (behavior) {
    case Behavior::Rigid:
        return job;
    case Behavior::Renounce:
        return std::nullopt;
    case Behavior::Delay: {
        Job out = job;
        out.submit_time = window.end;
        return out;
    }
    case Behavior::Degrad: {
        Job out = job;
        out.size = (job.size + 1) / 2; // size 1 stays 1
        return out;
    }
    case Behavior::Reconfig: {
        Job out = job;
        out.size = (job.size + 1) / 2;
        // Perfect speedup: stretch the duration to keep size * time constant.
        out.execution_time = job.size * job.execution_time / out.size;
        return out;
    }
    }
    return job;
}

ExperimentWorkload transform_workload(const ExperimentWorkload& workload,
                                      const BehaviorAssignment& assignment)
{
    ExperimentWorkload out;
    out.horizon = workload.horizon;
    out.window = workload.window;
    out.jobs.jobs.reserve(workload.jobs.size());

    for (const Job& job : workload.jobs.jobs) {
        auto transformed = apply_behavior(job, assignment.resolve(job.user), workload.window);
        if (transformed)
            out.jobs.jobs.push_back(std::move(*transformed));
    }
    out.jobs.sort();
    return out;
}

} // namespace dcsim
