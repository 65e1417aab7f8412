#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dcsim/platform.hpp"
#include "dcsim/types.hpp"

namespace dcsim {

// Kind order doubles as the processing order within a batch: finished jobs
// free their cores and boots complete before newly submitted jobs are seen.
enum class EventKind : int {
    JobFinish = 0,
    BootComplete = 1,
    OffComplete = 2,
    JobSubmit = 3,
};

struct Event {
    double time = 0.0;
    EventKind kind = EventKind::JobSubmit;
    long payload = 0; // job id or machine id
    std::uint64_t seq = 0;
};

/// Total order: (time, kind, payload, seq).
struct EventOrder {
    bool operator()(const Event& a, const Event& b) const;
};

/// Deterministic future-event list.
class EventQueue {
public:
    void push(double time, EventKind kind, long payload);
    bool empty() const { return events_.empty(); }
    double next_time() const;

    /// All events at next_time, in total order.
    std::vector<Event> pop_batch();

private:
    std::set<Event, EventOrder> events_;
    std::uint64_t next_seq_ = 0;
};

struct JobRecord {
    long id = 0;
    std::string user;
    int size = 0;
    double execution_time = 0.0;
    double submit = 0.0;
    double original_submit = 0.0;
    double start = 0.0;
    double finish = 0.0;
    int machine_id = -1;

    double waiting_time() const { return start - submit; }
    double slowdown() const { return (finish - submit) / execution_time; }

    bool operator==(const JobRecord&) const = default;
};

/// Piecewise-constant total platform power: `power_w` holds from `start`
/// until the next segment (the last segment extends indefinitely).
struct PowerSegment {
    double start = 0.0;
    double power_w = 0.0;

    bool operator==(const PowerSegment&) const = default;
};

struct SimulationTrace {
    std::vector<JobRecord> jobs; // sorted by id
    std::vector<PowerSegment> power_timeline;
    std::vector<std::vector<MachineStateChange>> machine_log; // per machine
    int n_machines = 0;
    int cores_per_machine = 0;
    double end_time = 0.0;      // time of the last event
    double energy_joules = 0.0; // platform accumulator at end_time
};

/// Run the workload to completion (all jobs finished, all machines back off),
/// even past the workload horizon. Deterministic for identical inputs.
SimulationTrace run_simulation(const ExperimentWorkload& workload, Platform platform);

} // namespace dcsim
