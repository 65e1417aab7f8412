#pragma once

#include <string>
#include <vector>

namespace dcsim {

// All times are real-valued seconds, relative to the start of the trace or of
// the experiment depending on context.
constexpr double kSecondsPerHour = 3600.0;
constexpr double kSecondsPerDay = 86400.0;

// A standard experiment covers three full days; the demand-response window
// opens on the second day.
constexpr double kDefaultHorizon = 3.0 * kSecondsPerDay;
constexpr double kDefaultWindowAnchor = 57600.0; // 16:00 into the window day

/// One job submission: who, when, how long, how many cores.
struct Job {
    long id = 0;
    std::string user;
    double submit_time = 0.0;
    double execution_time = 0.0; // > 0 after ingestion
    int size = 1;                // cores, >= 1

    // Submission time before any behavior transformation. Equal to
    // submit_time unless the job was delayed.
    double original_submit_time = 0.0;

    double mass_core_seconds() const { return size * execution_time; }
    double mass_core_hours() const { return size * execution_time / kSecondsPerHour; }

    bool operator==(const Job&) const = default;
};

/// Jobs ordered by (submit_time, id), with unique ids.
struct JobSet {
    std::vector<Job> jobs;

    void sort();
    bool empty() const { return jobs.empty(); }
    std::size_t size() const { return jobs.size(); }

    bool operator==(const JobSet&) const = default;
};

/// Half-open interval [start, end) targeted for load curtailment. A job
/// submitted exactly at `end` is outside the window.
struct DemandResponseWindow {
    double start = 0.0;
    double end = 0.0;

    bool contains(double t) const { return t >= start && t < end; }
    double length() const { return end - start; }

    bool operator==(const DemandResponseWindow&) const = default;
};

/// A three-day slice of a trace, rebased so the experiment starts at t = 0.
struct ExperimentWorkload {
    JobSet jobs;
    double horizon = kDefaultHorizon;
    DemandResponseWindow window;
};

} // namespace dcsim
