#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "dcsim/types.hpp"

namespace dcsim {

struct SwfOptions {
    // SWF records both allocated (field 5) and requested (field 8) processor
    // counts. Use the preferred field, fall back to the other when it is
    // missing (-1 or 0).
    bool prefer_allocated = true;
};

struct SwfParseResult {
    JobSet jobs;
    std::size_t skipped = 0; // records dropped: bad runtime, size or user id
    std::optional<std::int64_t> unix_start_time; // from the trace header
};

/// Parse a Standard Workload Format stream. Lines starting with ';' are
/// header/comment lines; data lines need at least 12 whitespace-separated
/// fields. Records with run time <= 0, no usable processor count or a missing
/// user id are skipped and counted. Throws ParseError on malformed lines.
SwfParseResult parse_swf(std::istream& in, const SwfOptions& opts = {});
SwfParseResult parse_swf_file(const std::string& path, const SwfOptions& opts = {});

/// Write jobs back out as 18-field SWF data lines (unknown fields as -1).
void write_swf(const JobSet& set, std::ostream& out);

/// Keep jobs with execution_time <= max_execution_time and
/// size <= max_size; both bounds inclusive.
JobSet filter_jobs(const JobSet& set, double max_execution_time = kSecondsPerDay,
                   int max_size = 16);

/// Cut a three-day experiment out of a trace. The window opens at
/// `window_start_abs` (trace time), `window_anchor` seconds into its day; the
/// experiment starts at midnight of the previous day, so the rebased window
/// opens at 86400 + window_anchor. Throws ConfigError if the window does not
/// fit inside the horizon.
ExperimentWorkload slice_experiment(const JobSet& trace, double window_start_abs,
                                    double window_length,
                                    double window_anchor = kDefaultWindowAnchor);

struct SyntheticSpec {
    std::uint64_t seed = 1;
    double rate_per_hour = 6.0;      // Poisson arrival rate
    double duration = kDefaultHorizon;
    int size_min = 1;
    int size_max = 16;
    double runtime_min = 60.0;
    double runtime_max = 3600.0;
    bool log_uniform_runtime = false; // uniform in log space instead of linear
    int n_users = 8;
    // Round submit and run times to whole seconds. Keeps every event of a
    // simulation on the integer grid.
    bool snap_to_seconds = true;

    void validate() const; // throws ConfigError
};

/// Deterministic synthetic workload: exponential inter-arrivals, sizes and
/// runtimes drawn from the configured distributions. Same spec, same jobs.
JobSet generate_synthetic(const SyntheticSpec& spec);

struct WindowStats {
    std::size_t n_jobs_in_window = 0;
    double fluid_mass_core_h = 0.0;
};

/// Count and mass of the jobs submitted inside the workload's window.
WindowStats window_stats(const ExperimentWorkload& workload);

} // namespace dcsim
