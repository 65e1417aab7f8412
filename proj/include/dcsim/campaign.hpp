#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dcsim/behaviors.hpp"
#include "dcsim/metrics.hpp"
#include "dcsim/platform.hpp"
#include "dcsim/workload.hpp"

namespace dcsim {

/// Where experiment windows come from when replaying a trace.
struct ExperimentPlan {
    // Absolute window start times (trace seconds).
    std::vector<double> window_starts_abs;
    // Day offsets into the trace; window start = offset * 86400 + anchor.
    std::vector<long> day_offsets;
    // Enumerate every weekday covered by the trace (needs the trace epoch).
    bool weekdays_auto = false;
    std::optional<std::int64_t> epoch_override; // instead of the SWF header
    long utc_offset_s = 0;                      // weekday/anchor computed in this zone
};

struct CampaignConfig {
    // Workload source: an SWF trace or a synthetic generator (exactly one).
    std::string swf_path;
    std::optional<SyntheticSpec> synthetic;
    int synthetic_count = 1; // experiments; seeds are seed, seed+1, ...

    SwfOptions swf_options;
    double filter_max_runtime = kSecondsPerDay;
    int filter_max_size = 16;

    int n_machines = 104;
    int cores_per_machine = 16;
    PowerParams power;

    std::vector<double> window_hours = {1.0, 4.0};
    double window_anchor = kDefaultWindowAnchor;
    double horizon = kDefaultHorizon;
    std::vector<Behavior> behaviors = {Behavior::Rigid, Behavior::Renounce,
                                       Behavior::Delay, Behavior::Degrad,
                                       Behavior::Reconfig};
    BehaviorAssignment per_user; // optional per-user overrides, default filled per run

    ExperimentPlan plan;

    std::string out_dir = "results";
    int workers = 1;
    bool dump_traces = false;

    void validate() const; // throws ConfigError
};

CampaignConfig load_config_file(const std::string& path);
CampaignConfig load_config_json(const std::string& json_text);

/// One (experiment, window length, behavior) result with gains vs Rigid.
struct ResultRow {
    int experiment_id = 0;
    double window_start_abs = 0.0;
    double window_length_s = 0.0;
    Behavior behavior = Behavior::Rigid;
    ExperimentResult result;
    std::optional<double> gain_energy_in_pct;
    std::optional<double> gain_energy_after_pct;
    std::optional<double> gain_energy_overall_pct;
    std::size_t n_jobs_window = 0; // baseline scenario property
};

struct ResultsTable {
    std::vector<ResultRow> rows; // sorted by (experiment, window, behavior)
    std::vector<std::string> errors;
};

/// Run the full experiment x window x behavior cross-product. Independent
/// (experiment, window) items run on `workers` threads; the output order does
/// not depend on the worker count. A failed item is recorded in `errors` and
/// the campaign continues.
ResultsTable run_campaign(const CampaignConfig& config);

/// Box-plot statistics of the per-experiment relative gains.
struct SummaryRow {
    Behavior behavior = Behavior::Rigid;
    double window_length_s = 0.0;
    std::string metric;
    std::size_t n = 0; // experiments with a defined gain
    double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0, mean = 0.0;
};

std::vector<SummaryRow> summarize(const ResultsTable& table);

void emit_results_csv(const ResultsTable& table, std::ostream& out);
void emit_results_csv_file(const ResultsTable& table, const std::string& path);
ResultsTable read_results_csv(std::istream& in);

void emit_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out);
void emit_summary_csv_file(const std::vector<SummaryRow>& rows, const std::string& path);

/// Per-job records and power timeline of one run, as two CSV files.
void emit_trace_csv(const SimulationTrace& trace, const std::string& jobs_path,
                    const std::string& power_path);

/// Format a double the way the CSV emitters do (6 significant digits).
std::string format_csv_double(double value);

} // namespace dcsim
