#include "dcsim/metrics.hpp"

#include <algorithm>

#include "dcsim/errors.hpp"

namespace dcsim {

namespace {

constexpr double kJoulesPerKwh = 3.6e6;

} // namespace

double energy_over_interval(const SimulationTrace& trace, double from, double to)
{
    if (trace.power_timeline.empty())
        throw SimulationError("trace has an empty power timeline");
    if (!(from >= 0.0) || !(to >= from))
        throw SimulationError("bad energy interval");

    double joules = 0.0;
    const auto& timeline = trace.power_timeline;
    for (std::size_t i = 0; i < timeline.size(); ++i) {
        const double seg_start = timeline[i].start;
        const double seg_end = i + 1 < timeline.size() ? timeline[i + 1].start : to;
        const double lo = std::max(from, seg_start);
        const double hi = std::min(to, seg_end);
        if (hi > lo)
            joules += timeline[i].power_w * (hi - lo);
    }
    return joules;
}

double energy_in_kwh(const SimulationTrace& trace, const DemandResponseWindow& window)
{
    return energy_over_interval(trace, window.start, window.end) / kJoulesPerKwh;
}

double energy_after_kwh(const SimulationTrace& trace, const DemandResponseWindow& window,
                        double horizon)
{
    return energy_over_interval(trace, window.end, horizon) / kJoulesPerKwh;
}

namespace {

template <typename ValueFn>
std::optional<double> mean_over_jobs(const SimulationTrace& trace, double from, double horizon,
                                     bool corrected, ValueFn value)
{
    double sum = 0.0;
    std::size_t n = 0;
    for (const JobRecord& rec : trace.jobs) {
        const double basis = corrected ? rec.original_submit : rec.submit;
        if (basis < from || basis >= horizon)
            continue;
        sum += value(rec, basis);
        ++n;
    }
    if (n == 0)
        return std::nullopt;
    return sum / static_cast<double>(n);
}

} // namespace

std::optional<double> mean_waiting_time(const SimulationTrace& trace, double from,
                                        double horizon, bool corrected)
{
    return mean_over_jobs(trace, from, horizon, corrected,
                          [](const JobRecord& rec, double basis) { return rec.start - basis; });
}

std::optional<double> mean_slowdown(const SimulationTrace& trace, double from, double horizon,
                                    bool corrected)
{
    return mean_over_jobs(trace, from, horizon, corrected,
                          [](const JobRecord& rec, double basis) {
                              return (rec.finish - basis) / rec.execution_time;
                          });
}

MassSplit fluid_residual(const SimulationTrace& baseline, const DemandResponseWindow& window)
{
    MassSplit split;
    for (const JobRecord& rec : baseline.jobs) {
        if (window.contains(rec.submit)) {
            split.fluid_core_h += rec.size * rec.execution_time / kSecondsPerHour;
        } else if (rec.submit < window.start) {
            const double lo = std::max(rec.start, window.start);
            const double hi = std::min(rec.finish, window.end);
            if (hi > lo)
                split.residual_core_h += rec.size * (hi - lo) / kSecondsPerHour;
        }
    }
    return split;
}

std::optional<double> relative_gain_pct(std::optional<double> value,
                                        std::optional<double> baseline)
{
    if (!value || !baseline || *baseline == 0.0)
        return std::nullopt;
    return 100.0 * (*baseline - *value) / *baseline;
}

ExperimentResult evaluate(const SimulationTrace& trace, const DemandResponseWindow& window,
                          double horizon, const MassSplit& scenario_mass)
{
    ExperimentResult result;
    result.energy_in_kwh = energy_in_kwh(trace, window);
    result.energy_after_kwh = energy_after_kwh(trace, window, horizon);
    // Overall spans the affected period, window start to horizon. The day
    // before the window is identical across behaviors and would only dilute
    // the relative gains.
    result.energy_overall_kwh = result.energy_in_kwh + result.energy_after_kwh;
    result.mean_wait_s = mean_waiting_time(trace, window.start, horizon, false);
    result.mean_slowdown = dcsim::mean_slowdown(trace, window.start, horizon, false);
    result.mean_wait_corrected_s = mean_waiting_time(trace, window.start, horizon, true);
    result.mean_slowdown_corrected = dcsim::mean_slowdown(trace, window.start, horizon, true);
    result.fluid_core_h = scenario_mass.fluid_core_h;
    result.residual_core_h = scenario_mass.residual_core_h;
    result.fluid_ratio = scenario_mass.fluid_ratio();
    return result;
}

} // namespace dcsim
