#pragma once

#include <optional>

#include "dcsim/engine.hpp"
#include "dcsim/types.hpp"

namespace dcsim {

/// Joules consumed over [from, to), read off the trace power timeline. The
/// last power level extends past the end of the timeline (all machines
/// settled off once the run is over).
double energy_over_interval(const SimulationTrace& trace, double from, double to);

/// kWh consumed during the window.
double energy_in_kwh(const SimulationTrace& trace, const DemandResponseWindow& window);

/// kWh consumed from the end of the window to the horizon.
double energy_after_kwh(const SimulationTrace& trace, const DemandResponseWindow& window,
                        double horizon = kDefaultHorizon);

/// Mean of (start - submit) over jobs submitted in [from, horizon).
/// `corrected` uses original submit times (pre-delay) as the basis, both for
/// picking the jobs and for the subtraction. Empty job set -> nullopt.
std::optional<double> mean_waiting_time(const SimulationTrace& trace, double from,
                                        double horizon, bool corrected = false);

/// Mean of (finish - submit) / execution_time over the same job set.
std::optional<double> mean_slowdown(const SimulationTrace& trace, double from,
                                    double horizon, bool corrected = false);

struct MassSplit {
    double fluid_core_h = 0.0;    // mass submitted inside the window
    double residual_core_h = 0.0; // in-window execution of earlier jobs

    std::optional<double> fluid_ratio() const
    {
        const double total = fluid_core_h + residual_core_h;
        if (total <= 0.0)
            return std::nullopt;
        return fluid_core_h / total;
    }
};

/// Decompose the in-window load of a baseline trace: fluid = full mass of the
/// jobs submitted inside the window; residual = the in-window part of the
/// execution of jobs submitted before it. Always computed on the baseline
/// schedule (it is a property of the scenario, not of a behavior).
MassSplit fluid_residual(const SimulationTrace& baseline,
                         const DemandResponseWindow& window);

/// 100 * (baseline - value) / baseline; positive means saving.
/// nullopt when the baseline is zero (or either input is undefined).
std::optional<double> relative_gain_pct(std::optional<double> value,
                                        std::optional<double> baseline);

/// Per-run metrics record.
struct ExperimentResult {
    double energy_in_kwh = 0.0;
    double energy_after_kwh = 0.0;
    double energy_overall_kwh = 0.0;
    std::optional<double> mean_wait_s;
    std::optional<double> mean_slowdown;
    std::optional<double> mean_wait_corrected_s;
    std::optional<double> mean_slowdown_corrected;
    double fluid_core_h = 0.0;
    double residual_core_h = 0.0;
    std::optional<double> fluid_ratio;
};

/// Evaluate one behavior trace. `scenario_mass` comes from the baseline trace
/// of the same experiment and is copied into the result.
ExperimentResult evaluate(const SimulationTrace& trace, const DemandResponseWindow& window,
                          double horizon, const MassSplit& scenario_mass);

} // namespace dcsim
