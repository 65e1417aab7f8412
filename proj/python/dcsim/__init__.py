"""Discrete-event data center simulator for demand-response user behaviors."""

from ._core import (
    Behavior,
    DemandResponseWindow,
    ExperimentResult,
    ExperimentWorkload,
    Job,
    JobRecord,
    MassSplit,
    PowerParams,
    PowerSegment,
    SimulationTrace,
    SimulatorError,
    SyntheticSpec,
    WindowStats,
    apply_behavior,
    energy_after_kwh,
    energy_in_kwh,
    energy_over_interval,
    evaluate,
    filter_jobs,
    fluid_residual,
    generate_synthetic,
    mean_slowdown,
    mean_waiting_time,
    parse_swf,
    relative_gain_pct,
    run_campaign_json,
    run_simulation,
    slice_experiment,
    transform_workload,
    window_stats,
)

__version__ = "1.0.0"

__all__ = [
    "Behavior",
    "DemandResponseWindow",
    "ExperimentResult",
    "ExperimentWorkload",
    "Job",
    "JobRecord",
    "MassSplit",
    "PowerParams",
    "PowerSegment",
    "SimulationTrace",
    "SimulatorError",
    "SyntheticSpec",
    "WindowStats",
    "apply_behavior",
    "energy_after_kwh",
    "energy_in_kwh",
    "energy_over_interval",
    "evaluate",
    "filter_jobs",
    "fluid_residual",
    "generate_synthetic",
    "mean_slowdown",
    "mean_waiting_time",
    "parse_swf",
    "relative_gain_pct",
    "run_campaign_json",
    "run_simulation",
    "slice_experiment",
    "transform_workload",
    "window_stats",
]
