#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dcsim/behaviors.hpp"
#include "dcsim/campaign.hpp"
#include "dcsim/engine.hpp"
#include "dcsim/metrics.hpp"
#include "dcsim/platform.hpp"
#include "dcsim/workload.hpp"

namespace py = pybind11;
using namespace dcsim;

namespace {

JobSet to_jobset(std::vector<Job> jobs)
{
    JobSet set;
    set.jobs = std::move(jobs);
    set.sort();
    return set;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Discrete-event data center simulator for demand-response behaviors";

    py::register_exception<Error>(m, "SimulatorError", PyExc_RuntimeError);

    py::class_<Job>(m, "Job")
        .def(py::init<>())
        .def(py::init([](long id, std::string user, double submit, double exec, int size) {
                 Job j;
                 j.id = id;
                 j.user = std::move(user);
                 j.submit_time = submit;
                 j.execution_time = exec;
                 j.size = size;
                 j.original_submit_time = submit;
                 return j;
             }),
             py::arg("id"), py::arg("user"), py::arg("submit_time"),
             py::arg("execution_time"), py::arg("size"))
        .def_readwrite("id", &Job::id)
        .def_readwrite("user", &Job::user)
        .def_readwrite("submit_time", &Job::submit_time)
        .def_readwrite("execution_time", &Job::execution_time)
        .def_readwrite("size", &Job::size)
        .def_readwrite("original_submit_time", &Job::original_submit_time)
        .def("mass_core_hours", &Job::mass_core_hours)
        .def("__repr__", [](const Job& j) {
            std::ostringstream out;
            out << "Job(id=" << j.id << ", user='" << j.user << "', submit=" << j.submit_time
                << ", exec=" << j.execution_time << ", size=" << j.size << ")";
            return out.str();
        });

    py::class_<DemandResponseWindow>(m, "DemandResponseWindow")
        .def(py::init<>())
        .def(py::init([](double start, double end) {
                 return DemandResponseWindow{start, end};
             }),
             py::arg("start"), py::arg("end"))
        .def_readwrite("start", &DemandResponseWindow::start)
        .def_readwrite("end", &DemandResponseWindow::end)
        .def("contains", &DemandResponseWindow::contains)
        .def("length", &DemandResponseWindow::length);

    py::class_<ExperimentWorkload>(m, "ExperimentWorkload")
        .def(py::init<>())
        .def_property(
            "jobs", [](const ExperimentWorkload& w) { return w.jobs.jobs; },
            [](ExperimentWorkload& w, std::vector<Job> jobs) { w.jobs = to_jobset(std::move(jobs)); })
        .def_readwrite("horizon", &ExperimentWorkload::horizon)
        .def_readwrite("window", &ExperimentWorkload::window);

    py::class_<PowerParams>(m, "PowerParams")
        .def(py::init<>())
        .def_readwrite("p_idle", &PowerParams::p_idle)
        .def_readwrite("p_core", &PowerParams::p_core)
        .def_readwrite("p_off", &PowerParams::p_off)
        .def_readwrite("p_son", &PowerParams::p_son)
        .def_readwrite("p_soff", &PowerParams::p_soff)
        .def_readwrite("t_son", &PowerParams::t_son)
        .def_readwrite("t_soff", &PowerParams::t_soff);

    py::class_<SyntheticSpec>(m, "SyntheticSpec")
        .def(py::init<>())
        .def_readwrite("seed", &SyntheticSpec::seed)
        .def_readwrite("rate_per_hour", &SyntheticSpec::rate_per_hour)
        .def_readwrite("duration", &SyntheticSpec::duration)
        .def_readwrite("size_min", &SyntheticSpec::size_min)
        .def_readwrite("size_max", &SyntheticSpec::size_max)
        .def_readwrite("runtime_min", &SyntheticSpec::runtime_min)
        .def_readwrite("runtime_max", &SyntheticSpec::runtime_max)
        .def_readwrite("log_uniform_runtime", &SyntheticSpec::log_uniform_runtime)
        .def_readwrite("n_users", &SyntheticSpec::n_users)
        .def_readwrite("snap_to_seconds", &SyntheticSpec::snap_to_seconds);

    py::class_<WindowStats>(m, "WindowStats")
        .def_readonly("n_jobs_in_window", &WindowStats::n_jobs_in_window)
        .def_readonly("fluid_mass_core_h", &WindowStats::fluid_mass_core_h);

    py::enum_<Behavior>(m, "Behavior")
        .value("RIGID", Behavior::Rigid)
        .value("RENOUNCE", Behavior::Renounce)
        .value("DELAY", Behavior::Delay)
        .value("DEGRAD", Behavior::Degrad)
        .value("RECONFIG", Behavior::Reconfig);

    py::class_<JobRecord>(m, "JobRecord")
        .def_readonly("id", &JobRecord::id)
        .def_readonly("user", &JobRecord::user)
        .def_readonly("size", &JobRecord::size)
        .def_readonly("execution_time", &JobRecord::execution_time)
        .def_readonly("submit", &JobRecord::submit)
        .def_readonly("original_submit", &JobRecord::original_submit)
        .def_readonly("start", &JobRecord::start)
        .def_readonly("finish", &JobRecord::finish)
        .def_readonly("machine_id", &JobRecord::machine_id)
        .def("waiting_time", &JobRecord::waiting_time)
        .def("slowdown", &JobRecord::slowdown);

    py::class_<PowerSegment>(m, "PowerSegment")
        .def_readonly("start", &PowerSegment::start)
        .def_readonly("power_w", &PowerSegment::power_w);

    py::class_<SimulationTrace>(m, "SimulationTrace")
        .def_readonly("jobs", &SimulationTrace::jobs)
        .def_readonly("power_timeline", &SimulationTrace::power_timeline)
        .def_readonly("n_machines", &SimulationTrace::n_machines)
        .def_readonly("cores_per_machine", &SimulationTrace::cores_per_machine)
        .def_readonly("end_time", &SimulationTrace::end_time)
        .def_readonly("energy_joules", &SimulationTrace::energy_joules);

    py::class_<MassSplit>(m, "MassSplit")
        .def_readonly("fluid_core_h", &MassSplit::fluid_core_h)
        .def_readonly("residual_core_h", &MassSplit::residual_core_h)
        .def("fluid_ratio", &MassSplit::fluid_ratio);

    py::class_<ExperimentResult>(m, "ExperimentResult")
        .def_readonly("energy_in_kwh", &ExperimentResult::energy_in_kwh)
        .def_readonly("energy_after_kwh", &ExperimentResult::energy_after_kwh)
        .def_readonly("energy_overall_kwh", &ExperimentResult::energy_overall_kwh)
        .def_readonly("mean_wait_s", &ExperimentResult::mean_wait_s)
        .def_readonly("mean_slowdown", &ExperimentResult::mean_slowdown)
        .def_readonly("mean_wait_corrected_s", &ExperimentResult::mean_wait_corrected_s)
        .def_readonly("mean_slowdown_corrected", &ExperimentResult::mean_slowdown_corrected)
        .def_readonly("fluid_core_h", &ExperimentResult::fluid_core_h)
        .def_readonly("residual_core_h", &ExperimentResult::residual_core_h)
        .def_readonly("fluid_ratio", &ExperimentResult::fluid_ratio);

    m.def(
        "parse_swf",
        [](const std::string& text, bool prefer_allocated) {
            std::istringstream in(text);
            const SwfParseResult result = parse_swf(in, SwfOptions{prefer_allocated});
            return py::make_tuple(result.jobs.jobs, result.skipped, result.unix_start_time);
        },
        py::arg("text"), py::arg("prefer_allocated") = true,
        "Parse SWF text -> (jobs, skipped_count, unix_start_time)");

    m.def(
        "filter_jobs",
        [](std::vector<Job> jobs, double max_execution_time, int max_size) {
            return filter_jobs(to_jobset(std::move(jobs)), max_execution_time, max_size).jobs;
        },
        py::arg("jobs"), py::arg("max_execution_time") = kSecondsPerDay,
        py::arg("max_size") = 16);

    m.def(
        "slice_experiment",
        [](std::vector<Job> trace, double window_start_abs, double window_length,
           double window_anchor) {
            return slice_experiment(to_jobset(std::move(trace)), window_start_abs,
                                    window_length, window_anchor);
        },
        py::arg("trace"), py::arg("window_start_abs"), py::arg("window_length"),
        py::arg("window_anchor") = kDefaultWindowAnchor);

    m.def(
        "generate_synthetic",
        [](const SyntheticSpec& spec) { return generate_synthetic(spec).jobs; },
        py::arg("spec"));

    m.def("window_stats", &window_stats, py::arg("workload"));

    m.def("apply_behavior", &apply_behavior, py::arg("job"), py::arg("behavior"),
          py::arg("window"), "None when the job is renounced");

    m.def(
        "transform_workload",
        [](const ExperimentWorkload& workload, Behavior behavior,
           const std::map<std::string, Behavior>& per_user) {
            BehaviorAssignment assignment;
            assignment.default_behavior = behavior;
            assignment.per_user = per_user;
            return transform_workload(workload, assignment);
        },
        py::arg("workload"), py::arg("behavior"),
        py::arg("per_user") = std::map<std::string, Behavior>{});

    m.def(
        "run_simulation",
        [](const ExperimentWorkload& workload, int n_machines, int cores_per_machine,
           const PowerParams& power) {
            return run_simulation(workload,
                                  Platform(n_machines, cores_per_machine, power));
        },
        py::arg("workload"), py::arg("n_machines") = 104, py::arg("cores_per_machine") = 16,
        py::arg("power") = PowerParams{});

    m.def("energy_over_interval", &energy_over_interval, py::arg("trace"), py::arg("from_s"),
          py::arg("to_s"));
    m.def("energy_in_kwh", &energy_in_kwh, py::arg("trace"), py::arg("window"));
    m.def("energy_after_kwh", &energy_after_kwh, py::arg("trace"), py::arg("window"),
          py::arg("horizon") = kDefaultHorizon);
    m.def("mean_waiting_time", &mean_waiting_time, py::arg("trace"), py::arg("from_s"),
          py::arg("horizon"), py::arg("corrected") = false);
    m.def("mean_slowdown", &mean_slowdown, py::arg("trace"), py::arg("from_s"),
          py::arg("horizon"), py::arg("corrected") = false);
    m.def("fluid_residual", &fluid_residual, py::arg("baseline"), py::arg("window"));
    m.def("relative_gain_pct", &relative_gain_pct, py::arg("value"), py::arg("baseline"));
    m.def("evaluate", &evaluate, py::arg("trace"), py::arg("window"), py::arg("horizon"),
          py::arg("scenario_mass"));

    m.def(
        "run_campaign_json",
        [](const std::string& config_json) {
            const CampaignConfig config = load_config_json(config_json);
            const ResultsTable table = run_campaign(config);
            std::ostringstream results, summary;
            emit_results_csv(table, results);
            emit_summary_csv(summarize(table), summary);
            return py::make_tuple(results.str(), summary.str(), table.errors);
        },
        py::arg("config_json"),
        "Run a campaign from a JSON config string -> (results_csv, summary_csv, errors)");
}
