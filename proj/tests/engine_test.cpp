#include <doctest.h>

#include <algorithm>
#include <set>

#include "dcsim/engine.hpp"
#include "dcsim/errors.hpp"
#include "dcsim/workload.hpp"
#include "oracles.hpp"

using namespace dcsim;

namespace {

Job make_job(long id, double submit, double exec, int size)
{
    Job j;
    j.id = id;
    j.user = "u" + std::to_string(id % 4);
    j.submit_time = submit;
    j.execution_time = exec;
    j.size = size;
    j.original_submit_time = submit;
    return j;
}

ExperimentWorkload make_workload(std::vector<Job> jobs, double horizon = 259200.0)
{
    ExperimentWorkload wl;
    wl.jobs.jobs = std::move(jobs);
    wl.jobs.sort();
    wl.horizon = horizon;
    wl.window = {144000.0, 147600.0};
    return wl;
}

} // namespace

TEST_SUITE("engine")
{
    TEST_CASE("event queue: total order and batch draining")
    {
        EventQueue q;
        q.push(10.0, EventKind::JobSubmit, 5);
        q.push(10.0, EventKind::JobFinish, 9);
        q.push(5.0, EventKind::OffComplete, 1);
        q.push(10.0, EventKind::JobSubmit, 2);

        CHECK(q.next_time() == 5.0);
        const auto first = q.pop_batch();
        REQUIRE(first.size() == 1);
        CHECK(first[0].kind == EventKind::OffComplete);

        const auto batch = q.pop_batch();
        REQUIRE(batch.size() == 3);
        CHECK(batch[0].kind == EventKind::JobFinish); // finish before submit
        CHECK(batch[0].payload == 9);
        CHECK(batch[1].payload == 2); // submits ordered by job id
        CHECK(batch[2].payload == 5);

        CHECK(q.empty());
        CHECK_THROWS_AS(q.next_time(), SimulationError);
        CHECK_THROWS_AS(q.push(-1.0, EventKind::JobSubmit, 1), SimulationError);
    }

    TEST_CASE("single job: boot, run, shut down")
    {
        const auto wl = make_workload({make_job(1, 0.0, 100.0, 1)});
        const SimulationTrace trace = run_simulation(wl, Platform(1, 16, PowerParams{}));

        REQUIRE(trace.jobs.size() == 1);
        const JobRecord& rec = trace.jobs[0];
        CHECK(rec.start == 150.0); // waits for the boot
        CHECK(rec.finish == 250.0);
        CHECK(rec.machine_id == 0);
        CHECK(rec.waiting_time() == 150.0);
        CHECK(rec.slowdown() == 2.5);

        CHECK(trace.end_time == 256.0); // switch-off completes
        CHECK(trace.energy_joules == 26481.25);

        REQUIRE(trace.power_timeline.size() == 4);
        CHECK(trace.power_timeline[0] == PowerSegment{0.0, 100.0});      // booting
        CHECK(trace.power_timeline[1] == PowerSegment{150.0, 107.3125}); // running
        CHECK(trace.power_timeline[2] == PowerSegment{250.0, 125.0});    // switching off
        CHECK(trace.power_timeline[3] == PowerSegment{256.0, 9.75});     // off

        CHECK(oracles::audit_trace(trace).empty());
    }

    TEST_CASE("empty workload: machines stay off")
    {
        const SimulationTrace trace =
            run_simulation(make_workload({}), Platform(104, 16, PowerParams{}));
        CHECK(trace.jobs.empty());
        CHECK(trace.end_time == 0.0);
        CHECK(trace.energy_joules == 0.0);
        REQUIRE(trace.power_timeline.size() == 1);
        CHECK(trace.power_timeline[0] == PowerSegment{0.0, 104 * 9.75});
    }

    TEST_CASE("workload validation")
    {
        const Platform p(1, 16, PowerParams{});
        CHECK_THROWS_AS(
            run_simulation(make_workload({make_job(1, 0, 100, 17)}), p), SimulationError);
        CHECK_THROWS_AS(
            run_simulation(make_workload({make_job(1, 0, 100, 0)}), p), SimulationError);
        CHECK_THROWS_AS(
            run_simulation(make_workload({make_job(1, 0, 0.0, 4)}), p), SimulationError);
        CHECK_THROWS_AS(
            run_simulation(make_workload({make_job(1, -5, 100, 4)}), p), SimulationError);
        CHECK_THROWS_AS(
            run_simulation(make_workload({make_job(1, 0, 100, 4), make_job(1, 9, 50, 2)}), p),
            SimulationError);
    }

    TEST_CASE("cores freed by a finish are reused in the same pass")
    {
        // Job 2 is submitted exactly when job 1 finishes; the machine never
        // goes idle and never reboots.
        const auto wl =
            make_workload({make_job(1, 0.0, 100.0, 16), make_job(2, 250.0, 100.0, 16)});
        const SimulationTrace trace = run_simulation(wl, Platform(1, 16, PowerParams{}));

        REQUIRE(trace.jobs.size() == 2);
        CHECK(trace.jobs[0].finish == 250.0);
        CHECK(trace.jobs[1].start == 250.0); // no gap, no second boot
        CHECK(trace.jobs[1].finish == 350.0);
        CHECK(trace.end_time == 356.0);

        int boots = 0;
        const auto& log = trace.machine_log[0];
        for (std::size_t i = 0; i < log.size(); ++i)
            if (log[i].state == MachineState::SwitchingOn &&
                (i == 0 || log[i - 1].state != MachineState::SwitchingOn))
                ++boots;
        CHECK(boots == 1);

        // 150 s boot + 200 s with 16 busy cores + 6 s switch-off.
        CHECK(trace.energy_joules ==
              doctest::Approx(150 * 100.0 + 200 * (100.0 + 16 * 7.3125) + 6 * 125.0));
        CHECK(oracles::audit_trace(trace).empty());
    }

    TEST_CASE("jobs reserved on a booting machine start at boot completion")
    {
        const auto wl =
            make_workload({make_job(1, 0.0, 300.0, 10), make_job(2, 0.0, 120.0, 6)});
        const SimulationTrace trace = run_simulation(wl, Platform(2, 16, PowerParams{}));

        REQUIRE(trace.jobs.size() == 2);
        CHECK(trace.jobs[0].start == 150.0);
        CHECK(trace.jobs[1].start == 150.0);
        CHECK(trace.jobs[0].machine_id == 0); // both packed on the first machine
        CHECK(trace.jobs[1].machine_id == 0);
        CHECK(trace.jobs[1].finish == 270.0);
        CHECK(oracles::audit_trace(trace).empty());
    }

    TEST_CASE("runs past the horizon until all jobs finish")
    {
        const auto wl = make_workload({make_job(1, 259190.0, 100.0, 4)});
        const SimulationTrace trace = run_simulation(wl, Platform(1, 16, PowerParams{}));
        REQUIRE(trace.jobs.size() == 1);
        CHECK(trace.jobs[0].start == 259340.0);
        CHECK(trace.jobs[0].finish == 259440.0);
        CHECK(trace.end_time == 259446.0);
    }

    TEST_CASE("deterministic replay")
    {
        SyntheticSpec spec;
        spec.seed = 33;
        spec.rate_per_hour = 20.0;
        spec.duration = 43200.0;
        auto wl = make_workload({});
        wl.jobs = generate_synthetic(spec);
        REQUIRE(!wl.jobs.empty());

        const SimulationTrace a = run_simulation(wl, Platform(4, 16, PowerParams{}));
        const SimulationTrace b = run_simulation(wl, Platform(4, 16, PowerParams{}));
        CHECK(a.jobs == b.jobs);
        CHECK(a.power_timeline == b.power_timeline);
        CHECK(a.energy_joules == b.energy_joules);
        CHECK(a.end_time == b.end_time);
        CHECK(a.machine_log == b.machine_log);
    }

    TEST_CASE("job conservation and audit on a synthetic run")
    {
        SyntheticSpec spec;
        spec.seed = 5;
        spec.rate_per_hour = 40.0;
        spec.duration = 21600.0;
        auto wl = make_workload({});
        wl.jobs = generate_synthetic(spec);

        const SimulationTrace trace = run_simulation(wl, Platform(6, 16, PowerParams{}));
        REQUIRE(trace.jobs.size() == wl.jobs.size());
        for (std::size_t i = 0; i < trace.jobs.size(); ++i) {
            CHECK(trace.jobs[i].id == wl.jobs.jobs.at(i).id); // sorted by id here
            CHECK(trace.jobs[i].finish == trace.jobs[i].start + trace.jobs[i].execution_time);
        }
        CHECK(oracles::audit_trace(trace).empty());
    }

    TEST_CASE("power timeline boundaries match the machine state changes")
    {
        SyntheticSpec spec;
        spec.seed = 12;
        spec.rate_per_hour = 30.0;
        spec.duration = 14400.0;
        auto wl = make_workload({});
        wl.jobs = generate_synthetic(spec);

        const SimulationTrace trace = run_simulation(wl, Platform(3, 16, PowerParams{}));
        std::set<double> log_times;
        for (const auto& log : trace.machine_log)
            for (const auto& entry : log)
                log_times.insert(entry.time);
        std::set<double> segment_starts;
        for (const auto& seg : trace.power_timeline)
            segment_starts.insert(seg.start);
        CHECK(segment_starts == log_times);
    }
}
