#include <doctest.h>

#include "dcsim/errors.hpp"
#include "dcsim/metrics.hpp"
#include "dcsim/workload.hpp"

using namespace dcsim;

namespace {

SimulationTrace trace_with_timeline(std::vector<PowerSegment> segments)
{
    SimulationTrace t;
    t.power_timeline = std::move(segments);
    return t;
}

JobRecord make_record(long id, double submit, double start, double exec, int size = 1,
                      double original = -1.0)
{
    JobRecord r;
    r.id = id;
    r.user = "u0";
    r.size = size;
    r.execution_time = exec;
    r.submit = submit;
    r.original_submit = original < 0 ? submit : original;
    r.start = start;
    r.finish = start + exec;
    r.machine_id = 0;
    return r;
}

const DemandResponseWindow kWindow{144000.0, 147600.0};
constexpr double kHorizon = 259200.0;

} // namespace

TEST_SUITE("metrics")
{
    TEST_CASE("energy over an interval of a piecewise timeline")
    {
        const auto t = trace_with_timeline({{0.0, 100.0}, {100.0, 200.0}});
        CHECK(energy_over_interval(t, 0, 100) == 10000.0);
        CHECK(energy_over_interval(t, 50, 150) == 15000.0);
        CHECK(energy_over_interval(t, 90, 100) == 1000.0);
        CHECK(energy_over_interval(t, 150, 300) == 30000.0); // last level extends
        CHECK(energy_over_interval(t, 0, 0) == 0.0);

        CHECK_THROWS_AS(energy_over_interval(t, -1, 10), SimulationError);
        CHECK_THROWS_AS(energy_over_interval(t, 10, 5), SimulationError);
        CHECK_THROWS_AS(energy_over_interval(trace_with_timeline({}), 0, 1), SimulationError);
    }

    TEST_CASE("window energy for constant fleets")
    {
        // 104 machines off for the whole run.
        const auto all_off = trace_with_timeline({{0.0, 104 * 9.75}});
        CHECK(energy_in_kwh(all_off, kWindow) == doctest::Approx(1.014));

        // One machine on and idle, the rest off.
        const auto one_on = trace_with_timeline({{0.0, 100.0 + 103 * 9.75}});
        CHECK(energy_in_kwh(one_on, kWindow) == doctest::Approx(1.10425));

        CHECK(energy_in_kwh(all_off, {144000.0, 144000.0}) == 0.0);

        // Four-hour window: the tail to the horizon lasts 100800 s.
        CHECK(energy_after_kwh(all_off, {144000.0, 158400.0}, kHorizon) ==
              doctest::Approx(28.392));
        CHECK(energy_after_kwh(all_off, {144000.0, kHorizon}, kHorizon) == 0.0);
    }

    TEST_CASE("mean waiting time and slowdown")
    {
        SimulationTrace t;
        t.jobs.push_back(make_record(1, 100000.0, 100000.0, 500.0)); // before the window
        t.jobs.push_back(make_record(2, 144100.0, 144250.0, 100.0));
        t.jobs.push_back(make_record(3, 145000.0, 145050.0, 200.0));

        CHECK(*mean_waiting_time(t, kWindow.start, kHorizon) == 100.0); // (150 + 50) / 2
        CHECK(*mean_slowdown(t, kWindow.start, kHorizon) ==
              doctest::Approx((2.5 + 1.25) / 2));

        SUBCASE("selection bounds")
        {
            t.jobs.push_back(make_record(4, kHorizon, kHorizon, 100.0));
            CHECK(*mean_waiting_time(t, kWindow.start, kHorizon) == 100.0); // 4 excluded
            CHECK(!mean_waiting_time(t, 200000.0, 250000.0).has_value());
        }

        SUBCASE("zero wait means slowdown one")
        {
            SimulationTrace z;
            z.jobs.push_back(make_record(1, 150000.0, 150000.0, 300.0));
            CHECK(*mean_waiting_time(z, kWindow.start, kHorizon) == 0.0);
            CHECK(*mean_slowdown(z, kWindow.start, kHorizon) == 1.0);
        }
    }

    TEST_CASE("corrected means use the original submit times")
    {
        // A job delayed from 145800 to the window end, started immediately.
        SimulationTrace t;
        t.jobs.push_back(make_record(1, 147600.0, 147600.0, 600.0, 4, 145800.0));

        CHECK(*mean_waiting_time(t, kWindow.start, kHorizon) == 0.0);
        CHECK(*mean_waiting_time(t, kWindow.start, kHorizon, true) == 1800.0);
        CHECK(*mean_slowdown(t, kWindow.start, kHorizon) == 1.0);
        CHECK(*mean_slowdown(t, kWindow.start, kHorizon, true) == 4.0); // 2400 / 600

        // The basis also picks the jobs: from 146000 the original submit
        // falls out of range while the actual submit stays in.
        CHECK(mean_waiting_time(t, 146000.0, kHorizon).has_value());
        CHECK(!mean_waiting_time(t, 146000.0, kHorizon, true).has_value());
    }

    TEST_CASE("fluid and residual masses")
    {
        SimulationTrace t;
        // Submitted before the window, executes across its start.
        t.jobs.push_back(make_record(1, 140000.0, 143000.0, 2000.0, 4));
        // Submitted inside the window, runs mostly after it.
        t.jobs.push_back(make_record(2, 144500.0, 146000.0, 5000.0, 2));
        // Finished before the window opens.
        t.jobs.push_back(make_record(3, 100000.0, 100000.0, 1000.0, 8));
        // Submitted after the window closes.
        t.jobs.push_back(make_record(4, 147600.0, 147600.0, 1000.0, 8));

        const MassSplit split = fluid_residual(t, kWindow);
        CHECK(split.residual_core_h == doctest::Approx(4 * 1000.0 / 3600.0));
        CHECK(split.fluid_core_h == doctest::Approx(2 * 5000.0 / 3600.0));
        CHECK(*split.fluid_ratio() == doctest::Approx(10000.0 / 14000.0));

        const MassSplit empty = fluid_residual(SimulationTrace{}, kWindow);
        CHECK(empty.fluid_core_h == 0.0);
        CHECK(empty.residual_core_h == 0.0);
        CHECK(!empty.fluid_ratio().has_value());
    }

    TEST_CASE("relative gain")
    {
        CHECK(*relative_gain_pct(6.7, 10.0) == doctest::Approx(33.0));
        CHECK(*relative_gain_pct(10.0, 10.0) == 0.0);
        CHECK(*relative_gain_pct(12.0, 10.0) == doctest::Approx(-20.0));
        CHECK(!relative_gain_pct(5.0, 0.0).has_value());
        CHECK(!relative_gain_pct(std::nullopt, 10.0).has_value());
        CHECK(!relative_gain_pct(5.0, std::nullopt).has_value());
    }

    TEST_CASE("evaluate assembles a full result")
    {
        ExperimentWorkload wl;
        Job j;
        j.id = 1;
        j.user = "u0";
        j.submit_time = 144100.0;
        j.original_submit_time = 144100.0;
        j.execution_time = 100.0;
        j.size = 1;
        wl.jobs.jobs = {j};
        wl.window = kWindow;
        wl.horizon = kHorizon;

        const SimulationTrace trace = run_simulation(wl, Platform(1, 16, PowerParams{}));
        const MassSplit mass = fluid_residual(trace, kWindow);
        const ExperimentResult r = evaluate(trace, kWindow, kHorizon, mass);

        CHECK(r.energy_in_kwh ==
              doctest::Approx(energy_over_interval(trace, kWindow.start, kWindow.end) / 3.6e6));
        CHECK(r.energy_overall_kwh == r.energy_in_kwh + r.energy_after_kwh);
        CHECK(*r.mean_wait_s == 150.0);
        CHECK(*r.mean_slowdown == 2.5);
        CHECK(*r.mean_wait_corrected_s == 150.0);
        CHECK(r.fluid_core_h == mass.fluid_core_h);
        CHECK(r.residual_core_h == 0.0);
        CHECK(*r.fluid_ratio == 1.0);
    }

    TEST_CASE("evaluate reports undefined means when no job qualifies")
    {
        ExperimentWorkload wl;
        wl.window = kWindow;
        wl.horizon = kHorizon;
        const SimulationTrace trace = run_simulation(wl, Platform(1, 16, PowerParams{}));
        const ExperimentResult r = evaluate(trace, kWindow, kHorizon, MassSplit{});

        CHECK(!r.mean_wait_s.has_value());
        CHECK(!r.mean_slowdown.has_value());
        CHECK(!r.mean_wait_corrected_s.has_value());
        CHECK(!r.mean_slowdown_corrected.has_value());
        CHECK(!r.fluid_ratio.has_value());
        CHECK(r.energy_in_kwh == doctest::Approx(9.75 * 3600 / 3.6e6));
    }
}
