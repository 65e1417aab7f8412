#include "dcsim/engine.hpp"

#include <map>
#include <string>
#include <utility>

#include "dcsim/errors.hpp"
#include "dcsim/scheduler.hpp"

namespace dcsim {

bool EventOrder::operator()(const Event& a, const Event& b) const
{
    if (a.time != b.time) return a.time < b.time;
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.payload != b.payload) return a.payload < b.payload;
    return a.seq < b.seq;
}

void EventQueue::push(double time, EventKind kind, long payload)
{
    if (!(time >= 0.0))
        throw SimulationError("event time must be nonnegative");
    events_.insert(Event{time, kind, payload, next_seq_++});
}

double EventQueue::next_time() const
{
    if (events_.empty())
        throw SimulationError("event queue is empty");
    return events_.begin()->time;
}

std::vector<Event> EventQueue::pop_batch()
{
    const double t = next_time();
    std::vector<Event> batch;
    auto it = events_.begin();
    while (it != events_.end() && it->time == t) {
        batch.push_back(*it);
        it = events_.erase(it);
    }
    return batch;
}

namespace {

void validate_workload(const ExperimentWorkload& workload, const Platform& platform)
{
    const int capacity = platform.machine(0).capacity();
    std::map<long, bool> seen;
    for (const Job& job : workload.jobs.jobs) {
        const std::string tag = "job " + std::to_string(job.id);
        if (!seen.emplace(job.id, true).second)
            throw SimulationError(tag + " appears twice in the workload");
        if (job.size < 1)
            throw SimulationError(tag + " has size < 1");
        if (job.size > capacity)
            throw SimulationError(tag + " needs " + std::to_string(job.size) +
                                  " cores but machines have " + std::to_string(capacity));
        if (!(job.execution_time > 0.0))
            throw SimulationError(tag + " has nonpositive execution time");
        if (!(job.submit_time >= 0.0))
            throw SimulationError(tag + " is submitted before time zero");
    }
}

} // namespace

SimulationTrace run_simulation(const ExperimentWorkload& workload, Platform platform)
{
    validate_workload(workload, platform);

    std::map<long, Job> jobs_by_id;
    for (const Job& job : workload.jobs.jobs)
        jobs_by_id.emplace(job.id, job);

    EventQueue events;
    for (const Job& job : workload.jobs.jobs)
        events.push(job.submit_time, EventKind::JobSubmit, job.id);

    BinPackingScheduler scheduler;
    std::map<long, JobRecord> records;

    SimulationTrace trace;
    trace.n_machines = platform.size();
    trace.cores_per_machine = platform.machine(0).capacity();
    trace.power_timeline.push_back(PowerSegment{0.0, platform.total_power()});

    const auto start_job = [&](const Job& job, int machine_id, double now) {
        JobRecord rec;
        rec.id = job.id;
        rec.user = job.user;
        rec.size = job.size;
        rec.execution_time = job.execution_time;
        rec.submit = job.submit_time;
        rec.original_submit = job.original_submit_time;
        rec.start = now;
        rec.finish = now + job.execution_time;
        rec.machine_id = machine_id;
        events.push(rec.finish, EventKind::JobFinish, job.id);
        records.emplace(job.id, std::move(rec));
    };

    double now = 0.0;
    while (!events.empty()) {
        now = events.next_time();
        platform.accumulate_energy(now);

        for (const Event& ev : events.pop_batch()) {
            switch (ev.kind) {
            case EventKind::JobFinish: {
                const JobRecord& rec = records.at(ev.payload);
                platform.release(rec.machine_id, rec.size);
                break;
            }
            case EventKind::BootComplete: {
                const int machine_id = static_cast<int>(ev.payload);
                platform.complete_switch_on(machine_id);
                for (const Job& job : scheduler.collect_boot_reservations(machine_id)) {
                    platform.commit(machine_id, job.size);
                    start_job(job, machine_id, now);
                }
                break;
            }
            case EventKind::OffComplete:
                platform.complete_switch_off(static_cast<int>(ev.payload));
                break;
            case EventKind::JobSubmit:
                scheduler.enqueue(jobs_by_id.at(ev.payload));
                break;
            }
        }

        // Exactly one scheduling pass per time point, after the whole batch.
        const SchedulerDecisions decisions = scheduler.make_decisions(platform, now);
        for (const Placement& placement : decisions.started)
            start_job(jobs_by_id.at(placement.job_id), placement.machine_id, now);
        for (const auto& [machine_id, boot_done] : decisions.switched_on)
            events.push(boot_done, EventKind::BootComplete, machine_id);
        for (const auto& [machine_id, off_done] : decisions.switched_off)
            events.push(off_done, EventKind::OffComplete, machine_id);

        for (const Machine& m : platform.machines()) {
            if (m.state() == MachineState::On && m.busy_cores() == 0 && m.reserved_cores() == 0)
                throw SimulationError("machine " + std::to_string(m.id()) +
                                      " left on and idle after a scheduling pass");
        }

        if (platform.consume_mutation_flag()) {
            PowerSegment seg{now, platform.total_power()};
            if (trace.power_timeline.back().start == now)
                trace.power_timeline.back() = seg;
            else
                trace.power_timeline.push_back(seg);
        }
    }

    if (!scheduler.queue().empty())
        throw SimulationError("simulation ended with jobs still waiting");
    if (records.size() != workload.jobs.size())
        throw SimulationError("simulation ended with jobs never started");

    trace.jobs.reserve(records.size());
    for (auto& [id, rec] : records)
        trace.jobs.push_back(std::move(rec));
    trace.machine_log = platform.machine_log();
    trace.end_time = now;
    trace.energy_joules = platform.energy_joules();
    return trace;
}

} // namespace dcsim
