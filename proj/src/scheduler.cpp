#include "dcsim/scheduler.hpp"

#include <algorithm>

namespace dcsim {

namespace {

// Decreasing size; FCFS among equals. Jobs resubmitted in the same batch
// (equal submit time) keep the order of their original submissions.
bool queue_order(const Job& a, const Job& b)
{
    if (a.size != b.size)
        return a.size > b.size;
    if (a.submit_time != b.submit_time)
        return a.submit_time < b.submit_time;
    if (a.original_submit_time != b.original_submit_time)
        return a.original_submit_time < b.original_submit_time;
    return a.id < b.id;
}

} // namespace

void WaitQueue::enqueue(Job job)
{
    const bool duplicate =
        std::any_of(jobs_.begin(), jobs_.end(), [&](const Job& j) { return j.id == job.id; });
    if (duplicate)
        throw SchedulerLogicError("job " + std::to_string(job.id) + " is already queued");
    const auto pos = std::upper_bound(jobs_.begin(), jobs_.end(), job, queue_order);
    jobs_.insert(pos, std::move(job));
}

SchedulerDecisions BinPackingScheduler::make_decisions(Platform& platform, double now)
{
    SchedulerDecisions decisions;

    auto& waiting = queue_.jobs_;
    std::vector<Job> still_waiting;
    still_waiting.reserve(waiting.size());

    for (Job& job : waiting) {
        // Smallest machine that fits: fewest free cores among the machines
        // that are on or booting, lowest id on a tie.
        int best = -1;
        for (const Machine& m : platform.machines()) {
            if (m.state() != MachineState::On && m.state() != MachineState::SwitchingOn)
                continue;
            if (m.free_cores() < job.size)
                continue;
            if (best < 0 || m.free_cores() < platform.machine(best).free_cores())
                best = m.id();
        }

        if (best >= 0) {
            const Machine& m = platform.machine(best);
            if (m.state() == MachineState::On) {
                platform.reserve(best, job.size);
                platform.commit(best, job.size);
                decisions.started.push_back({job.id, best, now});
            } else {
                platform.reserve(best, job.size);
                boot_reservations_[best].push_back(job);
                decisions.reserved.emplace_back(job.id, best);
            }
            continue;
        }

        // Power one machine up for this job, if any is off. The booting
        // machine becomes a candidate for the rest of the pass.
        int off_machine = -1;
        for (const Machine& m : platform.machines()) {
            if (m.state() == MachineState::Off) {
                off_machine = m.id();
                break;
            }
        }
        if (off_machine >= 0 && platform.machine(off_machine).capacity() >= job.size) {
            const double boot_done = platform.begin_switch_on(off_machine, now);
            decisions.switched_on.emplace_back(off_machine, boot_done);
            platform.reserve(off_machine, job.size);
            boot_reservations_[off_machine].push_back(job);
            decisions.reserved.emplace_back(job.id, off_machine);
            continue;
        }

        still_waiting.push_back(std::move(job));
    }
    waiting = std::move(still_waiting);

    // Immediately shut down all idle machines.
    for (const Machine& m : platform.machines()) {
        if (m.state() == MachineState::On && m.busy_cores() == 0 && m.reserved_cores() == 0) {
            const double off_done = platform.begin_switch_off(m.id(), now);
            decisions.switched_off.emplace_back(m.id(), off_done);
        }
    }

    return decisions;
}

std::vector<Job> BinPackingScheduler::collect_boot_reservations(int machine_id)
{
    const auto it = boot_reservations_.find(machine_id);
    if (it == boot_reservations_.end())
        return {};
    std::vector<Job> jobs = std::move(it->second);
    boot_reservations_.erase(it);
    return jobs;
}

bool BinPackingScheduler::has_boot_reservations(int machine_id) const
{
    const auto it = boot_reservations_.find(machine_id);
    return it != boot_reservations_.end() && !it->second.empty();
}

} // namespace dcsim
