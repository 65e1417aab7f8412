#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dcsim/platform.hpp"
#include "dcsim/types.hpp"

namespace dcsim {

/// Waiting jobs in packing order: decreasing size, then first come first
/// served (submit time, then original submit time for jobs resubmitted in the
/// same batch, then id).
class WaitQueue {
public:
    /// Throws SchedulerLogicError if the job id is already queued.
    void enqueue(Job job);

    bool empty() const { return jobs_.empty(); }
    std::size_t size() const { return jobs_.size(); }
    const std::vector<Job>& jobs() const { return jobs_; }

private:
    friend class BinPackingScheduler;
    std::vector<Job> jobs_;
};

struct Placement {
    long job_id = 0;
    int machine_id = 0;
    double start_time = 0.0;
};

/// What one scheduling pass decided. Machines that started a power-state
/// transition are reported with the transition completion time.
struct SchedulerDecisions {
    std::vector<Placement> started;                   // began running now
    std::vector<std::pair<long, int>> reserved;       // job id -> booting machine
    std::vector<std::pair<int, double>> switched_on;  // machine id, boot complete
    std::vector<std::pair<int, double>> switched_off; // machine id, off complete
};

/// Greedy bin-packing with shutdown. Each waiting job goes to the smallest
/// machine (fewest free cores) that fits it, counting machines that are on or
/// booting; if none fits, an off machine is powered up for it. Idle machines
/// are switched off at the end of every pass.
class BinPackingScheduler {
public:
    void enqueue(Job job) { queue_.enqueue(std::move(job)); }

    /// One scheduling pass over the queue. Mutates the platform (core
    /// reservations, power commands) and removes the jobs it placed.
    SchedulerDecisions make_decisions(Platform& platform, double now);

    /// Jobs reserved on a machine whose boot just completed. The caller
    /// commits their cores and starts them.
    std::vector<Job> collect_boot_reservations(int machine_id);

    const WaitQueue& queue() const { return queue_; }
    bool has_boot_reservations(int machine_id) const;

private:
    WaitQueue queue_;
    std::map<int, std::vector<Job>> boot_reservations_;
};

} // namespace dcsim
