#pragma once

#include <vector>

#include "dcsim/errors.hpp"

namespace dcsim {

/// Machine power model constants. Defaults are measurements from a 16-core
/// Taurus cluster node.
struct PowerParams {
    double p_idle = 100.0;  // W, switched on, no core in use
    double p_core = 7.3125; // W per core running a job
    double p_off = 9.75;    // W, switched off
    double p_son = 100.0;   // W while switching on
    double p_soff = 125.0;  // W while switching off
    double t_son = 150.0;   // s to switch on
    double t_soff = 6.0;    // s to switch off

    void validate() const; // throws ConfigError
};

enum class MachineState { Off, SwitchingOn, On, SwitchingOff };

const char* to_string(MachineState state);

/// One homogeneous multi-core machine. busy_cores are cores with a running
/// job; reserved_cores are committed to jobs waiting for the boot to finish.
class Machine {
public:
    Machine(int id, int capacity) : id_(id), capacity_(capacity) {}

    int id() const { return id_; }
    MachineState state() const { return state_; }
    int capacity() const { return capacity_; }
    int busy_cores() const { return busy_; }
    int reserved_cores() const { return reserved_; }
    int free_cores() const { return capacity_ - busy_ - reserved_; }

private:
    friend class Platform;

    int id_;
    int capacity_;
    MachineState state_ = MachineState::Off;
    int busy_ = 0;
    int reserved_ = 0;
};

struct MachineStateChange {
    double time = 0.0;
    MachineState state = MachineState::Off;
    int busy_cores = 0;

    bool operator==(const MachineStateChange&) const = default;
};

/// The machine fleet plus exact event-granularity energy accounting.
/// accumulate_energy must be called before any state mutation; every mutation
/// is appended to a per-machine state log.
class Platform {
public:
    Platform(int n_machines, int cores_per_machine, PowerParams params,
             MachineState initial_state = MachineState::Off);

    int size() const { return static_cast<int>(machines_.size()); }
    const Machine& machine(int id) const;
    const std::vector<Machine>& machines() const { return machines_; }
    const PowerParams& params() const { return params_; }

    double instantaneous_power(const Machine& m) const;
    double total_power() const;

    double energy_joules() const { return energy_j_; }
    double last_update() const { return last_update_; }

    /// Integrate power over [last_update, now). Returns the joules added.
    /// Throws SimulationError if now < last_update.
    double accumulate_energy(double now);

    /// Off -> SwitchingOn. Returns the boot completion time (now + t_son).
    double begin_switch_on(int machine_id, double now);
    /// On (idle, no reservations) -> SwitchingOff. Returns now + t_soff.
    double begin_switch_off(int machine_id, double now);
    void complete_switch_on(int machine_id);
    void complete_switch_off(int machine_id);

    /// Commit free cores to a job that has not started yet.
    void reserve(int machine_id, int cores);
    /// Turn reserved cores into busy cores (job starts; machine must be On).
    void commit(int machine_id, int cores);
    /// Free busy cores (job finished).
    void release(int machine_id, int cores);

    /// True if any mutation happened since the last call; resets the flag.
    bool consume_mutation_flag();

    const std::vector<std::vector<MachineStateChange>>& machine_log() const
    {
        return machine_log_;
    }

private:
    Machine& mutable_machine(int id);
    void log_state(const Machine& m);

    std::vector<Machine> machines_;
    PowerParams params_;
    double energy_j_ = 0.0;
    double last_update_ = 0.0;
    bool mutated_ = false;
    std::vector<std::vector<MachineStateChange>> machine_log_;
};

} // namespace dcsim
