#include "dcsim/platform.hpp"

#include <string>

namespace dcsim {

namespace {

std::string machine_tag(int id)
{
    return "machine " + std::to_string(id);
}

} // namespace

void PowerParams::validate() const
{
    if (p_idle < 0 || p_core < 0 || p_off < 0 || p_son < 0 || p_soff < 0)
        throw ConfigError("power constants must be non-negative");
    if (t_son <= 0 || t_soff <= 0)
        throw ConfigError("switch-on/off durations must be positive");
}

const char* to_string(MachineState state)
{
    switch (state) {
    case MachineState::Off: return "off";
    case MachineState::SwitchingOn: return "switching_on";
    case MachineState::On: return "on";
    case MachineState::SwitchingOff: return "switching_off";
    }
    return "?";
}

Platform::Platform(int n_machines, int cores_per_machine, PowerParams params,
                   MachineState initial_state)
    : params_(params)
{
    if (n_machines < 1 || cores_per_machine < 1)
        throw ConfigError("platform needs at least one machine and one core");
    params_.validate();
    if (initial_state == MachineState::SwitchingOn || initial_state == MachineState::SwitchingOff)
        throw ConfigError("initial machine state must be Off or On");

    machines_.reserve(n_machines);
    machine_log_.resize(n_machines);
    for (int i = 0; i < n_machines; ++i) {
        Machine m(i, cores_per_machine);
        m.state_ = initial_state;
        machines_.push_back(m);
        machine_log_[i].push_back({0.0, initial_state, 0});
    }
}

const Machine& Platform::machine(int id) const
{
    if (id < 0 || id >= size())
        throw SchedulerLogicError("no such machine: " + std::to_string(id));
    return machines_[id];
}

Machine& Platform::mutable_machine(int id)
{
    if (id < 0 || id >= size())
        throw SchedulerLogicError("no such machine: " + std::to_string(id));
    mutated_ = true;
    return machines_[id];
}

void Platform::log_state(const Machine& m)
{
    machine_log_[m.id()].push_back({last_update_, m.state_, m.busy_});
}

double Platform::instantaneous_power(const Machine& m) const
{
    switch (m.state_) {
    case MachineState::Off: return params_.p_off;
    case MachineState::SwitchingOn: return params_.p_son;
    case MachineState::SwitchingOff: return params_.p_soff;
    case MachineState::On: return params_.p_idle + m.busy_ * params_.p_core;
    }
    return 0.0;
}

double Platform::total_power() const
{
    double watts = 0.0;
    for (const Machine& m : machines_)
        watts += instantaneous_power(m);
    return watts;
}

double Platform::accumulate_energy(double now)
{
    if (now < last_update_)
        throw SimulationError("time went backwards: " + std::to_string(now) + " < " +
                              std::to_string(last_update_));
    const double added = total_power() * (now - last_update_);
    energy_j_ += added;
    last_update_ = now;
    return added;
}

double Platform::begin_switch_on(int machine_id, double now)
{
    if (now != last_update_)
        throw SimulationError("state mutation without prior energy accumulation");
    Machine& m = mutable_machine(machine_id);
    if (m.state_ != MachineState::Off)
        throw SchedulerLogicError(machine_tag(machine_id) + ": switch-on from state " +
                                  to_string(m.state_));
    m.state_ = MachineState::SwitchingOn;
    log_state(m);
    return now + params_.t_son;
}

double Platform::begin_switch_off(int machine_id, double now)
{
    if (now != last_update_)
        throw SimulationError("state mutation without prior energy accumulation");
    Machine& m = mutable_machine(machine_id);
    if (m.state_ != MachineState::On)
        throw SchedulerLogicError(machine_tag(machine_id) + ": switch-off from state " +
                                  to_string(m.state_));
    if (m.busy_ > 0 || m.reserved_ > 0)
        throw SchedulerLogicError(machine_tag(machine_id) +
                                  ": switch-off with busy or reserved cores");
    m.state_ = MachineState::SwitchingOff;
    log_state(m);
    return now + params_.t_soff;
}

void Platform::complete_switch_on(int machine_id)
{
    Machine& m = mutable_machine(machine_id);
    if (m.state_ != MachineState::SwitchingOn)
        throw SchedulerLogicError(machine_tag(machine_id) + ": boot completion in state " +
                                  to_string(m.state_));
    m.state_ = MachineState::On;
    log_state(m);
}

void Platform::complete_switch_off(int machine_id)
{
    Machine& m = mutable_machine(machine_id);
    if (m.state_ != MachineState::SwitchingOff)
        throw SchedulerLogicError(machine_tag(machine_id) + ": off completion in state " +
                                  to_string(m.state_));
    m.state_ = MachineState::Off;
    log_state(m);
}

void Platform::reserve(int machine_id, int cores)
{
    Machine& m = mutable_machine(machine_id);
    if (cores < 1)
        throw SchedulerLogicError("reserve of " + std::to_string(cores) + " cores");
    if (m.state_ != MachineState::On && m.state_ != MachineState::SwitchingOn)
        throw SchedulerLogicError(machine_tag(machine_id) + ": reserve in state " +
                                  to_string(m.state_));
    if (m.free_cores() < cores)
        throw SchedulerLogicError(machine_tag(machine_id) + ": reserve " +
                                  std::to_string(cores) + " cores with only " +
                                  std::to_string(m.free_cores()) + " free");
    m.reserved_ += cores;
    log_state(m);
}

void Platform::commit(int machine_id, int cores)
{
    Machine& m = mutable_machine(machine_id);
    if (m.state_ != MachineState::On)
        throw SchedulerLogicError(machine_tag(machine_id) + ": commit in state " +
                                  to_string(m.state_));
    if (m.reserved_ < cores)
        throw SchedulerLogicError(machine_tag(machine_id) + ": commit " +
                                  std::to_string(cores) + " cores with only " +
                                  std::to_string(m.reserved_) + " reserved");
    m.reserved_ -= cores;
    m.busy_ += cores;
    log_state(m);
}

void Platform::release(int machine_id, int cores)
{
    Machine& m = mutable_machine(machine_id);
    if (m.busy_ < cores)
        throw SchedulerLogicError(machine_tag(machine_id) + ": release " +
                                  std::to_string(cores) + " cores with only " +
                                  std::to_string(m.busy_) + " busy");
    m.busy_ -= cores;
    log_state(m);
}

bool Platform::consume_mutation_flag()
{
    const bool was = mutated_;
    mutated_ = false;
    return was;
}

} // namespace dcsim
