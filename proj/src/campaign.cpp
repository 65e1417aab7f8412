#include "dcsim/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include <json.hpp>

#include "dcsim/engine.hpp"
#include "dcsim/scheduler.hpp"

namespace dcsim {

namespace {

int behavior_rank(Behavior b) { return static_cast<int>(b); }

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

// Monday = 0 ... Sunday = 6; day 0 (1970-01-01) was a Thursday.
bool is_weekday(long day_index)
{
    const long w = ((day_index + 3) % 7 + 7) % 7;
    return w <= 4;
}

} // namespace

void CampaignConfig::validate() const
{
    const bool has_swf = !swf_path.empty();
    if (has_swf == synthetic.has_value())
        throw ConfigError("exactly one workload source required: swf_path or synthetic");
    if (synthetic) {
        synthetic->validate();
        if (synthetic_count < 1)
            throw ConfigError("synthetic_count must be >= 1");
        if (synthetic->duration > horizon)
            throw ConfigError("synthetic duration exceeds the horizon");
    }
    if (has_swf && plan.window_starts_abs.empty() && plan.day_offsets.empty() &&
        !plan.weekdays_auto)
        throw ConfigError("trace campaigns need window_starts_abs, day_offsets or weekdays_auto");

    if (!(filter_max_runtime > 0.0))
        throw ConfigError("filter_max_runtime must be positive");
    if (filter_max_size < 1)
        throw ConfigError("filter_max_size must be >= 1");
    if (n_machines < 1 || cores_per_machine < 1)
        throw ConfigError("platform needs at least one machine and one core");
    power.validate();

    if (window_hours.empty())
        throw ConfigError("at least one window length required");
    std::set<double> seen_hours;
    for (const double h : window_hours) {
        if (!(h > 0.0))
            throw ConfigError("window lengths must be positive");
        if (!seen_hours.insert(h).second)
            throw ConfigError("duplicate window length");
        if (kSecondsPerDay + window_anchor + h * kSecondsPerHour > horizon)
            throw ConfigError("window extends past the horizon");
    }
    if (!(window_anchor >= 0.0) || window_anchor >= kSecondsPerDay)
        throw ConfigError("window_anchor must lie within one day");
    if (!(horizon > 0.0))
        throw ConfigError("horizon must be positive");

    if (behaviors.empty())
        throw ConfigError("at least one behavior required");
    std::set<Behavior> seen_behaviors;
    for (const Behavior b : behaviors)
        if (!seen_behaviors.insert(b).second)
            throw ConfigError("duplicate behavior");
    if (!seen_behaviors.count(Behavior::Rigid))
        throw ConfigError("behaviors must include rigid (the gain baseline)");

    if (workers < 1)
        throw ConfigError("workers must be >= 1");
}

namespace {

using nlohmann::json;

double get_number(const json& v, const char* key)
{
    if (!v.is_number())
        throw ConfigError(std::string("config key '") + key + "' must be a number");
    return v.get<double>();
}

long get_integer(const json& v, const char* key)
{
    if (!v.is_number_integer())
        throw ConfigError(std::string("config key '") + key + "' must be an integer");
    return v.get<long>();
}

bool get_bool(const json& v, const char* key)
{
    if (!v.is_boolean())
        throw ConfigError(std::string("config key '") + key + "' must be a boolean");
    return v.get<bool>();
}

std::string get_string(const json& v, const char* key)
{
    if (!v.is_string())
        throw ConfigError(std::string("config key '") + key + "' must be a string");
    return v.get<std::string>();
}

PowerParams parse_power(const json& obj)
{
    PowerParams p;
    for (const auto& [key, value] : obj.items()) {
        if (key == "p_idle") p.p_idle = get_number(value, "p_idle");
        else if (key == "p_core") p.p_core = get_number(value, "p_core");
        else if (key == "p_off") p.p_off = get_number(value, "p_off");
        else if (key == "p_son") p.p_son = get_number(value, "p_son");
        else if (key == "p_soff") p.p_soff = get_number(value, "p_soff");
        else if (key == "t_son") p.t_son = get_number(value, "t_son");
        else if (key == "t_soff") p.t_soff = get_number(value, "t_soff");
        else throw ConfigError("unknown power key '" + key + "'");
    }
    return p;
}

SyntheticSpec parse_synthetic(const json& obj)
{
    SyntheticSpec s;
    for (const auto& [key, value] : obj.items()) {
        if (key == "seed") s.seed = static_cast<std::uint64_t>(get_integer(value, "seed"));
        else if (key == "rate_per_hour") s.rate_per_hour = get_number(value, "rate_per_hour");
        else if (key == "duration") s.duration = get_number(value, "duration");
        else if (key == "size_min") s.size_min = static_cast<int>(get_integer(value, "size_min"));
        else if (key == "size_max") s.size_max = static_cast<int>(get_integer(value, "size_max"));
        else if (key == "runtime_min") s.runtime_min = get_number(value, "runtime_min");
        else if (key == "runtime_max") s.runtime_max = get_number(value, "runtime_max");
        else if (key == "log_uniform_runtime")
            s.log_uniform_runtime = get_bool(value, "log_uniform_runtime");
        else if (key == "n_users") s.n_users = static_cast<int>(get_integer(value, "n_users"));
        else if (key == "snap_to_seconds") s.snap_to_seconds = get_bool(value, "snap_to_seconds");
        else throw ConfigError("unknown synthetic key '" + key + "'");
    }
    return s;
}

} // namespace

CampaignConfig load_config_json(const std::string& json_text)
{
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& ex) {
        throw ConfigError(std::string("config is not valid JSON: ") + ex.what());
    }
    if (!root.is_object())
        throw ConfigError("config root must be a JSON object");

    CampaignConfig cfg;
    for (const auto& [key, value] : root.items()) {
        if (key == "swf_path") cfg.swf_path = get_string(value, "swf_path");
        else if (key == "synthetic") cfg.synthetic = parse_synthetic(value);
        else if (key == "synthetic_count")
            cfg.synthetic_count = static_cast<int>(get_integer(value, "synthetic_count"));
        else if (key == "prefer_allocated")
            cfg.swf_options.prefer_allocated = get_bool(value, "prefer_allocated");
        else if (key == "filter_max_runtime")
            cfg.filter_max_runtime = get_number(value, "filter_max_runtime");
        else if (key == "filter_max_size")
            cfg.filter_max_size = static_cast<int>(get_integer(value, "filter_max_size"));
        else if (key == "n_machines")
            cfg.n_machines = static_cast<int>(get_integer(value, "n_machines"));
        else if (key == "cores_per_machine")
            cfg.cores_per_machine = static_cast<int>(get_integer(value, "cores_per_machine"));
        else if (key == "power") cfg.power = parse_power(value);
        else if (key == "window_hours") {
            if (!value.is_array())
                throw ConfigError("window_hours must be an array");
            cfg.window_hours.clear();
            for (const auto& h : value)
                cfg.window_hours.push_back(get_number(h, "window_hours"));
        } else if (key == "window_anchor") cfg.window_anchor = get_number(value, "window_anchor");
        else if (key == "horizon") cfg.horizon = get_number(value, "horizon");
        else if (key == "behaviors") {
            if (!value.is_array())
                throw ConfigError("behaviors must be an array");
            cfg.behaviors.clear();
            for (const auto& b : value)
                cfg.behaviors.push_back(parse_behavior(get_string(b, "behaviors")));
        } else if (key == "per_user") {
            if (!value.is_object())
                throw ConfigError("per_user must map user ids to behaviors");
            for (const auto& [user, name] : value.items())
                cfg.per_user.per_user[user] = parse_behavior(get_string(name, "per_user"));
        } else if (key == "window_starts_abs") {
            if (!value.is_array())
                throw ConfigError("window_starts_abs must be an array");
            for (const auto& t : value)
                cfg.plan.window_starts_abs.push_back(get_number(t, "window_starts_abs"));
        } else if (key == "day_offsets") {
            if (!value.is_array())
                throw ConfigError("day_offsets must be an array");
            for (const auto& d : value)
                cfg.plan.day_offsets.push_back(get_integer(d, "day_offsets"));
        } else if (key == "weekdays_auto") cfg.plan.weekdays_auto = get_bool(value, "weekdays_auto");
        else if (key == "epoch_override")
            cfg.plan.epoch_override = get_integer(value, "epoch_override");
        else if (key == "utc_offset_s") cfg.plan.utc_offset_s = get_integer(value, "utc_offset_s");
        else if (key == "out_dir") cfg.out_dir = get_string(value, "out_dir");
        else if (key == "workers") cfg.workers = static_cast<int>(get_integer(value, "workers"));
        else if (key == "dump_traces") cfg.dump_traces = get_bool(value, "dump_traces");
        else throw ConfigError("unknown config key '" + key + "'");
    }
    return cfg;
}

CampaignConfig load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return load_config_json(text.str());
}

namespace {

/// Window start times (trace seconds) for a trace campaign, ascending, unique.
std::vector<double> plan_window_starts(const CampaignConfig& config, const JobSet& trace,
                                       std::optional<std::int64_t> trace_epoch)
{
    std::vector<double> starts = config.plan.window_starts_abs;
    for (const long day : config.plan.day_offsets)
        starts.push_back(day * kSecondsPerDay + config.window_anchor);

    if (config.plan.weekdays_auto) {
        const auto epoch = config.plan.epoch_override ? config.plan.epoch_override : trace_epoch;
        if (!epoch)
            throw ConfigError("weekday enumeration needs the trace epoch "
                              "(UnixStartTime header or epoch_override)");
        if (trace.empty())
            throw ConfigError("cannot enumerate weekdays of an empty trace");

        // Walk the calendar days the trace covers, in the configured zone.
        const long local0 = static_cast<long>(*epoch) + config.plan.utc_offset_s;
        const double trace_end = trace.jobs.back().submit_time;
        const long first_day = floor_div(local0, static_cast<long>(kSecondsPerDay));
        const long last_day =
            floor_div(local0 + static_cast<long>(trace_end), static_cast<long>(kSecondsPerDay));
        const double lead = kSecondsPerDay + config.window_anchor;
        for (long day = first_day; day <= last_day; ++day) {
            if (!is_weekday(day))
                continue;
            const double start =
                static_cast<double>(day) * kSecondsPerDay + config.window_anchor - local0;
            // Only full three-day experiments.
            if (start - lead < 0.0 || start - lead + config.horizon > trace_end)
                continue;
            starts.push_back(start);
        }
    }

    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    return starts;
}

struct WorkItem {
    int experiment_id = 0;
    double window_start_abs = 0.0;
    double window_length_s = 0.0;
    ExperimentWorkload workload;
};

struct ItemOutput {
    std::vector<ResultRow> rows;
    std::vector<std::string> errors;
};

std::string trace_basename(const WorkItem& item, Behavior behavior)
{
    return "exp" + std::to_string(item.experiment_id) + "_win" +
           std::to_string(static_cast<long>(item.window_length_s)) + "_" + to_string(behavior);
}

ItemOutput run_item(const CampaignConfig& config, const WorkItem& item,
                    const std::string& trace_dir)
{
    ItemOutput out;
    try {
        std::vector<Behavior> behaviors = config.behaviors;
        std::sort(behaviors.begin(), behaviors.end(),
                  [](Behavior a, Behavior b) { return behavior_rank(a) < behavior_rank(b); });

        const DemandResponseWindow& window = item.workload.window;
        const WindowStats stats = window_stats(item.workload);

        MassSplit mass;
        std::optional<ExperimentResult> baseline;
        for (const Behavior behavior : behaviors) {
            BehaviorAssignment assignment = config.per_user;
            assignment.default_behavior = behavior;

            const ExperimentWorkload transformed = transform_workload(item.workload, assignment);
            const SimulationTrace trace = run_simulation(
                transformed,
                Platform(config.n_machines, config.cores_per_machine, config.power));

            if (behavior == Behavior::Rigid)
                mass = fluid_residual(trace, window);
            const ExperimentResult result = evaluate(trace, window, config.horizon, mass);
            if (behavior == Behavior::Rigid)
                baseline = result;

            ResultRow row;
            row.experiment_id = item.experiment_id;
            row.window_start_abs = item.window_start_abs;
            row.window_length_s = item.window_length_s;
            row.behavior = behavior;
            row.result = result;
            row.gain_energy_in_pct =
                relative_gain_pct(result.energy_in_kwh, baseline->energy_in_kwh);
            row.gain_energy_after_pct =
                relative_gain_pct(result.energy_after_kwh, baseline->energy_after_kwh);
            row.gain_energy_overall_pct =
                relative_gain_pct(result.energy_overall_kwh, baseline->energy_overall_kwh);
            row.n_jobs_window = stats.n_jobs_in_window;
            out.rows.push_back(std::move(row));

            if (config.dump_traces) {
                const std::string base = trace_dir + "/" + trace_basename(item, behavior);
                emit_trace_csv(trace, base + "_jobs.csv", base + "_power.csv");
            }
        }
    } catch (const std::exception& ex) {
        out.rows.clear();
        out.errors.push_back("experiment " + std::to_string(item.experiment_id) + " window " +
                             format_csv_double(item.window_length_s) + "s: " + ex.what());
    }
    return out;
}

} // namespace

ResultsTable run_campaign(const CampaignConfig& config)
{
    config.validate();

    std::vector<double> window_lengths;
    for (const double h : config.window_hours)
        window_lengths.push_back(h * kSecondsPerHour);
    std::sort(window_lengths.begin(), window_lengths.end());

    std::vector<WorkItem> items;
    if (!config.swf_path.empty()) {
        const SwfParseResult parsed = parse_swf_file(config.swf_path, config.swf_options);
        const JobSet filtered =
            filter_jobs(parsed.jobs, config.filter_max_runtime, config.filter_max_size);
        const std::vector<double> starts =
            plan_window_starts(config, filtered, parsed.unix_start_time);
        if (starts.empty())
            throw ConfigError("experiment plan is empty");
        for (std::size_t e = 0; e < starts.size(); ++e) {
            for (const double len : window_lengths) {
                WorkItem item;
                item.experiment_id = static_cast<int>(e);
                item.window_start_abs = starts[e];
                item.window_length_s = len;
                item.workload =
                    slice_experiment(filtered, starts[e], len, config.window_anchor);
                items.push_back(std::move(item));
            }
        }
    } else {
        for (int e = 0; e < config.synthetic_count; ++e) {
            SyntheticSpec spec = *config.synthetic;
            spec.seed += static_cast<std::uint64_t>(e);
            const JobSet jobs = generate_synthetic(spec);
            for (const double len : window_lengths) {
                WorkItem item;
                item.experiment_id = e;
                item.window_start_abs = kSecondsPerDay + config.window_anchor;
                item.window_length_s = len;
                item.workload.jobs = jobs;
                item.workload.horizon = config.horizon;
                item.workload.window = DemandResponseWindow{
                    kSecondsPerDay + config.window_anchor,
                    kSecondsPerDay + config.window_anchor + len};
                items.push_back(std::move(item));
            }
        }
    }

    std::string trace_dir;
    if (config.dump_traces) {
        trace_dir = config.out_dir + "/traces";
        std::filesystem::create_directories(trace_dir);
    }

    std::vector<ItemOutput> outputs(items.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size())
                return;
            outputs[i] = run_item(config, items[i], trace_dir);
        }
    };

    const int n_threads =
        std::min<int>(config.workers, static_cast<int>(items.size() ? items.size() : 1));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }

    ResultsTable table;
    for (ItemOutput& output : outputs) {
        for (ResultRow& row : output.rows)
            table.rows.push_back(std::move(row));
        for (std::string& err : output.errors)
            table.errors.push_back(std::move(err));
    }
    return table;
}

namespace {

// Linear-interpolation quantile of a sorted sample.
double quantile(const std::vector<double>& sorted, double p)
{
    const std::size_t n = sorted.size();
    if (n == 1)
        return sorted[0];
    const double h = p * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

} // namespace

std::vector<SummaryRow> summarize(const ResultsTable& table)
{
    static const char* kMetrics[] = {"energy_in", "energy_after", "energy_overall"};

    // (behavior, window length, metric index) -> gains
    std::map<std::tuple<int, double, int>, std::vector<double>> samples;
    for (const ResultRow& row : table.rows) {
        const std::optional<double> gains[] = {row.gain_energy_in_pct, row.gain_energy_after_pct,
                                               row.gain_energy_overall_pct};
        for (int m = 0; m < 3; ++m)
            if (gains[m])
                samples[{behavior_rank(row.behavior), row.window_length_s, m}].push_back(
                    *gains[m]);
    }

    std::vector<SummaryRow> out;
    for (auto& [key, values] : samples) {
        std::sort(values.begin(), values.end());
        SummaryRow row;
        row.behavior = static_cast<Behavior>(std::get<0>(key));
        row.window_length_s = std::get<1>(key);
        row.metric = kMetrics[std::get<2>(key)];
        row.n = values.size();
        row.min = values.front();
        row.q1 = quantile(values, 0.25);
        row.median = quantile(values, 0.5);
        row.q3 = quantile(values, 0.75);
        row.max = values.back();
        double sum = 0.0;
        for (const double v : values)
            sum += v;
        row.mean = sum / static_cast<double>(values.size());
        out.push_back(std::move(row));
    }

    std::sort(out.begin(), out.end(), [](const SummaryRow& a, const SummaryRow& b) {
        if (a.behavior != b.behavior)
            return behavior_rank(a.behavior) < behavior_rank(b.behavior);
        if (a.window_length_s != b.window_length_s)
            return a.window_length_s < b.window_length_s;
        return a.metric < b.metric;
    });
    return out;
}

std::string format_csv_double(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

namespace {

constexpr const char* kResultsHeader =
    "experiment_id,window_start,window_length_s,behavior,energy_in_kwh,energy_after_kwh,"
    "energy_overall_kwh,gain_energy_in_pct,gain_energy_after_pct,gain_energy_overall_pct,"
    "mean_wait_s,mean_slowdown,mean_wait_corrected_s,mean_slowdown_corrected,fluid_core_h,"
    "residual_core_h,fluid_ratio,n_jobs_window";

std::string format_optional(const std::optional<double>& value)
{
    return value ? format_csv_double(*value) : "NA";
}

} // namespace

void emit_results_csv(const ResultsTable& table, std::ostream& out)
{
    out << kResultsHeader << '\n';
    for (const ResultRow& row : table.rows) {
        out << row.experiment_id << ',' << format_csv_double(row.window_start_abs) << ','
            << format_csv_double(row.window_length_s) << ',' << to_string(row.behavior) << ','
            << format_csv_double(row.result.energy_in_kwh) << ','
            << format_csv_double(row.result.energy_after_kwh) << ','
            << format_csv_double(row.result.energy_overall_kwh) << ','
            << format_optional(row.gain_energy_in_pct) << ','
            << format_optional(row.gain_energy_after_pct) << ','
            << format_optional(row.gain_energy_overall_pct) << ','
            << format_optional(row.result.mean_wait_s) << ','
            << format_optional(row.result.mean_slowdown) << ','
            << format_optional(row.result.mean_wait_corrected_s) << ','
            << format_optional(row.result.mean_slowdown_corrected) << ','
            << format_csv_double(row.result.fluid_core_h) << ','
            << format_csv_double(row.result.residual_core_h) << ','
            << format_optional(row.result.fluid_ratio) << ',' << row.n_jobs_window << '\n';
    }
}

void emit_results_csv_file(const ResultsTable& table, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    emit_results_csv(table, out);
    out.flush();
    if (!out)
        throw Error("write failed for " + path);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::string::size_type pos = 0;
    for (;;) {
        const auto comma = line.find(',', pos);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

double parse_csv_double(const std::string& field, std::size_t line_no)
{
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(line_no, "'" + field + "' is not a number");
    return value;
}

std::optional<double> parse_csv_optional(const std::string& field, std::size_t line_no)
{
    if (field == "NA")
        return std::nullopt;
    return parse_csv_double(field, line_no);
}

} // namespace

ResultsTable read_results_csv(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line))
        throw ParseError(1, "missing results header");
    ++line_no;
    if (line != kResultsHeader)
        throw ParseError(1, "unexpected results header");

    ResultsTable table;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 18)
            throw ParseError(line_no,
                             "expected 18 fields, got " + std::to_string(f.size()));
        ResultRow row;
        row.experiment_id = static_cast<int>(parse_csv_double(f[0], line_no));
        row.window_start_abs = parse_csv_double(f[1], line_no);
        row.window_length_s = parse_csv_double(f[2], line_no);
        row.behavior = parse_behavior(f[3]);
        row.result.energy_in_kwh = parse_csv_double(f[4], line_no);
        row.result.energy_after_kwh = parse_csv_double(f[5], line_no);
        row.result.energy_overall_kwh = parse_csv_double(f[6], line_no);
        row.gain_energy_in_pct = parse_csv_optional(f[7], line_no);
        row.gain_energy_after_pct = parse_csv_optional(f[8], line_no);
        row.gain_energy_overall_pct = parse_csv_optional(f[9], line_no);
        row.result.mean_wait_s = parse_csv_optional(f[10], line_no);
        row.result.mean_slowdown = parse_csv_optional(f[11], line_no);
        row.result.mean_wait_corrected_s = parse_csv_optional(f[12], line_no);
        row.result.mean_slowdown_corrected = parse_csv_optional(f[13], line_no);
        row.result.fluid_core_h = parse_csv_double(f[14], line_no);
        row.result.residual_core_h = parse_csv_double(f[15], line_no);
        row.result.fluid_ratio = parse_csv_optional(f[16], line_no);
        row.n_jobs_window = static_cast<std::size_t>(parse_csv_double(f[17], line_no));
        table.rows.push_back(std::move(row));
    }
    return table;
}

void emit_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out)
{
    out << "behavior,window_length_s,metric,n,min,q1,median,q3,max,mean\n";
    for (const SummaryRow& row : rows) {
        out << to_string(row.behavior) << ',' << format_csv_double(row.window_length_s) << ','
            << row.metric << ',' << row.n << ',' << format_csv_double(row.min) << ','
            << format_csv_double(row.q1) << ',' << format_csv_double(row.median) << ','
            << format_csv_double(row.q3) << ',' << format_csv_double(row.max) << ','
            << format_csv_double(row.mean) << '\n';
    }
}

void emit_summary_csv_file(const std::vector<SummaryRow>& rows, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    emit_summary_csv(rows, out);
    out.flush();
    if (!out)
        throw Error("write failed for " + path);
}

void emit_trace_csv(const SimulationTrace& trace, const std::string& jobs_path,
                    const std::string& power_path)
{
    {
        std::ofstream out(jobs_path);
        if (!out)
            throw Error("cannot write " + jobs_path);
        out << "job_id,user,size,execution_time_s,submit_s,original_submit_s,start_s,finish_s,"
               "machine_id,waiting_s,slowdown\n";
        for (const JobRecord& rec : trace.jobs) {
            out << rec.id << ',' << rec.user << ',' << rec.size << ','
                << format_csv_double(rec.execution_time) << ',' << format_csv_double(rec.submit)
                << ',' << format_csv_double(rec.original_submit) << ','
                << format_csv_double(rec.start) << ',' << format_csv_double(rec.finish) << ','
                << rec.machine_id << ',' << format_csv_double(rec.waiting_time()) << ','
                << format_csv_double(rec.slowdown()) << '\n';
        }
        out.flush();
        if (!out)
            throw Error("write failed for " + jobs_path);
    }
    {
        std::ofstream out(power_path);
        if (!out)
            throw Error("cannot write " + power_path);
        out << "time_s,power_w\n";
        for (const PowerSegment& seg : trace.power_timeline)
            out << format_csv_double(seg.start) << ',' << format_csv_double(seg.power_w) << '\n';
        out.flush();
        if (!out)
            throw Error("write failed for " + power_path);
    }
}

} // namespace dcsim
