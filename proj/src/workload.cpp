#include "dcsim/workload.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "dcsim/errors.hpp"

namespace dcsim {

namespace {

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok)
        fields.push_back(tok);
    return fields;
}

double parse_double_field(const std::string& tok, std::size_t line_no, int field_no)
{
    double value = 0.0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(line_no, "field " + std::to_string(field_no) +
                                      " is not numeric: '" + tok + "'");
    return value;
}

long parse_long_field(const std::string& tok, std::size_t line_no, int field_no)
{
    long value = 0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(line_no, "field " + std::to_string(field_no) +
                                      " is not an integer: '" + tok + "'");
    return value;
}

// Header lines look like "; Key: value".
void scan_header_line(const std::string& line, SwfParseResult& result)
{
    const auto key_pos = line.find("UnixStartTime:");
    if (key_pos == std::string::npos)
        return;
    std::int64_t value = 0;
    std::istringstream iss(line.substr(key_pos + 14));
    if (iss >> value)
        result.unix_start_time = value;
}

std::string format_double(double v)
{
    // Shortest representation that round-trips.
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

// 53 uniformly random bits -> [0, 1).
double canonical(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi)
{
    return lo + static_cast<int>(canonical(rng) * (hi - lo + 1));
}

} // namespace

SwfParseResult parse_swf(std::istream& in, const SwfOptions& opts)
{
    SwfParseResult result;
    std::unordered_set<long> seen_ids;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue; // blank
        if (line[first] == ';') {
            scan_header_line(line, result);
            continue;
        }

        const auto fields = split_fields(line);
        if (fields.size() < 12)
            throw ParseError(line_no, "expected at least 12 fields, got " +
                                          std::to_string(fields.size()));

        Job job;
        job.id = parse_long_field(fields[0], line_no, 1);
        job.submit_time = parse_double_field(fields[1], line_no, 2);
        job.execution_time = parse_double_field(fields[3], line_no, 4);
        const long allocated = parse_long_field(fields[4], line_no, 5);
        const long requested = parse_long_field(fields[7], line_no, 8);

        // The user field is numeric in archive traces (-1 meaning unknown)
        // but treated as opaque otherwise, so serialized sets round-trip.
        const std::string& user = fields[11];
        long user_num = 0;
        const auto [uptr, uec] =
            std::from_chars(user.data(), user.data() + user.size(), user_num);
        const bool user_missing =
            uec == std::errc{} && uptr == user.data() + user.size() && user_num < 0;

        long procs = opts.prefer_allocated ? allocated : requested;
        if (procs <= 0)
            procs = opts.prefer_allocated ? requested : allocated;

        if (job.execution_time <= 0.0 || procs <= 0 || user_missing ||
            !seen_ids.insert(job.id).second) {
            ++result.skipped;
            continue;
        }

        job.size = static_cast<int>(procs);
        job.user = user;
        job.original_submit_time = job.submit_time;
        result.jobs.jobs.push_back(std::move(job));
    }

    result.jobs.sort();
    return result;
}

SwfParseResult parse_swf_file(const std::string& path, const SwfOptions& opts)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open workload file: " + path);
    return parse_swf(in, opts);
}

void write_swf(const JobSet& set, std::ostream& out)
{
    for (const Job& job : set.jobs) {
        out << job.id << ' ' << format_double(job.submit_time) << " -1 "
            << format_double(job.execution_time) << ' ' << job.size
            << " -1 -1 " << job.size << " -1 -1 -1 " << job.user
            << " -1 -1 -1 -1 -1 -1\n";
    }
}

JobSet filter_jobs(const JobSet& set, double max_execution_time, int max_size)
{
    JobSet out;
    out.jobs.reserve(set.jobs.size());
    std::copy_if(set.jobs.begin(), set.jobs.end(), std::back_inserter(out.jobs),
                 [&](const Job& j) {
                     return j.execution_time <= max_execution_time && j.size <= max_size;
                 });
    return out;
}

ExperimentWorkload slice_experiment(const JobSet& trace, double window_start_abs,
                                    double window_length, double window_anchor)
{
    if (window_anchor < 0.0 || window_anchor >= kSecondsPerDay)
        throw ConfigError("window anchor must be in [0, 86400)");
    if (window_length <= 0.0)
        throw ConfigError("window length must be positive");

    ExperimentWorkload wl;
    wl.horizon = kDefaultHorizon;
    wl.window.start = kSecondsPerDay + window_anchor;
    wl.window.end = wl.window.start + window_length;
    if (wl.window.end > wl.horizon)
        throw ConfigError("demand response window extends past the experiment horizon");

    // The experiment opens at midnight of the day before the window day.
    const double experiment_start = window_start_abs - wl.window.start;
    for (const Job& job : trace.jobs) {
        const double rebased = job.submit_time - experiment_start;
        if (rebased < 0.0 || rebased >= wl.horizon)
            continue;
        Job copy = job;
        copy.submit_time = rebased;
        copy.original_submit_time = rebased;
        wl.jobs.jobs.push_back(std::move(copy));
    }
    wl.jobs.sort();
    return wl;
}

void SyntheticSpec::validate() const
{
    if (rate_per_hour <= 0.0)
        throw ConfigError("synthetic rate must be positive");
    if (duration < 0.0)
        throw ConfigError("synthetic duration must be non-negative");
    if (size_min < 1 || size_max < size_min || size_max > 16)
        throw ConfigError("synthetic size bounds must satisfy 1 <= min <= max <= 16");
    if (runtime_min <= 0.0 || runtime_max < runtime_min || runtime_max > kSecondsPerDay)
        throw ConfigError("synthetic runtime bounds must satisfy 0 < min <= max <= 86400");
    if (n_users < 1)
        throw ConfigError("synthetic user count must be >= 1");
}

JobSet generate_synthetic(const SyntheticSpec& spec)
{
    spec.validate();

    JobSet set;
    std::mt19937_64 rng(spec.seed);
    const double rate_per_second = spec.rate_per_hour / kSecondsPerHour;
    const double log_min = std::log(spec.runtime_min);
    const double log_max = std::log(spec.runtime_max);

    double t = 0.0;
    long id = 1;
    while (true) {
        // Exponential inter-arrival by inversion.
        t += -std::log1p(-canonical(rng)) / rate_per_second;
        if (t >= spec.duration)
            break;

        double runtime;
        if (spec.log_uniform_runtime)
            runtime = std::exp(log_min + canonical(rng) * (log_max - log_min));
        else
            runtime = spec.runtime_min + canonical(rng) * (spec.runtime_max - spec.runtime_min);

        Job job;
        job.id = id++;
        job.size = uniform_int(rng, spec.size_min, spec.size_max);
        job.user = "u" + std::to_string(uniform_int(rng, 0, spec.n_users - 1));
        if (spec.snap_to_seconds) {
            job.submit_time = std::floor(t);
            job.execution_time = std::max(1.0, std::round(runtime));
        } else {
            job.submit_time = t;
            job.execution_time = runtime;
        }
        job.original_submit_time = job.submit_time;
        set.jobs.push_back(std::move(job));
    }
    return set;
}

WindowStats window_stats(const ExperimentWorkload& workload)
{
    WindowStats stats;
    for (const Job& job : workload.jobs.jobs) {
        if (workload.window.contains(job.submit_time)) {
            ++stats.n_jobs_in_window;
            stats.fluid_mass_core_h += job.mass_core_hours();
        }
    }
    return stats;
}

} // namespace dcsim
