#include "bch/arch_model.hpp"

#include <algorithm>
#include <sstream>

#include "bch/errors.hpp"

namespace bch {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b)
{
    return (a + b - 1) / b;
}

struct StageDurations {
    std::uint64_t syndrome;
    std::uint64_t bm;
    std::uint64_t chien;

    std::uint64_t interval() const { return std::max({syndrome, bm, chien}); }
    std::uint64_t total() const { return syndrome + bm + chien; }
};

StageDurations durations(const ArchConfig& cfg)
{
    if (cfg.n < 1)
        throw Error("codeword length must be positive");
    if (cfg.p_s < 1 || cfg.p_c < 1)
        throw InvalidParallelism("parallelization factors must be >= 1");
    return StageDurations{
        ceil_div(static_cast<std::uint64_t>(cfg.n), static_cast<std::uint64_t>(cfg.p_s)),
        static_cast<std::uint64_t>(2 * cfg.t),
        ceil_div(static_cast<std::uint64_t>(cfg.n), static_cast<std::uint64_t>(cfg.p_c))};
}

} // namespace

std::uint64_t latency_non_pipelined(const ArchConfig& cfg)
{
    return durations(cfg).total();
}

PipelineSchedule schedule_pipelined(const ArchConfig& cfg, int num_words)
{
    if (num_words < 1)
        throw Error("schedule needs at least one codeword");
    const StageDurations d = durations(cfg);
    const std::uint64_t interval = d.interval();

    PipelineSchedule schedule;
    schedule.steady_state_interval = interval;
    schedule.words.reserve(static_cast<std::size_t>(num_words));
    for (int w = 0; w < num_words; ++w) {
        const std::uint64_t enter = static_cast<std::uint64_t>(w) * interval;
        WordSchedule ws;
        ws.syndrome = {enter, enter + d.syndrome};
        ws.bm = {ws.syndrome.end, ws.syndrome.end + d.bm};
        ws.chien = {ws.bm.end, ws.bm.end + d.chien};
        schedule.words.push_back(ws);
    }
    schedule.total_cycles = schedule.words.back().chien.end;
    return schedule;
}

ThroughputReport throughput_report(const ArchConfig& cfg, int num_words)
{
    const StageDurations d = durations(cfg);
    ThroughputReport report;
    report.non_pipelined_total = static_cast<std::uint64_t>(num_words) * d.total();
    report.pipelined_total = schedule_pipelined(cfg, num_words).total_cycles;
    report.speedup = static_cast<double>(report.non_pipelined_total) /
                     static_cast<double>(report.pipelined_total);
    report.steady_state_interval = d.interval();
    report.asymptotic_speedup =
        static_cast<double>(d.total()) / static_cast<double>(d.interval());
    return report;
}

std::string render_schedule(const PipelineSchedule& schedule)
{
    std::ostringstream os;
    os << "word |        syndrome |              bm |           chien\n";
    for (std::size_t w = 0; w < schedule.words.size(); ++w) {
        const WordSchedule& ws = schedule.words[w];
        const auto span = [](const StageInterval& s) {
            std::ostringstream cell;
            cell << "[" << s.start << "," << s.end << ")";
            std::string text = cell.str();
            return std::string(text.size() < 16 ? 16 - text.size() : 0, ' ') + text;
        };
        os << std::string(w < 10 ? 4 - std::to_string(w).size() : 0, ' ') << w << " |"
           << span(ws.syndrome) << " |" << span(ws.bm) << " |" << span(ws.chien) << "\n";
    }
    os << "total cycles: " << schedule.total_cycles
       << ", steady-state interval: " << schedule.steady_state_interval << "\n";
    return os.str();
}

std::string render_throughput(const ThroughputReport& report, int num_words)
{
    std::ostringstream os;
    os << "codewords:              " << num_words << "\n"
       << "non-pipelined cycles:   " << report.non_pipelined_total << "\n"
       << "pipelined cycles:       " << report.pipelined_total << "\n"
       << "speedup:                " << report.speedup << "\n"
       << "steady-state interval:  " << report.steady_state_interval << "\n"
       << "asymptotic speedup:     " << report.asymptotic_speedup << "\n";
    return os.str();
}

} // namespace bch
