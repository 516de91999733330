#ifndef BCH_ARCH_MODEL_HPP
#define BCH_ARCH_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bch {

struct ArchConfig {
    int n = 0;   // codeword length
    int t = 0;   // correction capability
    int p_s = 1; // syndrome parallelism
    int p_c = 1; // Chien parallelism
};

/// ceil(n/p_s) + 2t + ceil(n/p_c). All n/p terms round up: a partial final
/// symbol group still costs a clock.
std::uint64_t latency_non_pipelined(const ArchConfig& cfg);

struct StageInterval {
    std::uint64_t start = 0;
    std::uint64_t end = 0; // half-open [start, end)

    bool overlaps(const StageInterval& other) const
    {
        return start < other.end && other.start < end;
    }
};

struct WordSchedule {
    StageInterval syndrome;
    StageInterval bm;
    StageInterval chien;
};

struct PipelineSchedule {
    std::vector<WordSchedule> words;
    std::uint64_t total_cycles = 0;
    std::uint64_t steady_state_interval = 0;
};

/// Three-stage pipeline. Word w enters at w*I where the initiation interval I
/// is the worst-case stage duration; within a word the stages run
/// back-to-back. Structural hazard freedom follows because every stage
/// duration is <= I.
PipelineSchedule schedule_pipelined(const ArchConfig& cfg, int num_words);

struct ThroughputReport {
    std::uint64_t non_pipelined_total = 0;
    std::uint64_t pipelined_total = 0;
    double speedup = 1.0;
    std::uint64_t steady_state_interval = 0;
    double asymptotic_speedup = 1.0; // single-word latency / initiation interval
};

ThroughputReport throughput_report(const ArchConfig& cfg, int num_words);

/// Text Gantt: one row per codeword, one column group per stage.
std::string render_schedule(const PipelineSchedule& schedule);
std::string render_throughput(const ThroughputReport& report, int num_words);

} // namespace bch

#endif
