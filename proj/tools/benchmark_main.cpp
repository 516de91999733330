// Compares the serial reference kernels against the OpenMP ones on the same
// workload and verifies that both produce identical results.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bch/batch.hpp"
#include "bch/channel.hpp"
#include "bch/code.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

struct Timed {
    double serial_s = 0.0;
    double parallel_s = 0.0;

    void print(const std::string& name) const
    {
        std::cout << std::left << std::setw(18) << name << std::fixed
                  << std::setprecision(3) << "serial " << std::setw(8) << serial_s
                  << "  openmp " << std::setw(8) << parallel_s << "  speedup "
                  << std::setprecision(2) << serial_s / parallel_s << "x\n";
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"serial vs OpenMP kernel comparison"};
    int trials = 20000;
    int blocks = 20000;
    int t = 3;
    std::uint64_t seed = 7;
    app.add_option("--trials", trials, "campaign trials");
    app.add_option("--blocks", blocks, "batch decode blocks");
    app.add_option("--t", t, "error-correction capability");
    app.add_option("--seed", seed, "channel seed");
    CLI11_PARSE(app, argc, argv);

    const bch::FieldTables gf = bch::FieldTables::build(bch::FieldSpec{9, 0x211});
    const bch::CodeSpec code = bch::make_code(gf, t, 256);

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both runs are serial\n";
#endif
    std::cout << "code (" << code.n << "," << code.k << "," << code.t << ")\n\n";

    // Campaign kernel.
    bch::ChannelSpec channel{bch::RandomFlips{code.t}, seed};
    Timed campaign_time;
    auto start = std::chrono::steady_clock::now();
    const bch::CampaignStats serial_stats =
        bch::campaign(gf, code, trials, channel, 4, 4, bch::Execution::Serial);
    campaign_time.serial_s = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const bch::CampaignStats parallel_stats =
        bch::campaign(gf, code, trials, channel, 4, 4, bch::Execution::Parallel);
    campaign_time.parallel_s = seconds_since(start);
    campaign_time.print("campaign");

    if (serial_stats.corrected != parallel_stats.corrected ||
        serial_stats.failures != parallel_stats.failures ||
        serial_stats.miscorrections != parallel_stats.miscorrections ||
        serial_stats.total_cycles != parallel_stats.total_cycles) {
        std::cerr << "MISMATCH: serial and OpenMP campaign stats differ\n";
        return 1;
    }

    // Batch decode kernel over corrupted blocks.
    std::vector<bch::ReceivedWord> words;
    words.reserve(static_cast<std::size_t>(blocks));
    for (int b = 0; b < blocks; ++b) {
        bch::SplitMix64 rng = bch::SplitMix64::split(seed, static_cast<std::uint64_t>(b));
        bch::Message msg = bch::make_message(code);
        for (int i = 0; i < code.k; ++i)
            msg.bits.set(static_cast<std::size_t>(i), rng.next() & 1u);
        bch::ChannelSpec block_channel{bch::RandomFlips{code.t}, rng.next()};
        words.push_back(bch::inject(bch::encode(code, msg), block_channel).word);
    }

    Timed decode_time;
    start = std::chrono::steady_clock::now();
    const auto serial_out =
        bch::decode_blocks(gf, code, words, 4, 4, bch::Execution::Serial);
    decode_time.serial_s = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const auto parallel_out =
        bch::decode_blocks(gf, code, words, 4, 4, bch::Execution::Parallel);
    decode_time.parallel_s = seconds_since(start);
    decode_time.print("batch decode");

    for (std::size_t i = 0; i < serial_out.size(); ++i) {
        if (serial_out[i].result.corrected.bits != parallel_out[i].result.corrected.bits ||
            serial_out[i].result.status != parallel_out[i].result.status) {
            std::cerr << "MISMATCH: serial and OpenMP decode outputs differ at block " << i
                      << "\n";
            return 1;
        }
    }

    std::cout << "\nserial and OpenMP kernels agree on all outputs\n";
    return 0;
}
