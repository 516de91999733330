#ifndef BCH_CHANNEL_HPP
#define BCH_CHANNEL_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "bch/code.hpp"
#include "bch/decoder.hpp"
#include "bch/encoder.hpp"

namespace bch {

/// splitmix64: fixed, documented, splittable. Reproducibility across runs is
/// part of the channel contract, so no std:: distribution machinery is used.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Unbiased value in [0, bound) via rejection.
    std::uint64_t next_below(std::uint64_t bound);

    /// Sub-generator for trial `index`, independent of draw order elsewhere.
    static SplitMix64 split(std::uint64_t seed, std::uint64_t index)
    {
        SplitMix64 mixer(seed ^ (0x5851f42d4c957f2dull * (index + 1)));
        return SplitMix64(mixer.next());
    }

private:
    std::uint64_t state_;
};

struct ExactPositions {
    std::vector<int> positions; // distinct, < n
};

struct RandomFlips {
    int count = 0; // <= n
};

struct BernoulliFlips {
    double probability = 0.0; // in [0, 1]
};

struct ChannelSpec {
    std::variant<ExactPositions, RandomFlips, BernoulliFlips> model = RandomFlips{0};
    std::uint64_t seed = 0;
};

/// Flash page framing used by the bench report.
struct PageFrame {
    int sector_payload_bits = 0;
    int codewords_per_page = 0;
};

PageFrame make_page_frame(const CodeSpec& code, int sector_payload_bits);

struct InjectResult {
    ReceivedWord word;
    std::vector<int> true_positions; // sorted ground truth for oracles
};

/// Flips exactly the chosen positions; deterministic given (cw, ch.seed).
InjectResult inject(const Codeword& cw, const ChannelSpec& ch);

enum class Execution { Serial, Parallel };

struct TrialRecord {
    std::uint64_t trial = 0;
    int weight = 0;
    DecodeStatus status = DecodeStatus::NoError;
    std::uint64_t cycles = 0;
    bool exact = false; // decoded == original codeword
};

struct CampaignStats {
    std::uint64_t trials = 0;
    std::uint64_t no_error = 0;       // status NoError
    std::uint64_t corrected = 0;      // decoded == original (includes NoError)
    std::uint64_t failures = 0;       // status Failure
    std::uint64_t miscorrections = 0; // decoded != original and status != Failure
    std::uint64_t total_cycles = 0;

    double mean_cycles() const
    {
        return trials ? static_cast<double>(total_cycles) / static_cast<double>(trials)
                      : 0.0;
    }
};

/// Per-trial encode -> inject -> decode with a random message; trial i uses
/// the sub-seed split(ch.seed, i), so serial and parallel execution produce
/// identical statistics. The optional log receives one record per trial in
/// trial order.
CampaignStats campaign(const FieldTables& gf, const CodeSpec& code, int trials,
                       const ChannelSpec& ch, int p_s, int p_c,
                       Execution exec = Execution::Parallel,
                       std::vector<TrialRecord>* log = nullptr);

} // namespace bch

#endif
