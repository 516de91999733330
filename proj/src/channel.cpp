#include "bch/channel.hpp"

#include <algorithm>

#include "bch/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bch {

std::uint64_t SplitMix64::next_below(std::uint64_t bound)
{
    if (bound == 0)
        throw Error("next_below: empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

PageFrame make_page_frame(const CodeSpec& code, int sector_payload_bits)
{
    if (sector_payload_bits < 1)
        throw Error("sector payload must be positive");
    PageFrame frame;
    frame.sector_payload_bits = sector_payload_bits;
    frame.codewords_per_page =
        static_cast<int>((sector_payload_bits + code.k - 1) / code.k);
    return frame;
}

namespace {

std::vector<int> draw_positions(const Codeword& cw, const ChannelSpec& ch,
                                SplitMix64& rng)
{
    const int n = static_cast<int>(cw.bits.size());
    std::vector<int> positions;

    if (const auto* exact = std::get_if<ExactPositions>(&ch.model)) {
        positions = exact->positions;
        std::sort(positions.begin(), positions.end());
        if (std::adjacent_find(positions.begin(), positions.end()) != positions.end())
            throw PositionOutOfRange("exact positions must be distinct");
        for (int pos : positions)
            if (pos < 0 || pos >= n)
                throw PositionOutOfRange("exact position outside the codeword");
        return positions;
    }

    if (const auto* flips = std::get_if<RandomFlips>(&ch.model)) {
        if (flips->count < 0 || flips->count > n)
            throw PositionOutOfRange("flip count outside [0, n]");
        // Distinct positions by rejection; counts stay far below n in
        // practice.
        while (static_cast<int>(positions.size()) < flips->count) {
            const int pos = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
            if (std::find(positions.begin(), positions.end(), pos) == positions.end())
                positions.push_back(pos);
        }
        std::sort(positions.begin(), positions.end());
        return positions;
    }

    const auto& bernoulli = std::get<BernoulliFlips>(ch.model);
    if (bernoulli.probability < 0.0 || bernoulli.probability > 1.0)
        throw Error("bit-flip probability outside [0, 1]");
    const double scale = 1.0 / 18446744073709551616.0; // 2^-64
    for (int pos = 0; pos < n; ++pos)
        if (static_cast<double>(rng.next()) * scale < bernoulli.probability)
            positions.push_back(pos);
    return positions;
}

} // namespace

InjectResult inject(const Codeword& cw, const ChannelSpec& ch)
{
    SplitMix64 rng(ch.seed);
    InjectResult out;
    out.true_positions = draw_positions(cw, ch, rng);
    out.word.bits = cw.bits;
    for (int pos : out.true_positions)
        out.word.bits.flip(static_cast<std::size_t>(pos));
    return out;
}

namespace {

TrialRecord run_trial(const FieldTables& gf, const CodeSpec& code, const ChannelSpec& ch,
                      int p_s, int p_c, std::uint64_t trial)
{
    SplitMix64 rng = SplitMix64::split(ch.seed, trial);

    Message msg = make_message(code);
    for (int i = 0; i < code.k; ++i)
        msg.bits.set(static_cast<std::size_t>(i), rng.next() & 1u);
    const Codeword sent = encode(code, msg);

    ChannelSpec trial_channel = ch;
    trial_channel.seed = rng.next();
    const InjectResult received = inject(sent, trial_channel);

    const DecodeOutput decoded = decode(gf, code, received.word, p_s, p_c);

    TrialRecord record;
    record.trial = trial;
    record.weight = static_cast<int>(received.true_positions.size());
    record.status = decoded.result.status;
    record.cycles = decoded.cycles;
    record.exact = decoded.result.corrected.bits == sent.bits;
    return record;
}

void accumulate(CampaignStats& stats, const TrialRecord& record)
{
    ++stats.trials;
    stats.total_cycles += record.cycles;
    if (record.status == DecodeStatus::NoError)
        ++stats.no_error;
    if (record.exact)
        ++stats.corrected;
    if (record.status == DecodeStatus::Failure)
        ++stats.failures;
    else if (!record.exact)
        ++stats.miscorrections;
}

} // namespace

CampaignStats campaign(const FieldTables& gf, const CodeSpec& code, int trials,
                       const ChannelSpec& ch, int p_s, int p_c, Execution exec,
                       std::vector<TrialRecord>* log)
{
    if (trials < 1)
        throw Error("campaign needs at least one trial");

    std::vector<TrialRecord> records(static_cast<std::size_t>(trials));

#ifdef _OPENMP
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (int i = 0; i < trials; ++i)
            records[static_cast<std::size_t>(i)] =
                run_trial(gf, code, ch, p_s, p_c, static_cast<std::uint64_t>(i));
    } else
#else
    (void)exec;
#endif
    {
        for (int i = 0; i < trials; ++i)
            records[static_cast<std::size_t>(i)] =
                run_trial(gf, code, ch, p_s, p_c, static_cast<std::uint64_t>(i));
    }

    CampaignStats stats;
    for (const TrialRecord& record : records)
        accumulate(stats, record);
    if (log)
        *log = std::move(records);
    return stats;
}

} // namespace bch
