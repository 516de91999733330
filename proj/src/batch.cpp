#include "bch/batch.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bch {

std::vector<Codeword> encode_blocks(const CodeSpec& code,
                                    const std::vector<Message>& msgs, Execution exec)
{
    std::vector<Codeword> out(msgs.size());
#ifdef _OPENMP
    if (exec == Execution::Parallel) {
        const std::int64_t count = static_cast<std::int64_t>(msgs.size());
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < count; ++i)
            out[static_cast<std::size_t>(i)] =
                encode(code, msgs[static_cast<std::size_t>(i)]);
        return out;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < msgs.size(); ++i)
        out[i] = encode(code, msgs[i]);
    return out;
}

std::vector<DecodeOutput> decode_blocks(const FieldTables& gf, const CodeSpec& code,
                                        const std::vector<ReceivedWord>& words, int p_s,
                                        int p_c, Execution exec)
{
    std::vector<DecodeOutput> out(words.size());
#ifdef _OPENMP
    if (exec == Execution::Parallel) {
        const std::int64_t count = static_cast<std::int64_t>(words.size());
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < count; ++i)
            out[static_cast<std::size_t>(i)] =
                decode(gf, code, words[static_cast<std::size_t>(i)], p_s, p_c);
        return out;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < words.size(); ++i)
        out[i] = decode(gf, code, words[i], p_s, p_c);
    return out;
}

} // namespace bch
