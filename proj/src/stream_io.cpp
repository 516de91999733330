#include "bch/stream_io.hpp"

#include <string>

#include "bch/errors.hpp"

namespace bch {

std::vector<std::uint8_t> pack_bits(const std::vector<bool>& bits)
{
    std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i])
            out[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
    return out;
}

std::vector<bool> unpack_bits(std::span<const std::uint8_t> bytes)
{
    std::vector<bool> out(bytes.size() * 8, false);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (bytes[i / 8] >> (i % 8)) & 1u;
    return out;
}

std::vector<std::uint8_t> encode_stream(const CodeSpec& code,
                                        std::span<const std::uint8_t> payload,
                                        Execution exec)
{
    const std::uint64_t payload_bits = static_cast<std::uint64_t>(payload.size()) * 8;
    const std::uint64_t k = static_cast<std::uint64_t>(code.k);
    const std::uint64_t blocks = payload_bits == 0 ? 0 : (payload_bits + k - 1) / k;
    const std::uint32_t pad_bits =
        static_cast<std::uint32_t>(blocks * k - payload_bits);

    const std::vector<bool> in_bits = unpack_bits(payload);
    std::vector<Message> msgs;
    msgs.reserve(static_cast<std::size_t>(blocks));
    for (std::uint64_t b = 0; b < blocks; ++b) {
        Message msg = make_message(code);
        for (std::uint64_t i = 0; i < k; ++i) {
            const std::uint64_t src = b * k + i;
            if (src < payload_bits)
                msg.bits.set(static_cast<std::size_t>(i), in_bits[static_cast<std::size_t>(src)]);
        }
        msgs.push_back(std::move(msg));
    }

    const std::vector<Codeword> codewords = encode_blocks(code, msgs, exec);
    std::vector<bool> out_bits;
    out_bits.reserve(static_cast<std::size_t>(blocks) *
                     static_cast<std::size_t>(code.n));
    for (const Codeword& cw : codewords)
        for (std::size_t i = 0; i < cw.bits.size(); ++i)
            out_bits.push_back(cw.bits.get(i));

    std::vector<std::uint8_t> out = pack_bits(out_bits);
    for (int b = 0; b < 4; ++b)
        out.push_back(static_cast<std::uint8_t>((pad_bits >> (8 * b)) & 0xffu));
    return out;
}

DecodeStreamResult decode_stream(const FieldTables& gf, const CodeSpec& code,
                                 std::span<const std::uint8_t> file_bytes, int p_s,
                                 int p_c, Execution exec)
{
    if (file_bytes.size() < 4)
        throw TruncatedInput(0, "encoded stream shorter than its trailer");
    std::uint32_t pad_bits = 0;
    for (int b = 0; b < 4; ++b)
        pad_bits |= static_cast<std::uint32_t>(file_bytes[file_bytes.size() - 4 + b])
                    << (8 * b);

    const std::span<const std::uint8_t> body = file_bytes.first(file_bytes.size() - 4);
    const std::uint64_t body_bits = static_cast<std::uint64_t>(body.size()) * 8;
    const std::uint64_t n = static_cast<std::uint64_t>(code.n);
    const std::uint64_t blocks = body_bits / n;
    const std::uint64_t leftover = body_bits - blocks * n;
    if (leftover >= 8)
        throw TruncatedInput(blocks, "block " + std::to_string(blocks) +
                                         " is truncated mid-codeword");
    if (pad_bits >= static_cast<std::uint32_t>(code.k) && blocks > 0)
        throw ConfigError("pad trailer exceeds one message block");

    const std::vector<bool> bits = unpack_bits(body);
    std::vector<ReceivedWord> words;
    words.reserve(static_cast<std::size_t>(blocks));
    for (std::uint64_t b = 0; b < blocks; ++b) {
        ReceivedWord rw{BitVec(static_cast<std::size_t>(code.n))};
        for (std::uint64_t i = 0; i < n; ++i)
            rw.bits.set(static_cast<std::size_t>(i), bits[static_cast<std::size_t>(b * n + i)]);
        words.push_back(std::move(rw));
    }

    const std::vector<DecodeOutput> decoded = decode_blocks(gf, code, words, p_s, p_c, exec);

    DecodeStreamResult result;
    std::vector<bool> payload_bits;
    payload_bits.reserve(static_cast<std::size_t>(blocks) *
                         static_cast<std::size_t>(code.k));
    for (std::uint64_t b = 0; b < blocks; ++b) {
        const DecodeOutput& d = decoded[static_cast<std::size_t>(b)];
        BlockReport report;
        report.index = b;
        report.status = d.result.status;
        report.num_errors = d.result.num_errors;
        report.positions = d.result.error_positions;
        report.cycles = d.cycles;
        if (d.result.status == DecodeStatus::Failure)
            ++result.failures;
        result.reports.push_back(std::move(report));
        // Message bits sit above the parity in the systematic layout.
        for (int i = 0; i < code.k; ++i)
            payload_bits.push_back(
                d.result.corrected.bits.get(static_cast<std::size_t>(code.redundancy + i)));
    }

    if (pad_bits > payload_bits.size())
        throw ConfigError("pad trailer larger than the decoded payload");
    payload_bits.resize(payload_bits.size() - pad_bits);
    if (payload_bits.size() % 8 != 0)
        throw ConfigError("decoded payload is not byte aligned");
    result.payload = pack_bits(payload_bits);
    return result;
}

} // namespace bch
