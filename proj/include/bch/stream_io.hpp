#ifndef BCH_STREAM_IO_HPP
#define BCH_STREAM_IO_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bch/batch.hpp"
#include "bch/code.hpp"
#include "bch/decoder.hpp"

namespace bch {

/// Encoded stream layout: codewords packed back to back as one continuous
/// bit stream (coefficient order, 8 coefficients per byte, low bit first),
/// final partial byte zero-padded high, then a 4-byte little-endian trailer
/// holding the number of zero pad bits appended to the last message block.
std::vector<std::uint8_t> encode_stream(const CodeSpec& code,
                                        std::span<const std::uint8_t> payload,
                                        Execution exec = Execution::Parallel);

struct BlockReport {
    std::uint64_t index = 0;
    DecodeStatus status = DecodeStatus::NoError;
    int num_errors = 0;
    std::vector<int> positions;
    std::uint64_t cycles = 0;
};

struct DecodeStreamResult {
    std::vector<std::uint8_t> payload;
    std::vector<BlockReport> reports;
    std::uint64_t failures = 0;
};

/// Inverse of encode_stream. Throws TruncatedInput (carrying the offending
/// block index) when the bit stream ends inside a codeword.
DecodeStreamResult decode_stream(const FieldTables& gf, const CodeSpec& code,
                                 std::span<const std::uint8_t> file_bytes, int p_s,
                                 int p_c, Execution exec = Execution::Parallel);

/// Bit packing helpers shared by the stream codec (low bit first per byte).
std::vector<std::uint8_t> pack_bits(const std::vector<bool>& bits);
std::vector<bool> unpack_bits(std::span<const std::uint8_t> bytes);

} // namespace bch

#endif
