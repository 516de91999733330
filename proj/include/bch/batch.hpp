#ifndef BCH_BATCH_HPP
#define BCH_BATCH_HPP

#include <vector>

#include "bch/channel.hpp"
#include "bch/decoder.hpp"
#include "bch/encoder.hpp"

namespace bch {

/// Block-level kernels. Blocks are independent, so the Parallel flavor runs
/// the same loop under OpenMP; output order and content match the Serial
/// flavor exactly.
std::vector<Codeword> encode_blocks(const CodeSpec& code,
                                    const std::vector<Message>& msgs, Execution exec);

std::vector<DecodeOutput> decode_blocks(const FieldTables& gf, const CodeSpec& code,
                                        const std::vector<ReceivedWord>& words, int p_s,
                                        int p_c, Execution exec);

} // namespace bch

#endif
