#ifndef BCH_ENCODER_HPP
#define BCH_ENCODER_HPP

#include <cstdint>

#include "bch/bitvec.hpp"
#include "bch/code.hpp"

namespace bch {

struct Message {
    BitVec bits; // length k, bit i = coefficient of X^i in v(X)
};

/// Systematic layout: parity in positions 0..(n-k-1), message in (n-k)..(n-1).
struct Codeword {
    BitVec bits; // length n
};

Message make_message(const CodeSpec& code);
Codeword make_codeword(const CodeSpec& code);

/// Block encoder: parity = X^(n-k) v(X) mod g(X).
Codeword encode(const CodeSpec& code, const Message& msg);

/// Shift-register snapshot: after the k message clocks the register holds
/// r(X) = X^(n-k) v(X) mod g(X).
struct LfsrState {
    BitVec reg;                        // n-k bits
    std::uint64_t cycles_consumed = 0; // one clock per message bit
};

struct LfsrEncodeResult {
    Codeword codeword;
    LfsrState state;
};

/// Bit-serial shift-register model of the same encoder, kept for cycle
/// accounting. Produces bit-identical codewords to encode(); the shortened
/// leading zeros are skipped, not clocked.
LfsrEncodeResult lfsr_encode(const CodeSpec& code, const Message& msg);

} // namespace bch

#endif
