#include "bch/encoder.hpp"

#include "bch/errors.hpp"

namespace bch {

Message make_message(const CodeSpec& code)
{
    return Message{BitVec(static_cast<std::size_t>(code.k))};
}

Codeword make_codeword(const CodeSpec& code)
{
    return Codeword{BitVec(static_cast<std::size_t>(code.n))};
}

Codeword encode(const CodeSpec& code, const Message& msg)
{
    if (msg.bits.size() != static_cast<std::size_t>(code.k))
        throw LengthMismatch("message length " + std::to_string(msg.bits.size()) +
                             ", expected k=" + std::to_string(code.k));

    // r(X) = X^(n-k) v(X) mod g(X). Shortening prepends implicit zeros to
    // v(X); they contribute nothing to the remainder.
    BinaryPolynomial shifted;
    for (std::size_t i = 0; i < msg.bits.size(); ++i)
        if (msg.bits.get(i))
            shifted.set_coeff(static_cast<int>(i) + code.redundancy, true);
    const BinaryPolynomial parity = shifted % code.generator;

    Codeword cw = make_codeword(code);
    for (int i = 0; i < code.redundancy; ++i)
        cw.bits.set(static_cast<std::size_t>(i), parity.coeff(i));
    for (std::size_t i = 0; i < msg.bits.size(); ++i)
        cw.bits.set(static_cast<std::size_t>(code.redundancy) + i, msg.bits.get(i));
    return cw;
}

LfsrEncodeResult lfsr_encode(const CodeSpec& code, const Message& msg)
{
    if (msg.bits.size() != static_cast<std::size_t>(code.k))
        throw LengthMismatch("message length " + std::to_string(msg.bits.size()) +
                             ", expected k=" + std::to_string(code.k));

    // Register of length n-k clocked once per message bit, highest
    // coefficient first. The shortened leading zeros would leave an all-zero
    // register untouched, so they are skipped rather than clocked.
    const int r = code.redundancy;
    BitVec reg(static_cast<std::size_t>(r));
    std::uint64_t cycles = 0;
    for (int i = code.k - 1; i >= 0; --i) {
        const bool feedback = msg.bits.get(static_cast<std::size_t>(i)) ^
                              reg.get(static_cast<std::size_t>(r - 1));
        for (int b = r - 1; b > 0; --b)
            reg.set(static_cast<std::size_t>(b), reg.get(static_cast<std::size_t>(b - 1)));
        reg.set(0, false);
        if (feedback)
            for (int b = 0; b < r; ++b)
                if (code.generator.coeff(b))
                    reg.flip(static_cast<std::size_t>(b));
        ++cycles;
    }

    Codeword cw = make_codeword(code);
    for (int i = 0; i < r; ++i)
        cw.bits.set(static_cast<std::size_t>(i), reg.get(static_cast<std::size_t>(i)));
    for (std::size_t i = 0; i < msg.bits.size(); ++i)
        cw.bits.set(static_cast<std::size_t>(r) + i, msg.bits.get(i));
    return LfsrEncodeResult{std::move(cw), LfsrState{std::move(reg), cycles}};
}

} // namespace bch
