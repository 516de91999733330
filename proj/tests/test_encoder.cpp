#include <doctest.h>

#include "bch/encoder.hpp"
#include "test_helpers.hpp"

using namespace bch;

namespace {

CodeSpec small_code()
{
    const FieldTables gf = FieldTables::build(FieldSpec{4, 0x13});
    return make_code(gf, 2, 7); // BCH(15,7,2)
}

CodeSpec flash_code(int t)
{
    const FieldTables gf = FieldTables::build(FieldSpec{9, 0x211});
    return make_code(gf, t, 256);
}

BinaryPolynomial to_poly(const BitVec& bits)
{
    BinaryPolynomial p;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits.get(i))
            p.set_coeff(static_cast<int>(i), true);
    return p;
}

} // namespace

TEST_CASE("zero message encodes to the zero codeword")
{
    const CodeSpec code = small_code();
    const Message zero = make_message(code);
    CHECK(encode(code, zero).bits.all_zero());
    CHECK(lfsr_encode(code, zero).codeword.bits.all_zero());
}

TEST_CASE("known parity for v(X)=1 over BCH(15,7,2)")
{
    const CodeSpec code = small_code();
    Message msg = make_message(code);
    msg.bits.set(0, true);
    const Codeword cw = encode(code, msg);

    // X^8 mod g = x^7+x^6+x^4+1
    const BitVec bits = cw.bits;
    for (int i = 0; i < 8; ++i)
        CHECK(bits.get(static_cast<std::size_t>(i)) == (i == 0 || i == 4 || i == 6 || i == 7));
    CHECK(bits.get(8));
    for (int i = 9; i < 15; ++i)
        CHECK(!bits.get(static_cast<std::size_t>(i)));
}

TEST_CASE("codewords are multiples of g and systematic")
{
    for (const CodeSpec& code : {small_code(), flash_code(2)}) {
        SplitMix64 rng(31);
        for (int trial = 0; trial < 500; ++trial) {
            const Message msg = test::random_message(code, rng);
            const Codeword cw = encode(code, msg);
            CHECK((to_poly(cw.bits) % code.generator).is_zero());
            for (int i = 0; i < code.k; ++i)
                CHECK(cw.bits.get(static_cast<std::size_t>(code.redundancy + i)) ==
                      msg.bits.get(static_cast<std::size_t>(i)));
        }
    }
}

TEST_CASE("encode is linear")
{
    const CodeSpec code = flash_code(2);
    SplitMix64 rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        const Message a = test::random_message(code, rng);
        const Message b = test::random_message(code, rng);
        const Message sum{a.bits ^ b.bits};
        CHECK(encode(code, sum).bits == (encode(code, a).bits ^ encode(code, b).bits));
    }
}

TEST_CASE("the shift-register model matches the block encoder")
{
    for (const CodeSpec& code : {small_code(), flash_code(2), flash_code(3)}) {
        SplitMix64 rng(33);
        for (int trial = 0; trial < 100; ++trial) {
            const Message msg = test::random_message(code, rng);
            const LfsrEncodeResult lfsr = lfsr_encode(code, msg);
            CHECK(lfsr.codeword.bits == encode(code, msg).bits);
            CHECK(lfsr.state.cycles_consumed == static_cast<std::uint64_t>(code.k));
            // the final register is exactly the parity remainder
            CHECK(lfsr.state.reg ==
                  lfsr.codeword.bits.slice(0, static_cast<std::size_t>(code.redundancy)));
        }
    }
    const CodeSpec flash = flash_code(2);
    CHECK(lfsr_encode(flash, make_message(flash)).state.cycles_consumed == 256);
    CHECK(lfsr_encode(flash, make_message(flash)).state.reg.all_zero());
}

TEST_CASE("length mismatch is rejected")
{
    const CodeSpec code = small_code();
    CHECK_THROWS_AS(encode(code, Message{BitVec(3)}), LengthMismatch);
    CHECK_THROWS_AS(lfsr_encode(code, Message{BitVec(8)}), LengthMismatch);
}
