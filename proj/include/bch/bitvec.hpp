#ifndef BCH_BITVEC_HPP
#define BCH_BITVEC_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bch/errors.hpp"

namespace bch {

/// Fixed-length bit vector. Bit i is the coefficient of X^i when the
/// vector is read as a polynomial over GF(2).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : size_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const
    {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool v)
    {
        check_index(i);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i)
    {
        check_index(i);
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    BitVec& operator^=(const BitVec& other)
    {
        if (other.size_ != size_)
            throw LengthMismatch("BitVec xor: operand lengths differ");
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= other.words_[w];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b)
    {
        a ^= b;
        return a;
    }

    bool operator==(const BitVec& other) const = default;

    bool all_zero() const
    {
        for (std::uint64_t w : words_)
            if (w != 0)
                return false;
        return true;
    }

    std::size_t popcount() const;

    /// Copy bits [start, start+len) into a fresh vector of length len.
    BitVec slice(std::size_t start, std::size_t len) const;

    /// Lowest-index-first list of set bit positions.
    std::vector<std::size_t> set_bits() const;

    /// Debug rendering, bit 0 first.
    std::string to_string() const;

private:
    void check_index(std::size_t i) const
    {
        if (i >= size_)
            throw PositionOutOfRange("BitVec index " + std::to_string(i) +
                                     " out of range for length " + std::to_string(size_));
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace bch

#endif
