#include "bch/bitvec.hpp"

#include <bit>

namespace bch {

std::size_t BitVec::popcount() const
{
    std::size_t count = 0;
    for (std::uint64_t w : words_)
        count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

BitVec BitVec::slice(std::size_t start, std::size_t len) const
{
    if (start + len > size_)
        throw PositionOutOfRange("BitVec slice out of range");
    BitVec out(len);
    for (std::size_t i = 0; i < len; ++i)
        out.set(i, get(start + i));
    return out;
}

std::vector<std::size_t> BitVec::set_bits() const
{
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            const int bit = std::countr_zero(word);
            out.push_back(w * 64 + static_cast<std::size_t>(bit));
            word &= word - 1;
        }
    }
    return out;
}

std::string BitVec::to_string() const
{
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i)
        s.push_back(get(i) ? '1' : '0');
    return s;
}

} // namespace bch
