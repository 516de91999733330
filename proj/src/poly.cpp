#include "bch/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "bch/errors.hpp"

namespace bch {

namespace {

int top_bit(std::uint64_t w)
{
    int bit = -1;
    while (w) {
        ++bit;
        w >>= 1;
    }
    return bit;
}

} // namespace

void BinaryPolynomial::trim()
{
    while (!words_.empty() && words_.back() == 0)
        words_.pop_back();
    if (words_.empty()) {
        degree_ = -1;
        return;
    }
    degree_ = static_cast<int>(words_.size() - 1) * 64 + top_bit(words_.back());
}

BinaryPolynomial BinaryPolynomial::x_pow(int e)
{
    if (e < 0)
        throw std::invalid_argument("x_pow: negative exponent");
    BinaryPolynomial p;
    p.words_.assign(static_cast<std::size_t>(e / 64) + 1, 0);
    p.words_.back() = std::uint64_t{1} << (e % 64);
    p.degree_ = e;
    return p;
}

BinaryPolynomial BinaryPolynomial::from_coeff_bits(std::uint64_t bits)
{
    BinaryPolynomial p;
    if (bits)
        p.words_.push_back(bits);
    p.trim();
    return p;
}

BinaryPolynomial BinaryPolynomial::from_hex(const std::string& hex)
{
    std::string s = hex;
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0)
        s = s.substr(2);
    if (s.empty())
        throw std::invalid_argument("from_hex: empty literal");
    BinaryPolynomial p;
    int nibble_index = 0;
    for (auto it = s.rbegin(); it != s.rend(); ++it, ++nibble_index) {
        const char c = *it;
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            v = c - 'A' + 10;
        else
            throw std::invalid_argument("from_hex: bad character");
        for (int b = 0; b < 4; ++b)
            if (v & (1 << b))
                p.set_coeff(nibble_index * 4 + b, true);
    }
    return p;
}

bool BinaryPolynomial::coeff(int i) const
{
    if (i < 0)
        return false;
    const std::size_t w = static_cast<std::size_t>(i) / 64;
    if (w >= words_.size())
        return false;
    return (words_[w] >> (i % 64)) & 1u;
}

void BinaryPolynomial::set_coeff(int i, bool v)
{
    if (i < 0)
        throw std::invalid_argument("set_coeff: negative index");
    const std::size_t w = static_cast<std::size_t>(i) / 64;
    if (w >= words_.size())
        words_.resize(w + 1, 0);
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v)
        words_[w] |= mask;
    else
        words_[w] &= ~mask;
    trim();
}

BinaryPolynomial BinaryPolynomial::operator+(const BinaryPolynomial& other) const
{
    BinaryPolynomial out;
    out.words_.resize(std::max(words_.size(), other.words_.size()), 0);
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
        std::uint64_t v = 0;
        if (w < words_.size())
            v ^= words_[w];
        if (w < other.words_.size())
            v ^= other.words_[w];
        out.words_[w] = v;
    }
    out.trim();
    return out;
}

BinaryPolynomial BinaryPolynomial::operator*(const BinaryPolynomial& other) const
{
    if (is_zero() || other.is_zero())
        return zero();
    BinaryPolynomial out;
    out.words_.assign(static_cast<std::size_t>(degree_ + other.degree_) / 64 + 1, 0);
    for (int i = 0; i <= degree_; ++i) {
        if (!coeff(i))
            continue;
        for (std::size_t w = 0; w < other.words_.size(); ++w) {
            const std::uint64_t word = other.words_[w];
            if (!word)
                continue;
            const std::size_t base = w * 64 + static_cast<std::size_t>(i);
            out.words_[base / 64] ^= word << (base % 64);
            if (base % 64 != 0 && base / 64 + 1 < out.words_.size())
                out.words_[base / 64 + 1] ^= word >> (64 - base % 64);
        }
    }
    out.trim();
    return out;
}

BinaryPolynomial BinaryPolynomial::operator%(const BinaryPolynomial& divisor) const
{
    if (divisor.is_zero())
        throw DivisionByZero("polynomial remainder by zero");
    BinaryPolynomial rem = *this;
    while (rem.degree_ >= divisor.degree_) {
        const int shift = rem.degree_ - divisor.degree_;
        for (int i = 0; i <= divisor.degree_; ++i)
            if (divisor.coeff(i))
                rem.words_[static_cast<std::size_t>(i + shift) / 64] ^=
                    std::uint64_t{1} << ((i + shift) % 64);
        rem.trim();
    }
    return rem;
}

bool BinaryPolynomial::divides(const BinaryPolynomial& dividend) const
{
    return (dividend % *this).is_zero();
}

std::string BinaryPolynomial::to_hex() const
{
    if (is_zero())
        return "0x0";
    std::string out;
    const int nibbles = degree_ / 4 + 1;
    for (int nib = nibbles - 1; nib >= 0; --nib) {
        int v = 0;
        for (int b = 0; b < 4; ++b)
            if (coeff(nib * 4 + b))
                v |= 1 << b;
        out.push_back("0123456789abcdef"[v]);
    }
    return "0x" + out;
}

std::uint64_t BinaryPolynomial::coeff_bits() const
{
    if (degree_ >= 64)
        throw std::length_error("coeff_bits: degree 64 or above");
    return words_.empty() ? 0 : words_[0];
}

} // namespace bch
