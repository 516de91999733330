#ifndef BCH_POLY_HPP
#define BCH_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bch {

/// Polynomial over GF(2) in canonical form: the coefficient vector never has
/// stray high zero words beyond the tracked degree. The zero polynomial has
/// degree() == -1.
class BinaryPolynomial {
public:
    BinaryPolynomial() = default;

    static BinaryPolynomial zero() { return BinaryPolynomial(); }
    static BinaryPolynomial one() { return from_coeff_bits(1); }
    static BinaryPolynomial x_pow(int e);
    /// bit i of `bits` is the coefficient of X^i.
    static BinaryPolynomial from_coeff_bits(std::uint64_t bits);
    static BinaryPolynomial from_hex(const std::string& hex);

    int degree() const { return degree_; }
    bool is_zero() const { return degree_ < 0; }
    bool coeff(int i) const;
    void set_coeff(int i, bool v);

    BinaryPolynomial operator+(const BinaryPolynomial& other) const;
    BinaryPolynomial operator*(const BinaryPolynomial& other) const;
    /// Remainder of this modulo divisor.
    BinaryPolynomial operator%(const BinaryPolynomial& divisor) const;
    bool divides(const BinaryPolynomial& dividend) const;

    bool operator==(const BinaryPolynomial& other) const
    {
        return degree_ == other.degree_ && words_ == other.words_;
    }

    /// Coefficient bits as a hex literal, e.g. x^9+x^4+1 -> "0x211".
    std::string to_hex() const;

    /// Low 64 coefficient bits; degree must be < 64.
    std::uint64_t coeff_bits() const;

private:
    void trim();

    int degree_ = -1;
    std::vector<std::uint64_t> words_;
};

} // namespace bch

#endif
