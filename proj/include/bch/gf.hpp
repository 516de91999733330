#ifndef BCH_GF_HPP
#define BCH_GF_HPP

#include <cstdint>
#include <vector>

#include "bch/errors.hpp"
#include "bch/poly.hpp"

namespace bch {

/// GF(2^m) definition. primitive_poly holds the coefficients of the defining
/// polynomial, bit i = coefficient of x^i (so x^9+x^4+1 is 0x211).
struct FieldSpec {
    int m = 9;
    std::uint32_t primitive_poly = 0x211;
};

/// Field elements are m-bit values in the polynomial basis: bit i is the
/// coefficient of alpha^i.
using FieldElement = std::uint16_t;

/// Log/antilog tables for GF(2^m), immutable once built and safe to share
/// across threads. All arithmetic goes through these tables.
class FieldTables {
public:
    /// Builds the tables by repeated multiplication by alpha, verifying along
    /// the way that the polynomial is primitive (the powers of alpha must
    /// enumerate all 2^m - 1 nonzero elements before returning to 1).
    static FieldTables build(const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    int m() const { return spec_.m; }
    std::uint32_t order() const { return order_; } // 2^m - 1

    /// alpha^e for any integer exponent (reduced mod 2^m - 1).
    FieldElement alpha_pow(std::int64_t e) const
    {
        std::int64_t r = e % order_;
        if (r < 0)
            r += order_;
        return antilog_[static_cast<std::size_t>(r)];
    }

    /// Exponent of a nonzero element, in [0, 2^m - 2].
    std::uint32_t log(FieldElement a) const
    {
        check_element(a);
        if (a == 0)
            throw DivisionByZero("log of the zero element");
        return log_[a];
    }

    FieldElement add(FieldElement a, FieldElement b) const
    {
        check_element(a);
        check_element(b);
        return a ^ b;
    }

    FieldElement mul(FieldElement a, FieldElement b) const
    {
        check_element(a);
        check_element(b);
        if (a == 0 || b == 0)
            return 0;
        return antilog_[log_[a] + log_[b]]; // antilog table is doubled
    }

    FieldElement inv(FieldElement a) const
    {
        check_element(a);
        if (a == 0)
            throw DivisionByZero("inverse of the zero element");
        return antilog_[order_ - log_[a]];
    }

    FieldElement sqr(FieldElement a) const { return mul(a, a); }

    /// a^e with negative exponents routed through the inverse.
    FieldElement pow(FieldElement a, std::int64_t e) const;

    /// Horner evaluation of a GF(2) polynomial at a field element.
    FieldElement eval_poly(const BinaryPolynomial& poly, FieldElement x) const;

private:
    FieldTables() = default;

    void check_element(FieldElement a) const
    {
        if (a >= (1u << spec_.m))
            throw FieldMismatch("element does not fit in GF(2^" +
                                std::to_string(spec_.m) + ")");
    }

    FieldSpec spec_;
    std::uint32_t order_ = 0;
    std::vector<FieldElement> antilog_; // 2*order entries, antilog_[e] = alpha^e
    std::vector<std::uint32_t> log_;    // 2^m entries, log_[0] unused
};

/// Monic GF(2) polynomial of least degree with alpha^exponent as a root:
/// the product of (X - alpha^(exponent*2^j)) over the conjugacy class.
BinaryPolynomial minimal_polynomial(const FieldTables& gf, std::uint32_t exponent);

/// Constant-multiplier matrix: (rows · b) over GF(2) equals the bit vector of
/// alpha^constant_exponent * B for any operand B with bits b.
struct MastrovitoMatrix {
    int m = 0;
    std::uint32_t constant_exponent = 0;
    std::vector<std::uint16_t> rows; // rows[r] bit j = matrix entry (r, j)

    FieldElement apply(FieldElement b) const;
};

/// Column j of the result is the bit vector of alpha^(constant_exponent + j).
MastrovitoMatrix mastrovito_matrix(const FieldTables& gf, std::uint32_t constant_exponent);

} // namespace bch

#endif
