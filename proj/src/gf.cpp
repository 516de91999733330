#include "bch/gf.hpp"

#include <set>

namespace bch {

FieldTables FieldTables::build(const FieldSpec& spec)
{
    if (spec.m < 3 || spec.m > 16)
        throw BadDegree("field degree m must be in [3, 16]");
    const std::uint32_t top = 1u << spec.m;
    if ((spec.primitive_poly & top) == 0 || spec.primitive_poly >= (top << 1))
        throw BadDegree("primitive polynomial must have degree exactly m");
    if ((spec.primitive_poly & 1u) == 0)
        throw NonPrimitivePolynomial("primitive polynomial needs a nonzero constant term");

    FieldTables gf;
    gf.spec_ = spec;
    gf.order_ = top - 1;
    gf.antilog_.assign(2 * gf.order_, 0);
    gf.log_.assign(top, 0);

    // Walk alpha^0, alpha^1, ... by shift-and-reduce. Primitivity holds iff
    // the walk visits every nonzero element exactly once before closing.
    const std::uint32_t reduce = spec.primitive_poly & (top - 1);
    std::uint32_t value = 1;
    for (std::uint32_t e = 0; e < gf.order_; ++e) {
        if (gf.log_[value] != 0 || value == 1) {
            if (e != 0 && value == 1)
                throw NonPrimitivePolynomial("polynomial has period " + std::to_string(e) +
                                             " < 2^m - 1");
            if (e != 0 && gf.log_[value] != 0)
                throw NonPrimitivePolynomial("repeated element at exponent " +
                                             std::to_string(e));
        }
        gf.antilog_[e] = static_cast<FieldElement>(value);
        gf.log_[value] = e;
        value <<= 1;
        if (value & top)
            value = (value ^ top) ^ reduce;
    }
    if (value != 1)
        throw NonPrimitivePolynomial("polynomial is not irreducible over GF(2)");

    // Doubled antilog so products can index log(a) + log(b) directly.
    for (std::uint32_t e = 0; e < gf.order_; ++e)
        gf.antilog_[gf.order_ + e] = gf.antilog_[e];
    return gf;
}

FieldElement FieldTables::pow(FieldElement a, std::int64_t e) const
{
    check_element(a);
    if (a == 0) {
        if (e < 0)
            throw DivisionByZero("negative power of the zero element");
        return e == 0 ? FieldElement{1} : FieldElement{0};
    }
    const std::int64_t la = static_cast<std::int64_t>(log_[a]);
    std::int64_t r = (la * (e % order_)) % order_;
    if (r < 0)
        r += order_;
    return antilog_[static_cast<std::size_t>(r)];
}

FieldElement FieldTables::eval_poly(const BinaryPolynomial& poly, FieldElement x) const
{
    FieldElement acc = 0;
    for (int i = poly.degree(); i >= 0; --i) {
        acc = mul(acc, x);
        if (poly.coeff(i))
            acc = add(acc, 1);
    }
    return acc;
}

BinaryPolynomial minimal_polynomial(const FieldTables& gf, std::uint32_t exponent)
{
    if (exponent > gf.order() - 1)
        throw PositionOutOfRange("minimal_polynomial: exponent out of range");

    // Conjugacy class {e, 2e, 4e, ...} mod (2^m - 1).
    std::set<std::uint32_t> conjugates;
    std::uint32_t e = exponent;
    do {
        conjugates.insert(e);
        e = (2 * e) % gf.order();
    } while (e != exponent);

    // Product of (X + alpha^c) computed over GF(2^m); the result has all
    // coefficients in {0, 1} by construction.
    std::vector<FieldElement> coeffs{1}; // constant polynomial 1
    for (std::uint32_t c : conjugates) {
        const FieldElement root = gf.alpha_pow(c);
        std::vector<FieldElement> next(coeffs.size() + 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = gf.add(next[i + 1], coeffs[i]);          // X * coeffs
            next[i] = gf.add(next[i], gf.mul(root, coeffs[i]));    // root * coeffs
        }
        coeffs = std::move(next);
    }

    BinaryPolynomial out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0 && coeffs[i] != 1)
            throw Error("minimal polynomial has a coefficient outside GF(2)");
        if (coeffs[i] == 1)
            out.set_coeff(static_cast<int>(i), true);
    }
    return out;
}

FieldElement MastrovitoMatrix::apply(FieldElement b) const
{
    FieldElement out = 0;
    for (int r = 0; r < m; ++r) {
        const unsigned v = static_cast<unsigned>(rows[static_cast<std::size_t>(r)] & b);
        if (__builtin_parity(v))
            out |= static_cast<FieldElement>(1u << r);
    }
    return out;
}

MastrovitoMatrix mastrovito_matrix(const FieldTables& gf, std::uint32_t constant_exponent)
{
    if (constant_exponent > gf.order() - 1)
        throw PositionOutOfRange("mastrovito_matrix: exponent out of range");
    MastrovitoMatrix mat;
    mat.m = gf.m();
    mat.constant_exponent = constant_exponent;
    mat.rows.assign(static_cast<std::size_t>(gf.m()), 0);
    for (int j = 0; j < gf.m(); ++j) {
        const FieldElement col = gf.alpha_pow(static_cast<std::int64_t>(constant_exponent) + j);
        for (int r = 0; r < gf.m(); ++r)
            if ((col >> r) & 1u)
                mat.rows[static_cast<std::size_t>(r)] |= static_cast<std::uint16_t>(1u << j);
    }
    return mat;
}

} // namespace bch
