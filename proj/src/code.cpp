#include "bch/code.hpp"

#include <set>

#include "bch/errors.hpp"

namespace bch {

BinaryPolynomial generator_polynomial(const FieldTables& gf, int t)
{
    if (t < 1 || 2 * t >= static_cast<int>(gf.order()))
        throw InvalidT("t must satisfy 1 <= t and 2t < 2^m - 1");

    // One minimal polynomial per distinct conjugacy class among exponents
    // 1..2t; the factors are pairwise coprime, so the product is the LCM.
    std::set<std::uint32_t> covered;
    BinaryPolynomial g = BinaryPolynomial::one();
    for (int e = 1; e <= 2 * t; ++e) {
        if (covered.count(static_cast<std::uint32_t>(e)))
            continue;
        std::uint32_t c = static_cast<std::uint32_t>(e);
        do {
            covered.insert(c);
            c = (2 * c) % gf.order();
        } while (c != static_cast<std::uint32_t>(e));
        g = g * minimal_polynomial(gf, static_cast<std::uint32_t>(e));
    }
    return g;
}

CodeSpec make_code(const FieldTables& gf, int t, int target_k)
{
    CodeSpec code;
    code.field = gf.spec();
    code.t = t;
    code.n_full = static_cast<int>(gf.order());
    code.generator = generator_polynomial(gf, t);
    code.redundancy = code.generator.degree();

    const int k_full = code.n_full - code.redundancy;
    if (target_k < 1)
        throw MessageTooLong("message length must be positive");
    if (target_k > k_full)
        throw MessageTooLong("message length " + std::to_string(target_k) +
                             " exceeds the code capacity " + std::to_string(k_full));
    code.shorten_by = k_full - target_k;
    code.n = code.n_full - code.shorten_by;
    code.k = target_k;

    // Construction checks: alpha^1..alpha^2t are roots of g, and g divides
    // X^(2^m - 1) + 1.
    for (int e = 1; e <= 2 * t; ++e)
        if (gf.eval_poly(code.generator, gf.alpha_pow(e)) != 0)
            throw Error("generator is missing the root alpha^" + std::to_string(e));
    BinaryPolynomial x_n_one = BinaryPolynomial::x_pow(code.n_full) + BinaryPolynomial::one();
    if (!code.generator.divides(x_n_one))
        throw Error("generator does not divide X^(2^m-1) + 1");
    if (code.redundancy > gf.m() * t)
        throw Error("generator degree exceeds the m*t bound");
    return code;
}

} // namespace bch
