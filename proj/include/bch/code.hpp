#ifndef BCH_CODE_HPP
#define BCH_CODE_HPP

#include "bch/gf.hpp"
#include "bch/poly.hpp"

namespace bch {

/// A (possibly shortened) narrow-sense binary BCH code. n and k are derived
/// from the degree of the generator, never taken on faith from a caller.
struct CodeSpec {
    FieldSpec field;
    int t = 0;
    int n_full = 0; // 2^m - 1
    BinaryPolynomial generator;
    int redundancy = 0; // deg(generator) = n - k
    int shorten_by = 0; // s
    int n = 0;          // n_full - s
    int k = 0;          // n - redundancy
};

/// LCM of the minimal polynomials of alpha^1 .. alpha^2t, computed as the
/// product over distinct conjugacy classes (the factors are pairwise coprime).
BinaryPolynomial generator_polynomial(const FieldTables& gf, int t);

/// Shortened code with message length target_k. Verifies the CodeSpec
/// invariants, including that alpha^1..alpha^2t are roots of g.
CodeSpec make_code(const FieldTables& gf, int t, int target_k);

} // namespace bch

#endif
