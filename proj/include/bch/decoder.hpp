#ifndef BCH_DECODER_HPP
#define BCH_DECODER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bch/code.hpp"
#include "bch/encoder.hpp"
#include "bch/gf.hpp"

namespace bch {

struct ReceivedWord {
    BitVec bits; // length n, r(X) = c(X) + e(X)
};

/// S_1..S_2t; values[i-1] holds S_i. For binary BCH, S_2i = S_i^2.
struct Syndromes {
    std::vector<FieldElement> values;

    bool all_zero() const
    {
        for (FieldElement s : values)
            if (s != 0)
                return false;
        return true;
    }
};

/// sigma(X) = sigma[0] + sigma[1] X + ... ; sigma[0] is always 1.
struct ErrorLocator {
    std::vector<FieldElement> sigma;

    int degree() const
    {
        for (int i = static_cast<int>(sigma.size()) - 1; i >= 0; --i)
            if (sigma[i] != 0)
                return i;
        return -1;
    }
};

enum class DecodeStatus { NoError, Corrected, Failure };

struct DecodeResult {
    Codeword corrected;
    std::vector<int> error_positions; // sorted, empty unless Corrected
    DecodeStatus status = DecodeStatus::NoError;
    int num_errors = 0; // nu, valid when status == Corrected
};

struct SyndromeResult {
    Syndromes syndromes;
    std::uint64_t cycles = 0; // ceil(n / p)
};

/// S_i = r(alpha^i), i = 1..2t, computed with a parallelism factor of p
/// symbols per clock. The values are independent of p; only cycles change.
SyndromeResult compute_syndromes(const FieldTables& gf, const CodeSpec& code,
                                 const ReceivedWord& rw, int p);

/// Rebuild the full 2t syndrome sequence from the odd-indexed half using
/// S_2i = S_i^2 (applied recursively: S_2 = S_1^2, S_4 = S_2^2, ...).
Syndromes even_syndromes_from_odd(const FieldTables& gf,
                                  std::span<const FieldElement> odd);

/// Classic discrepancy-based Berlekamp-Massey with field inversion.
ErrorLocator berlekamp_massey(const FieldTables& gf, const CodeSpec& code,
                              const Syndromes& syn);

struct ChienResult {
    std::vector<int> positions; // sorted, all < n
    std::uint64_t cycles = 0;   // ceil(n / p)
};

/// Position j tests the candidate root alpha^(-j). Candidates for the
/// shortened positions n..n_full-1 are skipped entirely.
ChienResult chien_search(const FieldTables& gf, const CodeSpec& code,
                         const ErrorLocator& loc, int p);

/// Flips exactly the listed positions (FIFO-buffer addition model).
Codeword correct(const ReceivedWord& rw, std::span<const int> positions);

struct DecodeOutput {
    DecodeResult result;
    std::uint64_t cycles = 0;
};

/// Full pipeline: syndromes -> BM -> Chien -> correction. NoError
/// short-circuits after all-zero syndromes at ceil(n/p_s) cycles; otherwise
/// cycles = ceil(n/p_s) + 2t + ceil(n/p_c) (BM is charged a fixed 2t).
/// A post-correction syndrome recheck turns any residual into Failure; that
/// guard pass is excluded from the cycle count.
DecodeOutput decode(const FieldTables& gf, const CodeSpec& code,
                    const ReceivedWord& rw, int p_s, int p_c);

} // namespace bch

#endif
