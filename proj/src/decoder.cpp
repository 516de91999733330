#include "bch/decoder.hpp"

#include <algorithm>

#include "bch/errors.hpp"

namespace bch {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b)
{
    return (a + b - 1) / b;
}

} // namespace

SyndromeResult compute_syndromes(const FieldTables& gf, const CodeSpec& code,
                                 const ReceivedWord& rw, int p)
{
    if (p < 1)
        throw InvalidParallelism("syndrome parallelism must be >= 1");
    if (rw.bits.size() != static_cast<std::size_t>(code.n))
        throw LengthMismatch("received word length " + std::to_string(rw.bits.size()) +
                             ", expected n=" + std::to_string(code.n));

    SyndromeResult out;
    out.cycles = ceil_div(static_cast<std::uint64_t>(code.n),
                          static_cast<std::uint64_t>(p));
    out.syndromes.values.assign(static_cast<std::size_t>(2 * code.t), 0);

    // Horner over p-symbol groups, highest coefficients first: per clock the
    // accumulator advances by alpha^(i*len) and absorbs one group. The value
    // matches the serial evaluation for every p.
    for (int i = 1; i <= 2 * code.t; ++i) {
        FieldElement acc = 0;
        int pos = code.n;
        while (pos > 0) {
            const int len = std::min(p, pos);
            acc = gf.mul(acc, gf.alpha_pow(static_cast<std::int64_t>(i) * len));
            FieldElement group = 0;
            for (int u = 0; u < len; ++u)
                if (rw.bits.get(static_cast<std::size_t>(pos - len + u)))
                    group = gf.add(group, gf.alpha_pow(static_cast<std::int64_t>(i) * u));
            acc = gf.add(acc, group);
            pos -= len;
        }
        out.syndromes.values[static_cast<std::size_t>(i - 1)] = acc;
    }
    return out;
}

Syndromes even_syndromes_from_odd(const FieldTables& gf,
                                  std::span<const FieldElement> odd)
{
    const std::size_t t = odd.size();
    Syndromes out;
    out.values.assign(2 * t, 0);
    for (std::size_t i = 1; i <= 2 * t; ++i) {
        if (i % 2 == 1)
            out.values[i - 1] = odd[i / 2];
        else
            out.values[i - 1] = gf.sqr(out.values[i / 2 - 1]);
    }
    return out;
}

ErrorLocator berlekamp_massey(const FieldTables& gf, const CodeSpec& code,
                              const Syndromes& syn)
{
    if (syn.values.size() != static_cast<std::size_t>(2 * code.t))
        throw LengthMismatch("syndrome sequence must have length 2t");

    // LFSR synthesis: C(x) is the current connection polynomial, B(x) the
    // copy saved at the last length change, b its discrepancy.
    std::vector<FieldElement> c{1}, bpoly{1};
    int len = 0, gap = 1;
    FieldElement b = 1;

    for (int step = 0; step < 2 * code.t; ++step) {
        FieldElement d = syn.values[static_cast<std::size_t>(step)];
        for (int i = 1; i <= len && i < static_cast<int>(c.size()); ++i)
            d = gf.add(d, gf.mul(c[static_cast<std::size_t>(i)],
                                 syn.values[static_cast<std::size_t>(step - i)]));
        if (d == 0) {
            ++gap;
            continue;
        }
        const FieldElement scale = gf.mul(d, gf.inv(b));
        if (2 * len <= step) {
            std::vector<FieldElement> saved = c;
            if (c.size() < bpoly.size() + static_cast<std::size_t>(gap))
                c.resize(bpoly.size() + static_cast<std::size_t>(gap), 0);
            for (std::size_t i = 0; i < bpoly.size(); ++i)
                c[i + static_cast<std::size_t>(gap)] =
                    gf.add(c[i + static_cast<std::size_t>(gap)], gf.mul(scale, bpoly[i]));
            len = step + 1 - len;
            bpoly = std::move(saved);
            b = d;
            gap = 1;
        } else {
            if (c.size() < bpoly.size() + static_cast<std::size_t>(gap))
                c.resize(bpoly.size() + static_cast<std::size_t>(gap), 0);
            for (std::size_t i = 0; i < bpoly.size(); ++i)
                c[i + static_cast<std::size_t>(gap)] =
                    gf.add(c[i + static_cast<std::size_t>(gap)], gf.mul(scale, bpoly[i]));
            ++gap;
        }
    }

    while (c.size() > 1 && c.back() == 0)
        c.pop_back();
    return ErrorLocator{std::move(c)};
}

ChienResult chien_search(const FieldTables& gf, const CodeSpec& code,
                         const ErrorLocator& loc, int p)
{
    if (p < 1)
        throw InvalidParallelism("Chien parallelism must be >= 1");

    ChienResult out;
    out.cycles = ceil_div(static_cast<std::uint64_t>(code.n),
                          static_cast<std::uint64_t>(p));

    const int deg = loc.degree();
    if (deg <= 0)
        return out; // nonzero constant: no roots

    // Position j corresponds to the candidate root alpha^(-j); the s removed
    // positions of a shortened code are never tested.
    const std::int64_t order = gf.order();
    for (int base = 0; base < code.n; base += p) {
        const int lanes = std::min(p, code.n - base);
        for (int lane = 0; lane < lanes; ++lane) {
            const int pos = base + lane;
            const std::int64_t root_exp = (order - pos) % order;
            FieldElement acc = loc.sigma[0];
            for (int j = 1; j <= deg; ++j)
                acc = gf.add(acc, gf.mul(loc.sigma[static_cast<std::size_t>(j)],
                                         gf.alpha_pow(root_exp * j)));
            if (acc == 0)
                out.positions.push_back(pos);
        }
    }
    return out;
}

Codeword correct(const ReceivedWord& rw, std::span<const int> positions)
{
    Codeword out{rw.bits};
    for (int pos : positions) {
        if (pos < 0 || static_cast<std::size_t>(pos) >= rw.bits.size())
            throw PositionOutOfRange("correction position " + std::to_string(pos) +
                                     " outside the codeword");
        out.bits.flip(static_cast<std::size_t>(pos));
    }
    return out;
}

DecodeOutput decode(const FieldTables& gf, const CodeSpec& code, const ReceivedWord& rw,
                    int p_s, int p_c)
{
    DecodeOutput out;
    const SyndromeResult syn = compute_syndromes(gf, code, rw, p_s);
    if (syn.syndromes.all_zero()) {
        out.result.corrected = Codeword{rw.bits};
        out.result.status = DecodeStatus::NoError;
        out.cycles = syn.cycles;
        return out;
    }

    const ErrorLocator loc = berlekamp_massey(gf, code, syn.syndromes);
    const ChienResult chien = chien_search(gf, code, loc, p_c);
    out.cycles = syn.cycles + static_cast<std::uint64_t>(2 * code.t) + chien.cycles;

    const int nu = loc.degree();
    const bool degree_ok = nu >= 1 && nu <= code.t &&
                           static_cast<int>(chien.positions.size()) == nu;
    if (!degree_ok) {
        out.result.corrected = Codeword{rw.bits};
        out.result.status = DecodeStatus::Failure;
        return out;
    }

    Codeword candidate = correct(rw, chien.positions);
    // Miscorrection guard: one extra syndrome pass, excluded from the cycle
    // model.
    const SyndromeResult recheck =
        compute_syndromes(gf, code, ReceivedWord{candidate.bits}, 1);
    if (!recheck.syndromes.all_zero()) {
        out.result.corrected = Codeword{rw.bits};
        out.result.status = DecodeStatus::Failure;
        return out;
    }

    out.result.corrected = std::move(candidate);
    out.result.error_positions = chien.positions;
    out.result.status = DecodeStatus::Corrected;
    out.result.num_errors = nu;
    return out;
}

} // namespace bch
