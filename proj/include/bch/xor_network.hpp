#ifndef BCH_XOR_NETWORK_HPP
#define BCH_XOR_NETWORK_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bch/code.hpp"
#include "bch/gf.hpp"

namespace bch {

/// Either a primary input b_i or a reference to a shared expression c_k.
/// Inputs order before shared references; this ordering is the tie-break key
/// for pair mining.
struct XorTerm {
    enum class Kind : std::uint8_t { Input = 0, Shared = 1 };
    Kind kind = Kind::Input;
    int index = 0;

    auto operator<=>(const XorTerm&) const = default;
};

inline XorTerm input_term(int i) { return XorTerm{XorTerm::Kind::Input, i}; }
inline XorTerm shared_term(int k) { return XorTerm{XorTerm::Kind::Shared, k}; }

/// Sorted, duplicate-free term set; XOR of its members.
using TermSet = std::vector<XorTerm>;

struct XorRow {
    std::string label;
    TermSet terms;
};

/// A bank of XOR equations: ordered shared definitions c_0, c_1, ... (each
/// referencing only inputs and earlier definitions) followed by labeled
/// output rows. Every row is a linear function of the primary inputs.
struct XorNetwork {
    int num_inputs = 0;
    std::string label;
    int constant_exponent = -1; // alpha exponent when built from a multiplier
    int operand_tag = -1;       // sigma_j index for Chien bank members
    std::vector<TermSet> shared_defs;
    std::vector<XorRow> outputs;

    /// Sum over shared defs and outputs of (|terms| - 1); empty and singleton
    /// rows cost nothing.
    int gate_count() const;
};

/// One output row per result bit, terms read off the Mastrovito matrix rows.
XorNetwork build_multiplier_network(const FieldTables& gf,
                                    std::uint32_t constant_exponent,
                                    std::string label);

/// p x t networks for the parallel Chien bank: rows i = 1..p, coefficients
/// j = 1..t, constant alpha^(i*j) applied to operand sigma_j. Networks with
/// the same operand_tag j form one sharing group.
std::vector<XorNetwork> build_chien_bank(const FieldTables& gf, const CodeSpec& code,
                                         int p);

/// Four-stage sharing pass over a single network: repeatedly extract the pair
/// of terms co-occurring in the most rows (ties to the lexicographically
/// smallest pair), define a new c_k for it and rewrite, until no pair
/// co-occurs more than once. Semantics are preserved exactly.
XorNetwork cse_intra(const XorNetwork& net);

/// Networks that share one operand, rewritten against a single common
/// definition list. Gate count charges the shared definitions once.
struct XorGroup {
    int num_inputs = 0;
    int operand_tag = -1;
    std::vector<TermSet> shared_defs;
    std::vector<XorNetwork> members; // members carry no private defs

    int gate_count() const;
};

/// Same mining as cse_intra but over the union of all member rows.
XorGroup cse_group(const std::vector<XorNetwork>& nets);

/// Topological evaluation: shared defs in order, then one bit per output row.
std::vector<bool> evaluate_network(const XorNetwork& net, std::uint32_t input_bits);
std::vector<std::vector<bool>> evaluate_group(const XorGroup& group,
                                              std::uint32_t input_bits);

/// Mod-2 expansion of every output row down to primary inputs; mask bit i
/// corresponds to b_i.
std::vector<std::uint32_t> expand_to_input_masks(const XorNetwork& net);

struct GateReportRow {
    std::string architecture;
    int xor_gates = 0;
    std::optional<int> improvement_pct; // vs the parallel baseline row
};

struct GateReport {
    std::vector<GateReportRow> rows;

    int gates(const std::string& architecture) const;
};

/// Serial (p=1, multipliers plus adder tree), parallel-p baseline, parallel
/// with per-multiplier sharing, parallel with group sharing.
GateReport gate_report(const FieldTables& gf, const CodeSpec& code, int p);

/// Text netlist: one line per definition and output, e.g. "c7 = b2 ^ b3".
std::string render_netlist(const XorNetwork& net);
std::string render_netlist(const XorGroup& group);

} // namespace bch

#endif
