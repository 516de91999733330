#include "bch/xor_network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "bch/errors.hpp"

namespace bch {

namespace {

int row_gates(const TermSet& terms)
{
    return terms.size() <= 1 ? 0 : static_cast<int>(terms.size()) - 1;
}

void sort_unique(TermSet& terms)
{
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
}

using TermPair = std::pair<XorTerm, XorTerm>;

/// Count, over every row, how often each unordered term pair co-occurs.
std::map<TermPair, int> pair_frequencies(const std::vector<TermSet*>& rows)
{
    std::map<TermPair, int> freq;
    for (const TermSet* row : rows) {
        const std::size_t sz = row->size();
        for (std::size_t a = 0; a + 1 < sz; ++a)
            for (std::size_t b = a + 1; b < sz; ++b)
                ++freq[{(*row)[a], (*row)[b]}];
    }
    return freq;
}

/// The shared mining loop behind cse_intra and cse_group. Rows are rewritten
/// in place; extracted pair definitions are appended to defs. Terminates when
/// no pair co-occurs in more than one row.
void mine_pairs(std::vector<TermSet*>& rows, std::vector<TermSet>& defs)
{
    for (;;) {
        const auto freq = pair_frequencies(rows);
        // std::map iteration order gives the lexicographically smallest pair
        // among ties (inputs order before shared refs).
        const TermPair* best = nullptr;
        int best_count = 1;
        for (const auto& [pair, count] : freq) {
            if (count > best_count) {
                best_count = count;
                best = &pair;
            }
        }
        if (!best)
            return;

        const XorTerm a = best->first;
        const XorTerm b = best->second;
        const int k = static_cast<int>(defs.size());
        defs.push_back(TermSet{a, b});
        for (TermSet* row : rows) {
            const bool has_a = std::binary_search(row->begin(), row->end(), a);
            const bool has_b = std::binary_search(row->begin(), row->end(), b);
            if (!has_a || !has_b)
                continue;
            row->erase(std::remove_if(row->begin(), row->end(),
                                      [&](const XorTerm& t) { return t == a || t == b; }),
                       row->end());
            row->push_back(shared_term(k));
            sort_unique(*row);
        }
    }
}

/// Mod-2 input mask of every shared definition, in definition order.
std::vector<std::uint32_t> def_masks(const std::vector<TermSet>& defs)
{
    std::vector<std::uint32_t> masks(defs.size(), 0);
    for (std::size_t k = 0; k < defs.size(); ++k) {
        std::uint32_t mask = 0;
        for (const XorTerm& t : defs[k]) {
            if (t.kind == XorTerm::Kind::Input)
                mask ^= 1u << t.index;
            else
                mask ^= masks[static_cast<std::size_t>(t.index)];
        }
        masks[k] = mask;
    }
    return masks;
}

TermSet mask_to_terms(std::uint32_t mask)
{
    TermSet out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u)
            out.push_back(input_term(i));
    return out;
}

XorNetwork normalized(const XorNetwork& net)
{
    XorNetwork flat = net;
    const auto masks = def_masks(net.shared_defs);
    for (XorRow& row : flat.outputs) {
        std::uint32_t mask = 0;
        for (const XorTerm& t : row.terms) {
            if (t.kind == XorTerm::Kind::Input)
                mask ^= 1u << t.index;
            else
                mask ^= masks[static_cast<std::size_t>(t.index)];
        }
        row.terms = mask_to_terms(mask);
    }
    flat.shared_defs.clear();
    return flat;
}

} // namespace

int XorNetwork::gate_count() const
{
    int gates = 0;
    for (const TermSet& def : shared_defs)
        gates += row_gates(def);
    for (const XorRow& row : outputs)
        gates += row_gates(row.terms);
    return gates;
}

int XorGroup::gate_count() const
{
    int gates = 0;
    for (const TermSet& def : shared_defs)
        gates += row_gates(def);
    for (const XorNetwork& member : members)
        for (const XorRow& row : member.outputs)
            gates += row_gates(row.terms);
    return gates;
}

XorNetwork build_multiplier_network(const FieldTables& gf,
                                    std::uint32_t constant_exponent, std::string label)
{
    const MastrovitoMatrix mat = mastrovito_matrix(gf, constant_exponent);
    XorNetwork net;
    net.num_inputs = gf.m();
    net.label = std::move(label);
    net.constant_exponent = static_cast<int>(constant_exponent);
    net.outputs.reserve(static_cast<std::size_t>(gf.m()));
    for (int r = 0; r < gf.m(); ++r) {
        XorRow row;
        row.label = "out[" + std::to_string(r) + "]";
        row.terms = mask_to_terms(mat.rows[static_cast<std::size_t>(r)]);
        net.outputs.push_back(std::move(row));
    }
    return net;
}

std::vector<XorNetwork> build_chien_bank(const FieldTables& gf, const CodeSpec& code,
                                         int p)
{
    if (p < 1)
        throw InvalidParallelism("Chien bank parallelism must be >= 1");
    std::vector<XorNetwork> bank;
    bank.reserve(static_cast<std::size_t>(p) * static_cast<std::size_t>(code.t));
    for (int j = 1; j <= code.t; ++j) {
        for (int i = 1; i <= p; ++i) {
            const std::uint32_t exp =
                static_cast<std::uint32_t>((static_cast<std::int64_t>(i) * j) %
                                           gf.order());
            XorNetwork net = build_multiplier_network(
                gf, exp,
                "alpha^" + std::to_string(static_cast<std::int64_t>(i) * j) + "*sigma_" +
                    std::to_string(j));
            net.operand_tag = j;
            bank.push_back(std::move(net));
        }
    }
    return bank;
}

XorNetwork cse_intra(const XorNetwork& net)
{
    XorNetwork out = normalized(net);
    std::vector<TermSet*> rows;
    rows.reserve(out.outputs.size());
    for (XorRow& row : out.outputs)
        rows.push_back(&row.terms);
    mine_pairs(rows, out.shared_defs);
    return out;
}

XorGroup cse_group(const std::vector<XorNetwork>& nets)
{
    if (nets.empty())
        throw GroupMismatch("cannot share across an empty group");
    XorGroup group;
    group.num_inputs = nets.front().num_inputs;
    group.operand_tag = nets.front().operand_tag;
    for (const XorNetwork& net : nets) {
        if (net.num_inputs != group.num_inputs)
            throw GroupMismatch("group members have different input widths");
        if (net.operand_tag != group.operand_tag)
            throw GroupMismatch("group members have different operands");
        group.members.push_back(normalized(net));
    }

    std::vector<TermSet*> rows;
    for (XorNetwork& member : group.members)
        for (XorRow& row : member.outputs)
            rows.push_back(&row.terms);
    mine_pairs(rows, group.shared_defs);
    return group;
}

namespace {

std::vector<bool> eval_defs(const std::vector<TermSet>& defs, std::uint32_t input_bits)
{
    std::vector<bool> values(defs.size(), false);
    for (std::size_t k = 0; k < defs.size(); ++k) {
        bool v = false;
        for (const XorTerm& t : defs[k]) {
            if (t.kind == XorTerm::Kind::Input)
                v ^= (input_bits >> t.index) & 1u;
            else
                v = v != values[static_cast<std::size_t>(t.index)];
        }
        values[k] = v;
    }
    return values;
}

bool eval_row(const TermSet& terms, std::uint32_t input_bits,
              const std::vector<bool>& def_values)
{
    bool v = false;
    for (const XorTerm& t : terms) {
        if (t.kind == XorTerm::Kind::Input)
            v ^= (input_bits >> t.index) & 1u;
        else
            v = v != def_values[static_cast<std::size_t>(t.index)];
    }
    return v;
}

} // namespace

std::vector<bool> evaluate_network(const XorNetwork& net, std::uint32_t input_bits)
{
    if (net.num_inputs < 32 && (input_bits >> net.num_inputs) != 0)
        throw WidthMismatch("input wider than the network");
    const std::vector<bool> defs = eval_defs(net.shared_defs, input_bits);
    std::vector<bool> out;
    out.reserve(net.outputs.size());
    for (const XorRow& row : net.outputs)
        out.push_back(eval_row(row.terms, input_bits, defs));
    return out;
}

std::vector<std::vector<bool>> evaluate_group(const XorGroup& group,
                                              std::uint32_t input_bits)
{
    if (group.num_inputs < 32 && (input_bits >> group.num_inputs) != 0)
        throw WidthMismatch("input wider than the group");
    const std::vector<bool> defs = eval_defs(group.shared_defs, input_bits);
    std::vector<std::vector<bool>> out;
    out.reserve(group.members.size());
    for (const XorNetwork& member : group.members) {
        std::vector<bool> bits;
        bits.reserve(member.outputs.size());
        for (const XorRow& row : member.outputs)
            bits.push_back(eval_row(row.terms, input_bits, defs));
        out.push_back(std::move(bits));
    }
    return out;
}

std::vector<std::uint32_t> expand_to_input_masks(const XorNetwork& net)
{
    const auto masks = def_masks(net.shared_defs);
    std::vector<std::uint32_t> out;
    out.reserve(net.outputs.size());
    for (const XorRow& row : net.outputs) {
        std::uint32_t mask = 0;
        for (const XorTerm& t : row.terms) {
            if (t.kind == XorTerm::Kind::Input)
                mask ^= 1u << t.index;
            else
                mask ^= masks[static_cast<std::size_t>(t.index)];
        }
        out.push_back(mask);
    }
    return out;
}

int GateReport::gates(const std::string& architecture) const
{
    for (const GateReportRow& row : rows)
        if (row.architecture == architecture)
            return row.xor_gates;
    throw Error("no gate report row named " + architecture);
}

GateReport gate_report(const FieldTables& gf, const CodeSpec& code, int p)
{
    // Serial Chien: one multiplier per coefficient (alpha^1..alpha^t) plus
    // the t*m adder stage folding sigma_0..sigma_t into one sum.
    int serial = code.t * gf.m();
    for (int j = 1; j <= code.t; ++j)
        serial += build_multiplier_network(gf, static_cast<std::uint32_t>(j), "serial")
                      .gate_count();

    const std::vector<XorNetwork> bank = build_chien_bank(gf, code, p);
    int baseline = 0;
    int intra = 0;
    for (const XorNetwork& net : bank) {
        baseline += net.gate_count();
        intra += cse_intra(net).gate_count();
    }

    int grouped = 0;
    for (int j = 1; j <= code.t; ++j) {
        std::vector<XorNetwork> members;
        for (const XorNetwork& net : bank)
            if (net.operand_tag == j)
                members.push_back(net);
        grouped += cse_group(members).gate_count();
    }

    const auto pct = [&](int gates) {
        return static_cast<int>(
            std::lround(100.0 * (baseline - gates) / static_cast<double>(baseline)));
    };

    GateReport report;
    report.rows.push_back(GateReportRow{"serial", serial, std::nullopt});
    report.rows.push_back(GateReportRow{"parallel", baseline, 0});
    report.rows.push_back(GateReportRow{"parallel+intra-cse", intra, pct(intra)});
    report.rows.push_back(GateReportRow{"parallel+group-cse", grouped, pct(grouped)});
    return report;
}

namespace {

std::string term_name(const XorTerm& t)
{
    return (t.kind == XorTerm::Kind::Input ? "b" : "c") + std::to_string(t.index);
}

void render_rows(std::ostringstream& os, const std::vector<TermSet>& defs)
{
    for (std::size_t k = 0; k < defs.size(); ++k) {
        os << "c" << k << " =";
        for (std::size_t i = 0; i < defs[k].size(); ++i)
            os << (i ? " ^ " : " ") << term_name(defs[k][i]);
        os << "\n";
    }
}

void render_outputs(std::ostringstream& os, const XorNetwork& net, int member_index)
{
    for (std::size_t r = 0; r < net.outputs.size(); ++r) {
        if (member_index >= 0)
            os << "out[" << member_index << "][" << r << "] =";
        else
            os << net.outputs[r].label << " =";
        const TermSet& terms = net.outputs[r].terms;
        if (terms.empty())
            os << " 0";
        for (std::size_t i = 0; i < terms.size(); ++i)
            os << (i ? " ^ " : " ") << term_name(terms[i]);
        os << "\n";
    }
}

} // namespace

std::string render_netlist(const XorNetwork& net)
{
    std::ostringstream os;
    os << "# " << net.label << " (" << net.gate_count() << " XOR gates)\n";
    render_rows(os, net.shared_defs);
    render_outputs(os, net, -1);
    return os.str();
}

std::string render_netlist(const XorGroup& group)
{
    std::ostringstream os;
    os << "# group sigma_" << group.operand_tag << " (" << group.gate_count()
       << " XOR gates)\n";
    render_rows(os, group.shared_defs);
    for (std::size_t m = 0; m < group.members.size(); ++m) {
        os << "# member " << group.members[m].label << "\n";
        render_outputs(os, group.members[m], static_cast<int>(m));
    }
    return os.str();
}

} // namespace bch
