#include "bch/cli_commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "bch/arch_model.hpp"
#include "bch/channel.hpp"
#include "bch/code.hpp"
#include "bch/errors.hpp"
#include "bch/stream_io.hpp"
#include "bch/xor_network.hpp"

namespace bch {

namespace {

struct BuiltCode {
    FieldTables gf;
    CodeSpec code;
};

BuiltCode build_from_config(const RunConfig& cfg)
{
    if (cfg.p_s < 1 || cfg.p_c < 1)
        throw InvalidParallelism("ps and pc must be >= 1");
    FieldTables gf = FieldTables::build(FieldSpec{cfg.m, cfg.primitive_poly});
    CodeSpec code = make_code(gf, cfg.t, cfg.k);
    return BuiltCode{std::move(gf), std::move(code)};
}

Execution execution(const RunConfig& cfg)
{
    return cfg.serial ? Execution::Serial : Execution::Parallel;
}

std::vector<std::uint8_t> read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open " + path + " for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ConfigError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw ConfigError("short write to " + path);
}

const char* status_name(DecodeStatus status)
{
    switch (status) {
    case DecodeStatus::NoError:
        return "NoError";
    case DecodeStatus::Corrected:
        return "Corrected";
    case DecodeStatus::Failure:
        return "Failure";
    }
    return "?";
}

} // namespace

void apply_config_file(RunConfig& cfg, const std::string& path,
                       const std::set<std::string>& overridden)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(line_no) +
                              ": expected key=value");
        auto strip = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (overridden.count(key))
            continue;
        try {
            if (key == "m")
                cfg.m = std::stoi(value);
            else if (key == "primitive_poly")
                cfg.primitive_poly =
                    static_cast<std::uint32_t>(std::stoul(value, nullptr, 0));
            else if (key == "t")
                cfg.t = std::stoi(value);
            else if (key == "k")
                cfg.k = std::stoi(value);
            else if (key == "ps")
                cfg.p_s = std::stoi(value);
            else if (key == "pc")
                cfg.p_c = std::stoi(value);
            else if (key == "seed")
                cfg.seed = std::stoull(value, nullptr, 0);
            else
                throw ConfigError(path + ":" + std::to_string(line_no) +
                                  ": unknown key '" + key + "'");
        } catch (const std::logic_error&) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": bad value for '" +
                              key + "'");
        }
    }
}

int cmd_info(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        const BuiltCode built = build_from_config(cfg);
        const CodeSpec& code = built.code;
        out << "BCH code over GF(2^" << cfg.m << "), primitive polynomial 0x" << std::hex
            << cfg.primitive_poly << std::dec << "\n";
        out << "n=" << code.n << " k=" << code.k << " t=" << code.t
            << " redundancy=" << code.redundancy << "\n";
        out << "deg_g=" << code.generator.degree() << " shorten_by=" << code.shorten_by
            << " n_full=" << code.n_full << "\n";
        out << std::fixed << std::setprecision(4)
            << "rate=" << static_cast<double>(code.k) / static_cast<double>(code.n)
            << "\n";
        out << "g(X)=" << code.generator.to_hex() << "\n";
        return 0;
    } catch (const Error& e) {
        err << "info: " << e.what() << "\n";
        return 1;
    }
}

int cmd_encode(const RunConfig& cfg, const std::string& in_path,
               const std::string& out_path, std::ostream& out, std::ostream& err)
{
    try {
        const BuiltCode built = build_from_config(cfg);
        const std::vector<std::uint8_t> payload = read_file(in_path);
        const std::vector<std::uint8_t> encoded =
            encode_stream(built.code, payload, execution(cfg));
        write_file(out_path, encoded);
        const std::uint64_t blocks =
            payload.empty()
                ? 0
                : (static_cast<std::uint64_t>(payload.size()) * 8 + built.code.k - 1) /
                      static_cast<std::uint64_t>(built.code.k);
        out << "encoded " << payload.size() << " bytes into " << blocks << " block"
            << (blocks == 1 ? "" : "s") << " of n=" << built.code.n << " (" << encoded.size()
            << " bytes)\n";
        return 0;
    } catch (const Error& e) {
        err << "encode: " << e.what() << "\n";
        return 1;
    }
}

int cmd_decode(const RunConfig& cfg, const std::string& in_path,
               const std::string& out_path, std::ostream& out, std::ostream& err)
{
    try {
        const BuiltCode built = build_from_config(cfg);
        const std::vector<std::uint8_t> encoded = read_file(in_path);
        const DecodeStreamResult result =
            decode_stream(built.gf, built.code, encoded, cfg.p_s, cfg.p_c, execution(cfg));
        write_file(out_path, result.payload);
        for (const BlockReport& report : result.reports) {
            out << "block " << report.index << ": " << status_name(report.status);
            if (report.status == DecodeStatus::Corrected) {
                out << " nu=" << report.num_errors << " positions=";
                for (std::size_t i = 0; i < report.positions.size(); ++i)
                    out << (i ? "," : "") << report.positions[i];
            }
            out << " cycles=" << report.cycles << "\n";
        }
        out << "decoded " << result.reports.size() << " blocks, " << result.failures
            << " failures\n";
        if (result.failures > 0 && !cfg.allow_failures)
            return 2;
        return 0;
    } catch (const TruncatedInput& e) {
        err << "decode: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "decode: " << e.what() << "\n";
        return 1;
    }
}

int cmd_optimize(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        const BuiltCode built = build_from_config(cfg);
        const GateReport report = gate_report(built.gf, built.code, cfg.p_c);
        out << "Chien search bank, p=" << cfg.p_c << ", t=" << built.code.t << ", GF(2^"
            << cfg.m << ")\n";
        out << std::left << std::setw(24) << "architecture" << std::right << std::setw(10)
            << "XOR gates" << std::setw(14) << "improvement" << "\n";
        for (const GateReportRow& row : report.rows) {
            out << std::left << std::setw(24) << row.architecture << std::right
                << std::setw(10) << row.xor_gates;
            if (row.improvement_pct)
                out << std::setw(13) << *row.improvement_pct << "%";
            else
                out << std::setw(14) << "-";
            out << "\n";
        }
        if (cfg.dump_netlists) {
            out << "\n";
            const std::vector<XorNetwork> bank =
                build_chien_bank(built.gf, built.code, cfg.p_c);
            for (int j = 1; j <= built.code.t; ++j) {
                std::vector<XorNetwork> members;
                for (const XorNetwork& net : bank)
                    if (net.operand_tag == j)
                        members.push_back(net);
                out << render_netlist(cse_group(members)) << "\n";
            }
        }
        return 0;
    } catch (const Error& e) {
        err << "optimize: " << e.what() << "\n";
        return 1;
    }
}

int cmd_schedule(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        const BuiltCode built = build_from_config(cfg);
        if (cfg.words < 1)
            throw ConfigError("--words must be >= 1");
        const ArchConfig arch{built.code.n, built.code.t, cfg.p_s, cfg.p_c};
        const PipelineSchedule schedule = schedule_pipelined(arch, cfg.words);
        out << render_schedule(schedule);
        out << "\n" << render_throughput(throughput_report(arch, cfg.words), cfg.words);
        return 0;
    } catch (const Error& e) {
        err << "schedule: " << e.what() << "\n";
        return 1;
    }
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        const BuiltCode built = build_from_config(cfg);
        if (cfg.trials < 1)
            throw ConfigError("--trials must be >= 1");
        ChannelSpec channel;
        channel.seed = cfg.seed;
        if (cfg.ber >= 0.0)
            channel.model = BernoulliFlips{cfg.ber};
        else
            channel.model = RandomFlips{cfg.flips >= 0 ? cfg.flips : built.code.t};

        std::vector<TrialRecord> log;
        const CampaignStats stats =
            campaign(built.gf, built.code, cfg.trials, channel, cfg.p_s, cfg.p_c,
                     execution(cfg), cfg.per_trial ? &log : nullptr);

        const PageFrame frame = make_page_frame(built.code, 512 * 8);
        out << "campaign: trials=" << stats.trials << " seed=" << cfg.seed << " code=("
            << built.code.n << "," << built.code.k << "," << built.code.t << ")"
            << " ps=" << cfg.p_s << " pc=" << cfg.p_c << "\n";
        out << "page frame: " << frame.sector_payload_bits << " payload bits -> "
            << frame.codewords_per_page << " codewords\n";
        out << std::left << std::setw(16) << "no_error" << stats.no_error << "\n"
            << std::left << std::setw(16) << "corrected" << stats.corrected << "\n"
            << std::left << std::setw(16) << "failures" << stats.failures << "\n"
            << std::left << std::setw(16) << "miscorrections" << stats.miscorrections
            << "\n"
            << std::left << std::setw(16) << "mean_cycles" << std::fixed
            << std::setprecision(2) << stats.mean_cycles() << "\n";
        if (cfg.per_trial)
            for (const TrialRecord& record : log)
                out << record.trial << "," << record.weight << ","
                    << status_name(record.status) << "," << record.cycles << "\n";
        return 0;
    } catch (const Error& e) {
        err << "bench: " << e.what() << "\n";
        return 1;
    }
}

} // namespace bch
