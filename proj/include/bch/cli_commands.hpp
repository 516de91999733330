#ifndef BCH_CLI_COMMANDS_HPP
#define BCH_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>

namespace bch {

/// Everything a subcommand needs, validated before any work starts.
/// Defaults: GF(2^9) with 0x211, k=256, t=2 (18 redundancy bits, n=274);
/// pass t=3 for the 27-bit variant (n=283).
struct RunConfig {
    int m = 9;
    std::uint32_t primitive_poly = 0x211;
    int t = 2;
    int k = 256;
    int p_s = 4;
    int p_c = 4;
    std::uint64_t seed = 1;
    int flips = -1; // bench: -1 means "use t"
    double ber = -1.0; // bench: Bernoulli channel when >= 0 (overrides flips)
    int trials = 10000;
    int words = 3;
    bool allow_failures = false;
    bool serial = false; // force serial kernels
    bool per_trial = false;
    bool dump_netlists = false;
};

/// Applies key=value lines from path for every key not already fixed on the
/// command line ('#' starts a comment). Known keys: m, primitive_poly, t, k,
/// ps, pc, seed.
void apply_config_file(RunConfig& cfg, const std::string& path,
                       const std::set<std::string>& overridden);

int cmd_info(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_encode(const RunConfig& cfg, const std::string& in_path,
               const std::string& out_path, std::ostream& out, std::ostream& err);
int cmd_decode(const RunConfig& cfg, const std::string& in_path,
               const std::string& out_path, std::ostream& out, std::ostream& err);
int cmd_optimize(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_schedule(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace bch

#endif
