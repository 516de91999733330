#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "bch/cli_commands.hpp"
#include "bch/errors.hpp"

namespace {

// Flags set on the command line take precedence over the config file.
std::set<std::string> overridden_keys(const CLI::App& app)
{
    std::set<std::string> keys;
    const auto mark = [&](const char* flag, const char* key) {
        if (app.count(flag) > 0)
            keys.insert(key);
    };
    mark("--m", "m");
    mark("--prim-poly", "primitive_poly");
    mark("--t", "t");
    mark("--k", "k");
    mark("--ps", "ps");
    mark("--pc", "pc");
    mark("--seed", "seed");
    return keys;
}

void add_common_options(CLI::App& app, bch::RunConfig& cfg, std::string& config_path)
{
    app.add_option("--m", cfg.m, "field extension degree");
    app.add_option("--prim-poly", cfg.primitive_poly,
                   "primitive polynomial, bit i = coeff of x^i (e.g. 0x211)");
    app.add_option("--t", cfg.t, "error-correction capability");
    app.add_option("--k", cfg.k, "message length in bits");
    app.add_option("--ps", cfg.p_s, "syndrome parallelism");
    app.add_option("--pc", cfg.p_c, "Chien parallelism");
    app.add_option("--seed", cfg.seed, "channel seed");
    app.add_option("--config", config_path, "key=value config file");
    app.add_flag("--serial", cfg.serial, "disable multithreaded kernels");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"BCH error-correction toolkit for flash-controller codes"};
    app.require_subcommand(1);

    bch::RunConfig cfg;
    std::string config_path;
    std::string in_path;
    std::string out_path;

    CLI::App* info = app.add_subcommand("info", "print the derived code parameters");
    add_common_options(*info, cfg, config_path);

    CLI::App* enc = app.add_subcommand("encode", "encode a file into codeword blocks");
    add_common_options(*enc, cfg, config_path);
    enc->add_option("input", in_path, "payload file")->required();
    enc->add_option("output", out_path, "encoded file")->required();

    CLI::App* dec = app.add_subcommand("decode", "decode codeword blocks back to bytes");
    add_common_options(*dec, cfg, config_path);
    dec->add_option("input", in_path, "encoded file")->required();
    dec->add_option("output", out_path, "recovered payload file")->required();
    dec->add_flag("--allow-failures", cfg.allow_failures,
                  "exit 0 even when blocks fail to decode");

    CLI::App* opt = app.add_subcommand("optimize", "Chien bank XOR-sharing gate report");
    add_common_options(*opt, cfg, config_path);
    opt->add_flag("--dump", cfg.dump_netlists, "dump the optimized group netlists");

    CLI::App* sched = app.add_subcommand("schedule", "pipeline timing for a word stream");
    add_common_options(*sched, cfg, config_path);
    sched->add_option("--words", cfg.words, "number of codewords to schedule");

    CLI::App* bench = app.add_subcommand("bench", "Monte-Carlo error-injection campaign");
    add_common_options(*bench, cfg, config_path);
    bench->add_option("--trials", cfg.trials, "number of trials");
    bench->add_option("--flips", cfg.flips, "random bit flips per codeword (default t)");
    bench->add_option("--ber", cfg.ber, "Bernoulli bit-flip probability");
    bench->add_flag("--per-trial", cfg.per_trial, "one csv line per trial");

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (!config_path.empty())
            bch::apply_config_file(cfg, config_path, overridden_keys(*sub));

        if (sub == info)
            return bch::cmd_info(cfg, std::cout, std::cerr);
        if (sub == enc)
            return bch::cmd_encode(cfg, in_path, out_path, std::cout, std::cerr);
        if (sub == dec)
            return bch::cmd_decode(cfg, in_path, out_path, std::cout, std::cerr);
        if (sub == opt)
            return bch::cmd_optimize(cfg, std::cout, std::cerr);
        if (sub == sched)
            return bch::cmd_schedule(cfg, std::cout, std::cerr);
        if (sub == bench)
            return bch::cmd_bench(cfg, std::cout, std::cerr);
    } catch (const bch::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
