// curvedcs: sample, verify and bound Cheney-Sharma type operators on a
// triangle with one curved side.
//
//   curvedcs sample --field gentle --grid 33 --op all --out out
//   curvedcs verify --curve superellipse:3
//   curvedcs bounds --field sin_pi_x
//   curvedcs nodes --m 4 --y 0.2

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/run_config.hpp"

namespace {

using curvedcs::cli::RunConfig;

struct Flags {
    std::string config_path;
    curvedcs::cli::ConfigOverrides set;
};

void add_common(CLI::App& cmd, Flags& f) {
    cmd.add_option("--config", f.config_path, "JSON run configuration; flags override its values");
    cmd.add_option("--h", f.set.h, "leg length h of the triangle");
    cmd.add_option("--curve", f.set.curve, "hypotenuse: line | circle | superellipse:p | poly:c0,c1,...");
    cmd.add_option("--m", f.set.m, "x-direction degree m");
    cmd.add_option("--n", f.set.n, "y-direction degree n");
    cmd.add_option("--beta", f.set.beta, "x-direction parameter beta");
    cmd.add_option("--b", f.set.b, "y-direction parameter b");
    cmd.add_option("--field", f.set.field, "field name (gentle, eIJ, sin_pi_x, sin_cos, poly:I,J,c;...)");
}

RunConfig resolve(const Flags& f) {
    RunConfig c = f.config_path.empty() ? RunConfig{} : curvedcs::cli::load_run_config(f.config_path);
    curvedcs::cli::apply_overrides(c, f.set);
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cheney-Sharma operators on a triangle with one curved side"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);
    Flags flags;

    auto* sample = app.add_subcommand("sample", "evaluate F and operator surfaces on a masked lattice");
    add_common(*sample, flags);
    sample->add_option("--grid", flags.set.grid, "lattice size N (N x N over [0,h]^2)");
    sample->add_option("--op", flags.set.op, "qx|qy|p1|p2|s1|s2|all, comma separated");
    sample->add_option("--out", flags.set.out, "output directory");
    sample->add_option("--format", flags.set.format, "csv | json");

    auto* verify = app.add_subcommand("verify", "run the property suites at the configured parameters");
    add_common(*verify, flags);

    auto* bounds = app.add_subcommand("bounds", "tabulate remainders against their error bounds");
    add_common(*bounds, flags);
    bounds->add_option("--mode", flags.set.mode, "auto | certified | estimate");
    bounds->add_option("--points", flags.set.points, "sample lattice size for the table");
    bounds->add_option("--resolution", flags.set.resolution, "grid resolution of sampled moduli");

    auto* nodes = app.add_subcommand("nodes", "print the uniform partitions");
    add_common(*nodes, flags);
    nodes->add_option("--x", flags.set.x, "fixed x for the y-direction partition");
    nodes->add_option("--y", flags.set.y, "fixed y for the x-direction partition");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : curvedcs::cli::kExitUsage;
    }

    RunConfig config;
    try {
        config = resolve(flags);
    } catch (const curvedcs::cli::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return curvedcs::cli::kExitUsage;
    }

    if (*sample) return curvedcs::cli::run_sample(config, std::cout, std::cerr);
    if (*verify) return curvedcs::cli::run_verify(config, std::cout, std::cerr);
    if (*bounds) return curvedcs::cli::run_bounds(config, std::cout, std::cerr);
    return curvedcs::cli::run_nodes(config, std::cout, std::cerr);
}
