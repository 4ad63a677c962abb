// derdim: a workbench for bound quiver algebras over GF(p). Computes
// syzygies, projective and injective dimensions, torsion-radical layer
// lengths, and evaluates upper bounds on the derived dimension, including a
// search for the bound-minimizing set of simple modules.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "derdim/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"workbench for homological invariants of bound quiver algebras"};
    app.require_subcommand(1);

    derdim::CliOptions opt;
    std::string file, simples = "none", module_token;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "algebra presentation file")->required();
        cmd->add_option("--cutoff", opt.cutoff, "syzygy iterations before giving up on pd");
        cmd->add_option("--depth", opt.depth, "search depth for syzygy-type / resolutions");
        cmd->add_option("--max-degree", opt.max_degree, "path length truncation for the ideal closure");
        cmd->add_option("--seed", opt.seed, "seed for the randomized isomorphism tester");
        cmd->add_flag("--json", opt.json, "machine readable output");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "dimension, Loewy length, gldim, pd of simples");
    add_common(analyze);

    CLI::App* bounds = app.add_subcommand("bounds", "derived dimension bounds for one set of simples");
    add_common(bounds);
    bounds->add_option("--simples", simples, "comma separated vertices, or 'none' / 'all'");

    CLI::App* search = app.add_subcommand("search", "rank all subsets V by their best bound");
    add_common(search);
    search->add_option("--subset-limit", opt.subset_limit, "max vertex count for exhaustive search");
    search->add_flag("--greedy", opt.greedy, "hill climb instead of exhaustive enumeration");
    search->add_flag("--all", opt.show_all, "print the full table");

    CLI::App* resolve = app.add_subcommand("resolve", "minimal projective resolution of S<i> or P<i>");
    add_common(resolve);
    resolve->add_option("--module", module_token, "S<i> or P<i>")->required();

    CLI::App* syzygy_type = app.add_subcommand("syzygy-type", "finite syzygy type certificate for the top");
    add_common(syzygy_type);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (analyze->parsed()) return derdim::cmd_analyze(file, opt, std::cout, std::cerr);
    if (bounds->parsed()) return derdim::cmd_bounds(file, simples, opt, std::cout, std::cerr);
    if (search->parsed()) return derdim::cmd_search(file, opt, std::cout, std::cerr);
    if (resolve->parsed()) return derdim::cmd_resolve(file, module_token, opt, std::cout, std::cerr);
    if (syzygy_type->parsed()) return derdim::cmd_syzygy_type(file, opt, std::cout, std::cerr);
    return 1;
}
