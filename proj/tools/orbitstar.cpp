#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbitstar/cli.hpp"

using namespace orbitstar;

int main(int argc, char** argv) {
    CLI::App app{"orbitstar: exact star products on semisimple coadjoint orbits"};
    app.fallthrough(true);
    app.set_config("--config", "", "config file, one 'key=value' per line; flags win");
    app.require_subcommand(1);

    std::string type = "A";
    std::string lambda_text, lambda_fund_text, xi_text;
    RunConfig cfg;
    app.add_option("--type", type, "series letter A..G")->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
    app.add_option("--rank", cfg.rank, "rank of the root system");
    auto* lam = app.add_option("--lambda", lambda_text, "lambda as rational values on the h_i, comma separated");
    app.add_option("--lambda-fundamental", lambda_fund_text,
                   "lambda in fundamental-weight coordinates (numerically the same list as --lambda)")
        ->excludes(lam);
    app.add_option("--cutoff", cfg.cutoff, "height cutoff for the pairing blocks");
    app.add_option("--seed", cfg.seed, "seed for all sampled checks");
    app.add_option("--suite", cfg.suites, "restrict verify to these suites")->delimiter(',');
    app.add_option("--inject-fault", cfg.fault, "perturb B before verifying")->check(CLI::IsMember({"scale-t"}));
    app.add_option("--grid", cfg.grid, "invariants: dominant grid bound per coordinate");
    app.add_option("--xi", xi_text, "invariants: one weight, fundamental coordinates, or 'short-fundamental'");
    app.add_option("--order", cfg.order, "dump-b: series order (default: complete range for the cutoff)");
    app.add_option("--output", cfg.output, "write the document here instead of stdout");
    app.add_option("--cache-dir", cfg.cache_dir, "block cache directory")->envname("ORBITSTAR_CACHE_DIR");

    CLI::App* c_build = app.add_subcommand("build", "compute blocks and B, print the build summary");
    CLI::App* c_verify = app.add_subcommand("verify", "run verification suites, emit the JSON report");
    CLI::App* c_inv = app.add_subcommand("invariants", "characteristic class and dimension table");
    CLI::App* c_dump = app.add_subcommand("dump-b", "print the t-series of B");

    try {
        app.parse(argc, argv);
        cfg.series = type[0];
        if (!lambda_text.empty()) cfg.lambda = parse_rat_list(lambda_text);
        if (!lambda_fund_text.empty()) cfg.lambda = parse_rat_list(lambda_fund_text);
        if (xi_text == "short-fundamental")
            cfg.xi_short_fundamental = true;
        else if (!xi_text.empty())
            cfg.xi = parse_rat_list(xi_text);

        if (c_build->parsed()) return cmd_build(cfg);
        if (c_verify->parsed()) return cmd_verify(cfg);
        if (c_inv->parsed()) return cmd_invariants(cfg);
        if (c_dump->parsed()) return cmd_dump_b(cfg);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const DegeneracyError& e) {
        std::cerr << "degeneracy error: " << e.what() << "\n";
        return 3;
    } catch (const CutoffError& e) {
        std::cerr << "cutoff error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal invariant failed: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
}
