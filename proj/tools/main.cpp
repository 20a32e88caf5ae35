#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <matint/cli.hpp>

int main(int argc, char** argv) {
    CLI::App app{"exact asymptotic expansions of Hermitian matrix integrals"};
    app.require_subcommand(1);

    matint::cli::RunConfig cfg;
    std::string out_path;
    std::string gs;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "output format: json or csv");
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
        cmd->add_option("--threads", cfg.threads, "worker threads (0 = default)");
        cmd->add_option("--budget", cfg.budget, "half-edge cap for enumerations");
    };

    auto* scalar = app.add_subcommand("scalar-expand", "scalar-model graph expansion");
    scalar->add_option("--max-degree", cfg.max_degree, "largest vertex degree 2m");
    scalar->add_option("--trunc", cfg.trunc, "weighted truncation order");
    scalar->add_option("--profile", cfg.profile, "single profile, e.g. 3:2,4:1");
    add_common(scalar);

    auto* matrix = app.add_subcommand("matrix-expand", "matrix-model ribbon expansion");
    matrix->add_option("--max-degree", cfg.max_degree, "largest vertex degree 2m");
    matrix->add_option("--trunc", cfg.trunc, "weighted truncation order");
    matrix->add_option("--profile", cfg.profile, "single profile, e.g. 4:1");
    add_common(matrix);

    auto* renum = app.add_subcommand("ribbon-enum", "isomorphism classes of ribbon graphs");
    renum->add_option("--profile", cfg.profile, "degree profile, e.g. 3:2")->required();
    renum->add_flag("--connected", cfg.connected_only, "connected classes only");
    add_common(renum);

    auto* pverify = app.add_subcommand("penner-verify",
                                       "graph sum vs closed form for one (g,s)");
    pverify->add_option("--gs", gs, "genus,punctures e.g. 0,3")->required();
    add_common(pverify);

    auto* ptable = app.add_subcommand("penner-table", "graph sum vs closed form table");
    ptable->add_option("--max-euler", cfg.max_euler, "largest 2g+s-2 row");
    add_common(ptable);

    auto* kpv = app.add_subcommand("kp-verify", "KP residual of the determinant tau");
    kpv->add_option("--n", cfg.n, "matrix size")->required();
    kpv->add_option("--trunc", cfg.trunc, "residual checked to this weighted degree");
    kpv->add_option("--moments", cfg.moments,
                    "gaussian | random:<seed> | soliton:<file> | file:<file>");
    kpv->add_option("--seed", cfg.seed, "seed when --moments random has no argument");
    add_common(kpv);

    auto* sl2 = app.add_subcommand("sl2-verify", "sl(2) stability and Witt relations");
    sl2->add_option("--n", cfg.n, "matrix size")->required();
    sl2->add_option("--k", cfg.k, "potential half-degree")->required();
    sl2->add_option("--trunc", cfg.trunc, "Laurent window top");
    sl2->add_option("--a", cfg.a_values, "numeric a_1,...,a_{2k} (default: symbolic)");
    add_common(sl2);

    auto* oc = app.add_subcommand("oracle-crosscheck",
                                  "pairing sums vs class sums for all small profiles");
    add_common(oc);

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "oracle-crosscheck" && !oc->count("--budget")) cfg.budget = 12;
    if (cfg.command == "penner-verify") {
        std::istringstream is(gs);
        char comma = 0;
        if (!(is >> cfg.g >> comma >> cfg.s) || comma != ',') {
            std::cerr << "{\"error\":\"invalid_config\",\"detail\":\"--gs expects g,s\"}\n";
            return 2;
        }
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "{\"error\":\"invalid_config\",\"detail\":\"cannot open output file\"}\n";
            return 2;
        }
        return matint::cli::run(cfg, file, std::cerr);
    }
    return matint::cli::run(cfg, std::cout, std::cerr);
}
