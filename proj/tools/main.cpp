#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "anyonlab/errors.hpp"
#include "anyonlab/harness/config.hpp"
#include "anyonlab/harness/output.hpp"
#include "anyonlab/harness/plots.hpp"
#include "anyonlab/harness/study.hpp"

namespace fs = std::filesystem;
using namespace anyonlab;
using namespace anyonlab::harness;

namespace {

enum Exit { kOk = 0, kUsage = 1, kPartial = 2 };

struct Flags {
    ExperimentConfig cfg;
    std::uint64_t seed = 0;
    bool quiet = false;
};

void add_study(CLI::App& app, const std::string& name, const std::string& help, Flags& f) {
    auto* sub = app.add_subcommand(name, help);
    auto& c = f.cfg;
    sub->add_option("--alpha", c.alpha, "Statistics parameters")->delimiter(',');
    sub->add_option("--eps", c.eps, "Anisotropies, descending for convergence")->delimiter(',');
    sub->add_option("--n", c.n, "Particle numbers")->delimiter(',');
    sub->add_option("--count", c.count, "Levels, eigenpairs or random points");
    sub->add_option("--tol", c.tol, "Eigensolver residual tolerance");
    sub->add_option("--seed", f.seed, "Random seed (mandatory for Monte-Carlo studies)");
    sub->add_option("--grid", c.grid, "Resolutions (pair: nx, or nx,2nx for extrapolation; hardy: n per side)")
        ->delimiter(',');
    sub->add_option("--box", c.box, "Half-width of the box along x");
    sub->add_option("--occ", c.occ, "Occupation set for variational runs")->delimiter(',');
    sub->add_option("--samples", c.samples, "Monte-Carlo samples in total");
    sub->add_option("--chains", c.chains, "Independent Markov chains");
    sub->add_option("--beta", c.beta, "Pair exponent of the Hardy trial state");
    sub->add_option("--out", c.out, "Output directory");
    sub->add_option("--workers", c.workers, "Worker threads");
    sub->add_flag("--no-cache", c.no_cache, "Recompute even when a matching manifest exists");
    sub->add_flag("--quiet", f.quiet, "Do not echo the CSV");
    sub->callback([sub, name, &f] {
        f.cfg.study = name;
        if (sub->count("--seed") > 0) f.cfg.seed = f.seed;
    });
}

int run(Flags& f) {
    auto& cfg = f.cfg;
    cfg.apply_defaults();
    cfg.validate();
    const fs::path dir = cfg.out;
    if (!cfg.no_cache) {
        if (auto m = cached_manifest(cfg, dir)) {
            std::cerr << "cache hit: " << (dir / "manifest.json").string() << " (" << cfg.hash() << ")\n";
            return kOk;
        }
    }
    fs::create_directories(dir);
    const StudyTable table = run_study(cfg);
    write_csv(table, dir / "results.csv");
    const auto manifest = make_manifest(cfg, table);
    std::ofstream(dir / "manifest.json") << manifest.dump(2) << "\n";
    if (cfg.study == "convergence" || cfg.study == "spectrum2d" || cfg.study == "hardy") {
        try {
            render_plots(manifest, dir);
        } catch (const ConfigurationError& e) {
            std::cerr << "warning: " << e.what() << "\n";
        }
    }
    if (!f.quiet) {
        std::ifstream in(dir / "results.csv");
        std::cout << in.rdbuf();
    }
    for (const auto& r : table.rows)
        if (!r.ok) std::cerr << "failed row: " << r.error << "\n";
    return table.all_ok() ? kOk : kPartial;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical experiments on anyons in anisotropic traps"};
    app.set_version_flag("--version", tool_version());
    app.set_config("--config", "", "INI file; sections named after subcommands");
    app.require_subcommand(1);

    Flags f;
    add_study(app, "tg", "Hard-core 1D levels with multiplicities", f);
    add_study(app, "calogero", "Inverse-square model energies and the radial pair check", f);
    add_study(app, "spectrum2d", "Lowest eigenpairs of the relative pair problem", f);
    add_study(app, "convergence", "Reduced relative energy versus anisotropy", f);
    add_study(app, "variational", "Monte-Carlo energy of the trial state versus the splitting value", f);
    add_study(app, "hardy", "Hardy constant: closed form, grid quotient, N-particle bounds", f);
    add_study(app, "gauge-checks", "Pointwise gauge identities and geometric checks", f);

    std::string plot_dir = "out";
    auto* plot = app.add_subcommand("plot", "Render SVG plots from a manifest directory");
    plot->add_option("--out", plot_dir, "Directory holding manifest.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (plot->parsed()) {
            for (const auto& p : render_plots(read_manifest(fs::path(plot_dir) / "manifest.json"), plot_dir))
                std::cout << p.string() << "\n";
            return kOk;
        }
        return run(f);
    } catch (const ConfigurationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kPartial;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
