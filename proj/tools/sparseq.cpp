#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "sparseq/experiments.hpp"

namespace {

struct CliOptions {
    sparseq::ExperimentConfig config;
    std::vector<std::string> kind_names;
    std::string out_path;
    bool quick = false;
    bool trials_set = false;
};

void add_common_options(CLI::App* cmd, CliOptions& opts) {
    cmd->set_config("--config")->description("flat key=value config file");
    cmd->add_option("--v", opts.config.v, "channel memory")->check(CLI::NonNegativeNumber);
    cmd->add_option("--nf", opts.config.n_f, "equalizer length")->check(CLI::PositiveNumber);
    cmd->add_option("--delta", opts.config.delta, "decision delay (-1: (nf+v)/2)");
    cmd->add_option("--seed", opts.config.seed, "rng seed");
    cmd->add_option("--trials", opts.config.trials, "channel realizations")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--snr-db", opts.config.snr_db_grid, "SNR grid in dB")
        ->delimiter(',');
    cmd->add_option("--eta-max-db", opts.config.eta_max_db_grid,
                    "performance-loss grid in dB")
        ->delimiter(',');
    cmd->add_option("--kinds", opts.kind_names, "dictionary kinds")->delimiter(',');
    cmd->add_option("--sparsity", opts.config.sparsity, "tap fraction for the SER experiment")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--symbols", opts.config.symbols_per_trial,
                    "symbols per channel realization")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--quick", opts.quick, "reduce trials to 500");
    cmd->add_option("--out", opts.out_path, "output CSV path");
}

int run(CliOptions& opts, const std::string& name,
        const std::function<std::string(const sparseq::ExperimentConfig&)>& experiment) {
    try {
        for (const auto& kind_name : opts.kind_names)
            opts.config.kinds.push_back(sparseq::triple_kind_from_string(kind_name));
        if (opts.quick && !opts.trials_set) opts.config.trials = 500;

        const std::string csv = experiment(opts.config);
        const std::string path = opts.out_path.empty() ? name + ".csv" : opts.out_path;
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << path << " for writing\n";
            return 1;
        }
        file << csv;
        std::cout << "wrote " << path << "\n";
        return 0;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparseq: sparse FIR linear equalizer design experiments"};
    app.require_subcommand(1);

    CliOptions opts;

    auto* coh_snr = app.add_subcommand("coherence-vs-snr",
                                       "mean dictionary coherence per SNR point");
    auto* coh_bound = app.add_subcommand(
        "coherence-bound", "theoretical vs empirical coherence bound per channel length");
    auto* taps = app.add_subcommand("taps-vs-loss",
                                    "active-tap percentage per loss budget");
    auto* ser = app.add_subcommand("ser", "symbol error rate comparison");

    for (auto* cmd : {coh_snr, coh_bound, taps, ser}) add_common_options(cmd, opts);

    CLI11_PARSE(app, argc, argv);

    opts.trials_set = app.get_subcommands().front()->count("--trials") > 0;

    if (coh_snr->parsed())
        return run(opts, "coherence-vs-snr", sparseq::experiment_coherence_vs_snr);
    if (coh_bound->parsed())
        return run(opts, "coherence-bound", [](const sparseq::ExperimentConfig& c) {
            return sparseq::experiment_coherence_bound(c);
        });
    if (taps->parsed()) return run(opts, "taps-vs-loss", sparseq::experiment_taps_vs_loss);
    return run(opts, "ser", sparseq::experiment_ser);
}
