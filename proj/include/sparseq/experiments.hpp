#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparseq/dictionaries.hpp"
#include "sparseq/types.hpp"

namespace sparseq {

/// Resolved configuration for one experiment run. Defaults follow the
/// desk-scale setup (v=5, N_f=35, delta=20); --quick drops trials to 500.
struct ExperimentConfig {
    int v = 5;
    Index n_f = 35;
    Index delta = -1;  // -1: floor((N_f + v) / 2)
    std::uint64_t seed = 1;
    int trials = 5000;
    std::vector<double> snr_db_grid;
    std::vector<double> eta_max_db_grid;
    std::vector<TripleKind> kinds;
    double sparsity = 0.25;
    int symbols_per_trial = 10000;

    Index resolved_delta() const { return delta < 0 ? (n_f + v) / 2 : delta; }
};

/// Fig.-1 style sweep: mean/std of mu(Phi) per kind per SNR point.
/// Columns: snr_db, kind, mean_mu, std_mu.
std::string experiment_coherence_vs_snr(const ExperimentConfig& config);

/// Fig.-2 style sweep over channel length v (the config's snr grid must
/// hold exactly one point; v is swept over 2..10 by default or the
/// config's eta grid is ignored). Columns: v, theoretical_mu,
/// empirical_mu, relative_mismatch_percent.
std::string experiment_coherence_bound(const ExperimentConfig& config,
                                       int v_min = 2, int v_max = 10);

/// Fig.-3 style sweep: mean/std active-tap percentage per
/// (eta_max, snr, kind). Columns: eta_max_db, snr_db, kind,
/// mean_active_percent, std_active_percent.
std::string experiment_taps_vs_loss(const ExperimentConfig& config);

/// Fig.-4 style SER comparison at a fixed sparsity level. Per-channel
/// designs, pooled errors. Columns: snr_db, filter, errors, symbols, ser.
std::string experiment_ser(const ExperimentConfig& config);

}  // namespace sparseq
