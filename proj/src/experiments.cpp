#include "sparseq/experiments.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "sparseq/channel.hpp"
#include "sparseq/coherence.hpp"
#include "sparseq/correlations.hpp"
#include "sparseq/equalizer.hpp"
#include "sparseq/rng.hpp"
#include "sparseq/simulation.hpp"

namespace sparseq {

namespace {

std::string join(const std::vector<double>& values) {
    std::ostringstream out;
    out << std::setprecision(12);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ",";
        out << values[i];
    }
    return out.str();
}

std::string join(const std::vector<TripleKind>& kinds) {
    std::string out;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (i) out += ",";
        out += to_string(kinds[i]);
    }
    return out;
}

// self-describing header: resolved config and seed on one comment line
void write_header(std::ostringstream& out, const std::string& experiment,
                  const ExperimentConfig& c) {
    out << "# experiment=" << experiment << " v=" << c.v << " nf=" << c.n_f
        << " delta=" << c.resolved_delta() << " seed=" << c.seed
        << " trials=" << c.trials << " snr_db=" << join(c.snr_db_grid)
        << " eta_max_db=" << join(c.eta_max_db_grid) << " kinds=" << join(c.kinds)
        << " sparsity=" << std::setprecision(12) << c.sparsity
        << " symbols_per_trial=" << c.symbols_per_trial << "\n";
}

struct RunningStats {
    double sum = 0.0;
    double sum_sq = 0.0;
    long count = 0;

    void add(double x) {
        sum += x;
        sum_sq += x * x;
        ++count;
    }
    double mean() const { return sum / count; }
    double stddev() const {
        const double var = sum_sq / count - mean() * mean();
        return std::sqrt(std::max(var, 0.0));
    }
};

CMat phi_for_kind(TripleKind kind, const CMat& r_yy, const Factorization* chol,
                  const Factorization* eig) {
    switch (kind) {
        case TripleKind::CHOL_LH:
            return chol->factor_1.adjoint();
        case TripleKind::LDL_PH: {
            // Lambda^{1/2} P^H equals L^H entrywise; assemble it anyway
            const Factorization ldl = ldl_unit(r_yy);
            return CMat(ldl.factor_2.cwiseSqrt().asDiagonal() * ldl.factor_1.adjoint());
        }
        case TripleKind::EIG_DU:
            return CMat(eig->factor_2.cwiseSqrt().asDiagonal() * eig->factor_1.adjoint());
        case TripleKind::EIG_UH:
            return eig->factor_1.adjoint();
        case TripleKind::CHOL_RYY:
        case TripleKind::EIG_RYY:
            return r_yy;
    }
    throw std::logic_error("phi_for_kind: unknown kind");
}

bool needs_cholesky(TripleKind k) {
    return k == TripleKind::CHOL_LH || k == TripleKind::LDL_PH;
}
bool needs_eigen(TripleKind k) {
    return k == TripleKind::EIG_DU || k == TripleKind::EIG_UH;
}

}  // namespace

std::string experiment_coherence_vs_snr(const ExperimentConfig& config) {
    ExperimentConfig c = config;
    if (c.snr_db_grid.empty())
        c.snr_db_grid = {-30, -20, -10, 0, 10, 20, 30, 40, 50, 60};
    if (c.kinds.empty())
        c.kinds = {TripleKind::CHOL_LH, TripleKind::EIG_DU, TripleKind::CHOL_RYY};

    std::ostringstream out;
    out << std::setprecision(12);
    write_header(out, "coherence-vs-snr", c);
    out << "snr_db,kind,mean_mu,std_mu\n";

    for (double snr_db : c.snr_db_grid) {
        const double snr = db_to_linear(snr_db);
        std::vector<RunningStats> stats(c.kinds.size());
        for (int trial = 0; trial < c.trials; ++trial) {
            const Cir cir = generate_random_cir(c.v, c.seed, trial);
            const CMat r_yy = build_r_yy(convolution_matrix(cir, c.n_f), c.v, snr);
            Factorization chol, eig;
            bool have_chol = false, have_eig = false;
            for (std::size_t k = 0; k < c.kinds.size(); ++k) {
                if (needs_cholesky(c.kinds[k]) && !have_chol) {
                    chol = cholesky_llh(r_yy);
                    have_chol = true;
                }
                if (needs_eigen(c.kinds[k]) && !have_eig) {
                    eig = eigen_exact(r_yy);
                    have_eig = true;
                }
                const CMat phi = phi_for_kind(c.kinds[k], r_yy, &chol, &eig);
                stats[k].add(worst_case_coherence(phi).mu);
            }
        }
        for (std::size_t k = 0; k < c.kinds.size(); ++k)
            out << snr_db << "," << to_string(c.kinds[k]) << "," << stats[k].mean()
                << "," << stats[k].stddev() << "\n";
    }
    return out.str();
}

std::string experiment_coherence_bound(const ExperimentConfig& config, int v_min,
                                       int v_max) {
    ExperimentConfig c = config;
    if (c.snr_db_grid.empty()) c.snr_db_grid = {30.0};
    const double snr = db_to_linear(c.snr_db_grid.front());

    std::ostringstream out;
    out << std::setprecision(12);
    write_header(out, "coherence-bound", c);
    out << "v,theoretical_mu,empirical_mu,relative_mismatch_percent\n";

    for (int v = v_min; v <= v_max; ++v) {
        const double theoretical = coherence_bound_theoretical(v, snr, c.n_f);
        const double empirical = coherence_bound_empirical(
            v, snr, c.n_f, c.trials, splitmix64(c.seed) + static_cast<std::uint64_t>(v));
        const double mismatch = 100.0 * (theoretical - empirical) / theoretical;
        out << v << "," << theoretical << "," << empirical << "," << mismatch << "\n";
    }
    return out.str();
}

std::string experiment_taps_vs_loss(const ExperimentConfig& config) {
    ExperimentConfig c = config;
    if (c.snr_db_grid.empty()) c.snr_db_grid = {10.0, 30.0};
    if (c.eta_max_db_grid.empty()) c.eta_max_db_grid = {0.05, 0.1, 0.25, 0.5, 1.0, 2.0};
    if (c.kinds.empty())
        c.kinds = {TripleKind::EIG_DU, TripleKind::CHOL_LH, TripleKind::CHOL_RYY};

    const Index delta = c.resolved_delta();
    // stats[eta][snr][kind]
    std::vector<std::vector<std::vector<RunningStats>>> stats(
        c.eta_max_db_grid.size(),
        std::vector<std::vector<RunningStats>>(
            c.snr_db_grid.size(), std::vector<RunningStats>(c.kinds.size())));

    for (int trial = 0; trial < c.trials; ++trial) {
        const Cir cir = generate_random_cir(c.v, c.seed, trial);
        for (std::size_t s = 0; s < c.snr_db_grid.size(); ++s) {
            const CorrelationSet corr = build_correlations(
                cir, c.n_f, db_to_linear(c.snr_db_grid[s]), delta);
            for (std::size_t k = 0; k < c.kinds.size(); ++k) {
                const Factorization factorization = needs_eigen(c.kinds[k]) ||
                                                            c.kinds[k] == TripleKind::EIG_RYY
                                                        ? eigen_exact(corr.r_yy)
                                                        : (c.kinds[k] == TripleKind::LDL_PH
                                                               ? ldl_unit(corr.r_yy)
                                                               : cholesky_llh(corr.r_yy));
                const DictionaryTriple triple =
                    build_triple(c.kinds[k], factorization, corr.r_delta, corr.r_yy);
                for (std::size_t e = 0; e < c.eta_max_db_grid.size(); ++e) {
                    OmpConfig omp_config;
                    omp_config.delta_eq =
                        delta_eq_from_eta_max(c.eta_max_db_grid[e], corr.xi_m);
                    const OmpResult solved = omp(triple, omp_config);
                    stats[e][s][k].add(100.0 *
                                       static_cast<double>(solved.filter.active_taps()) /
                                       static_cast<double>(c.n_f));
                }
            }
        }
    }

    std::ostringstream out;
    out << std::setprecision(12);
    write_header(out, "taps-vs-loss", c);
    out << "eta_max_db,snr_db,kind,mean_active_percent,std_active_percent\n";
    for (std::size_t e = 0; e < c.eta_max_db_grid.size(); ++e)
        for (std::size_t s = 0; s < c.snr_db_grid.size(); ++s)
            for (std::size_t k = 0; k < c.kinds.size(); ++k)
                out << c.eta_max_db_grid[e] << "," << c.snr_db_grid[s] << ","
                    << to_string(c.kinds[k]) << "," << stats[e][s][k].mean() << ","
                    << stats[e][s][k].stddev() << "\n";
    return out.str();
}

std::string experiment_ser(const ExperimentConfig& config) {
    ExperimentConfig c = config;
    if (c.snr_db_grid.empty()) c.snr_db_grid = {5, 10, 15, 20, 25};
    if (c.kinds.empty())
        c.kinds = {TripleKind::EIG_DU, TripleKind::CHOL_LH, TripleKind::CHOL_RYY};

    const Index delta = c.resolved_delta();
    const Index cap = static_cast<Index>(
        std::ceil(c.sparsity * static_cast<double>(c.n_f)));

    const std::vector<std::string> labels = {"mmse_dense", "eig_du", "chol_lh",
                                             "ryy", "significant_taps"};
    // pooled errors/symbols: [snr][filter]
    std::vector<std::vector<SerPoint>> pooled(
        c.snr_db_grid.size(), std::vector<SerPoint>(labels.size()));
    for (std::size_t s = 0; s < c.snr_db_grid.size(); ++s)
        for (std::size_t f = 0; f < labels.size(); ++f) {
            pooled[s][f].snr_db = c.snr_db_grid[s];
            pooled[s][f].label = labels[f];
        }

    for (int channel = 0; channel < c.trials; ++channel) {
        const Cir cir = generate_random_cir(c.v, c.seed, channel);
        for (std::size_t s = 0; s < c.snr_db_grid.size(); ++s) {
            const CorrelationSet corr = build_correlations(
                cir, c.n_f, db_to_linear(c.snr_db_grid[s]), delta);
            const CVec w_opt = mmse_filter(corr);

            // sparse designs run OMP to the tap cap (delta_eq = 0)
            OmpConfig omp_config;
            omp_config.delta_eq = 0.0;
            omp_config.max_support = cap;

            const Factorization chol = cholesky_llh(corr.r_yy);
            const Factorization eig = eigen_exact(corr.r_yy);
            const CVec w_eig_du =
                omp(build_triple(TripleKind::EIG_DU, eig, corr.r_delta, corr.r_yy),
                    omp_config)
                    .filter.densify();
            const CVec w_chol_lh =
                omp(build_triple(TripleKind::CHOL_LH, chol, corr.r_delta, corr.r_yy),
                    omp_config)
                    .filter.densify();
            const CVec w_ryy =
                omp(build_triple(TripleKind::CHOL_RYY, chol, corr.r_delta, corr.r_yy),
                    omp_config)
                    .filter.densify();
            const CVec w_sig = significant_taps(w_opt, cap).densify();

            SimConfig sim;
            sim.constellation = Constellation::QAM16;
            sim.snr_db_grid = {c.snr_db_grid[s]};
            sim.symbols_per_trial = c.symbols_per_trial;
            sim.trials = 1;
            sim.seed = splitmix64(c.seed + 0x5eed) ^
                       splitmix64((static_cast<std::uint64_t>(s) << 32) |
                                  static_cast<std::uint64_t>(channel));
            sim.delta = delta;
            sim.n_f = c.n_f;

            const SerCurve curve = run_ser(sim, cir,
                                           {{"mmse_dense", w_opt},
                                            {"eig_du", w_eig_du},
                                            {"chol_lh", w_chol_lh},
                                            {"ryy", w_ryy},
                                            {"significant_taps", w_sig}});
            for (std::size_t f = 0; f < labels.size(); ++f) {
                pooled[s][f].errors += curve.points[f].errors;
                pooled[s][f].symbols += curve.points[f].symbols;
            }
        }
    }

    std::ostringstream out;
    out << std::setprecision(12);
    write_header(out, "ser", c);
    out << "snr_db,filter,errors,symbols,ser\n";
    for (std::size_t s = 0; s < c.snr_db_grid.size(); ++s)
        for (std::size_t f = 0; f < labels.size(); ++f)
            out << pooled[s][f].snr_db << "," << pooled[s][f].label << ","
                << pooled[s][f].errors << "," << pooled[s][f].symbols << ","
                << pooled[s][f].ser() << "\n";
    return out.str();
}

}  // namespace sparseq
