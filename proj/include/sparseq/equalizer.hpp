#pragma once

#include "sparseq/channel.hpp"
#include "sparseq/correlations.hpp"
#include "sparseq/sparse_solver.hpp"
#include "sparseq/types.hpp"

namespace sparseq {

struct DesignSpec {
    Index n_f = 35;
    Index delta = -1;      // -1: floor((N_f + v) / 2)
    double snr_db = 10.0;
    double eta_max_db = 0.25;
    TripleKind kind = TripleKind::EIG_DU;
    Index max_support = -1;  // optional cap forwarded to OMP
};

struct DesignDiagnostics {
    double xi_m = 0.0;
    double delta_eq = 0.0;
    double achieved_xi_e = 0.0;
    double achieved_eta_db = 0.0;
    double active_percent = 0.0;
    StopReason stop_reason = StopReason::BUDGET_MET;
};

struct DesignResult {
    SparseFilter filter;
    DesignDiagnostics diagnostics;
};

/// Dense Wiener solution w_opt = R_yy^{-1} r_delta via Cholesky solve.
CVec mmse_filter(const CorrelationSet& corr);

/// delta_eq = xi_m (10^(eta_max/10) - 1).
double delta_eq_from_eta_max(double eta_max_db, double xi_m);

/// eta = 10 log10(1 + xi_e(w) / xi_m), in dB.
double performance_loss_db(const CVec& w, const CorrelationSet& corr);

/// Full pipeline: correlations, factorization for the requested kind,
/// triple, budget from eta_max, OMP.
DesignResult design_sparse(const DesignSpec& spec, const Cir& cir);

/// As design_sparse but reuses precomputed correlations.
DesignResult design_sparse(const DesignSpec& spec, const CorrelationSet& corr);

/// Keep the k largest-magnitude taps of w_opt unchanged, zero the rest
/// (no refit); ties by lowest index.
SparseFilter significant_taps(const CVec& w_opt, Index k);

/// Ablation variant: refit the retained support by restricted least squares
/// on the CHOL_LH triple.
SparseFilter significant_taps_refit(const CVec& w_opt, Index k,
                                    const CorrelationSet& corr);

}  // namespace sparseq
