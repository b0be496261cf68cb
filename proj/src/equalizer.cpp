#include "sparseq/equalizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace sparseq {

CVec mmse_filter(const CorrelationSet& corr) {
    Eigen::LLT<CMat> llt(corr.r_yy);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("mmse_filter: R_yy is not positive definite");
    return llt.solve(corr.r_delta);
}

double delta_eq_from_eta_max(double eta_max_db, double xi_m) {
    if (eta_max_db < 0.0)
        throw std::invalid_argument("delta_eq_from_eta_max: eta_max must be >= 0");
    return xi_m * (db_to_linear(eta_max_db) - 1.0);
}

double performance_loss_db(const CVec& w, const CorrelationSet& corr) {
    if (corr.xi_m <= 0.0)
        throw std::invalid_argument("performance_loss_db: xi_m must be > 0");
    return linear_to_db(1.0 + excess_mse(w, corr) / corr.xi_m);
}

namespace {

Factorization factorize_for(TripleKind kind, const CorrelationSet& corr) {
    switch (kind) {
        case TripleKind::CHOL_LH:
        case TripleKind::CHOL_RYY:
            return cholesky_llh(corr.r_yy);
        case TripleKind::LDL_PH:
            return ldl_unit(corr.r_yy);
        case TripleKind::EIG_DU:
        case TripleKind::EIG_RYY:
        case TripleKind::EIG_UH:
            return eigen_exact(corr.r_yy);
    }
    throw std::logic_error("factorize_for: unknown kind");
}

}  // namespace

DesignResult design_sparse(const DesignSpec& spec, const CorrelationSet& corr) {
    const Factorization factorization = factorize_for(spec.kind, corr);
    const DictionaryTriple triple =
        build_triple(spec.kind, factorization, corr.r_delta, corr.r_yy);

    OmpConfig config;
    config.delta_eq = delta_eq_from_eta_max(spec.eta_max_db, corr.xi_m);
    config.max_support = spec.max_support;
    const OmpResult solved = omp(triple, config);

    DesignResult result;
    result.filter = solved.filter;
    result.diagnostics.xi_m = corr.xi_m;
    result.diagnostics.delta_eq = config.delta_eq;
    result.diagnostics.achieved_xi_e = excess_mse(solved.filter.densify(), corr);
    result.diagnostics.achieved_eta_db =
        linear_to_db(1.0 + result.diagnostics.achieved_xi_e / corr.xi_m);
    result.diagnostics.active_percent =
        100.0 * static_cast<double>(solved.filter.active_taps()) /
        static_cast<double>(corr.n_f);
    result.diagnostics.stop_reason = solved.stop_reason;
    return result;
}

DesignResult design_sparse(const DesignSpec& spec, const Cir& cir) {
    const Index delta =
        spec.delta < 0 ? default_delta(spec.n_f, cir.memory) : spec.delta;
    const CorrelationSet corr =
        build_correlations(cir, spec.n_f, db_to_linear(spec.snr_db), delta);
    return design_sparse(spec, corr);
}

SparseFilter significant_taps(const CVec& w_opt, Index k) {
    const Index n_f = w_opt.size();
    if (k < 1 || k > n_f)
        throw std::invalid_argument("significant_taps: k out of range");

    std::vector<Index> order(n_f);
    for (Index i = 0; i < n_f; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        return std::abs(w_opt[a]) > std::abs(w_opt[b]);
    });
    order.resize(k);
    std::sort(order.begin(), order.end());

    SparseFilter filter;
    filter.n_f = n_f;
    filter.support = order;
    filter.coefficients.resize(k);
    for (Index i = 0; i < k; ++i) filter.coefficients[i] = w_opt[order[i]];
    return filter;
}

SparseFilter significant_taps_refit(const CVec& w_opt, Index k,
                                    const CorrelationSet& corr) {
    SparseFilter kept = significant_taps(w_opt, k);
    // restricted Wiener refit on the retained support
    const Index m = kept.active_taps();
    CMat r_sub(m, m);
    CVec rhs(m);
    for (Index i = 0; i < m; ++i) {
        rhs[i] = corr.r_delta[kept.support[i]];
        for (Index j = 0; j < m; ++j)
            r_sub(i, j) = corr.r_yy(kept.support[i], kept.support[j]);
    }
    kept.coefficients = r_sub.llt().solve(rhs);
    return kept;
}

}  // namespace sparseq
