#include "sparseq/sparse_solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sparseq {

CVec SparseFilter::densify() const {
    CVec dense = CVec::Zero(n_f);
    for (std::size_t i = 0; i < support.size(); ++i)
        dense[support[i]] = coefficients[static_cast<Index>(i)];
    return dense;
}

std::string to_string(StopReason reason) {
    switch (reason) {
        case StopReason::BUDGET_MET: return "BUDGET_MET";
        case StopReason::SUPPORT_CAP: return "SUPPORT_CAP";
        case StopReason::STAGNATION: return "STAGNATION";
    }
    throw std::logic_error("to_string: unknown StopReason");
}

namespace {

SparseFilter make_filter(Index n_f, const std::vector<Index>& support,
                         const CVec& coeffs) {
    // keep support sorted with coefficients aligned
    std::vector<Index> order(support.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Index>(i);
    std::sort(order.begin(), order.end(),
              [&](Index a, Index b) { return support[a] < support[b]; });
    SparseFilter filter;
    filter.n_f = n_f;
    filter.support.reserve(support.size());
    filter.coefficients.resize(static_cast<Index>(support.size()));
    for (std::size_t i = 0; i < order.size(); ++i) {
        filter.support.push_back(support[order[i]]);
        filter.coefficients[static_cast<Index>(i)] = coeffs[order[i]];
    }
    return filter;
}

CMat columns(const CMat& phi, const std::vector<Index>& support) {
    CMat sub(phi.rows(), static_cast<Index>(support.size()));
    for (std::size_t i = 0; i < support.size(); ++i)
        sub.col(static_cast<Index>(i)) = phi.col(support[i]);
    return sub;
}

}  // namespace

OmpResult omp(const DictionaryTriple& triple, const OmpConfig& config) {
    const Index n_f = triple.phi.cols();
    if (config.delta_eq < 0.0) throw std::invalid_argument("omp: delta_eq must be >= 0");
    const Index max_support =
        config.max_support < 0 ? n_f : std::min(config.max_support, n_f);
    if (max_support < 1) throw std::invalid_argument("omp: max_support must be >= 1");

    OmpResult result;
    result.invalid_triple_used = !triple.valid;

    const RVec atom_norms = triple.phi.colwise().norm();

    std::vector<Index> support;
    CVec coeffs(0);
    CVec residual = triple.b;
    double pre = triple.apply_a(-triple.b).squaredNorm();
    std::vector<bool> in_support(n_f, false);

    while (true) {
        if (pre <= config.delta_eq) {
            result.stop_reason = StopReason::BUDGET_MET;
            break;
        }
        if (static_cast<Index>(support.size()) >= max_support) {
            result.stop_reason = StopReason::SUPPORT_CAP;
            break;
        }

        // select the atom most correlated with the residual, ties to lowest index
        const CVec correlation = triple.phi.adjoint() * residual;
        Index best = -1;
        double best_score = -1.0;
        for (Index i = 0; i < n_f; ++i) {
            if (in_support[i] || atom_norms[i] == 0.0) continue;
            const double score = std::abs(correlation[i]) / atom_norms[i];
            if (score > best_score) {
                best_score = score;
                best = i;
            }
        }
        if (best < 0) {
            result.stop_reason = StopReason::STAGNATION;
            break;
        }
        support.push_back(best);
        in_support[best] = true;

        const CMat phi_s = columns(triple.phi, support);
        Eigen::ColPivHouseholderQR<CMat> qr(phi_s);
        coeffs = qr.solve(triple.b);
        residual = triple.b - phi_s * coeffs;

        const double new_pre = triple.apply_a(-residual).squaredNorm();
        ++result.iterations;
        if (pre - new_pre < config.min_pre_decrease && new_pre > config.delta_eq) {
            pre = new_pre;
            result.stop_reason = StopReason::STAGNATION;
            break;
        }
        pre = new_pre;
    }

    result.filter = make_filter(n_f, support, coeffs);
    result.pre = pre;
    return result;
}

SparseFilter minimal_support_oracle(const DictionaryTriple& triple, double delta_eq,
                                    Index max_k) {
    const Index n_f = triple.phi.cols();
    if (n_f > 16)
        throw std::invalid_argument("minimal_support_oracle: N_f must be <= 16");
    max_k = std::min(max_k, n_f);

    const CMat a_phi = triple.dense_a() * triple.phi;
    const CVec a_b = triple.apply_a(triple.b);

    // k = 0: the zero filter
    if (a_b.squaredNorm() <= delta_eq)
        return SparseFilter{n_f, {}, CVec(0)};

    std::vector<Index> support;
    for (Index k = 1; k <= max_k; ++k) {
        support.assign(static_cast<std::size_t>(k), 0);
        for (Index i = 0; i < k; ++i) support[i] = i;
        while (true) {
            const CMat m = columns(a_phi, support);
            Eigen::ColPivHouseholderQR<CMat> qr(m);
            const CVec coeffs = qr.solve(a_b);
            if ((a_b - m * coeffs).squaredNorm() <= delta_eq)
                return make_filter(n_f, support, coeffs);

            // next lexicographic combination
            Index i = k - 1;
            while (i >= 0 && support[i] == n_f - k + i) --i;
            if (i < 0) break;
            ++support[i];
            for (Index j = i + 1; j < k; ++j) support[j] = support[j - 1] + 1;
        }
    }
    throw std::runtime_error("minimal_support_oracle: no feasible support up to max_k");
}

}  // namespace sparseq
