#pragma once

#include <string>
#include <vector>

#include "sparseq/dictionaries.hpp"
#include "sparseq/types.hpp"

namespace sparseq {

/// Sparse equalizer: support indices (strictly increasing) with aligned
/// complex coefficients.
struct SparseFilter {
    Index n_f = 0;
    std::vector<Index> support;
    CVec coefficients;

    CVec densify() const;
    Index active_taps() const { return static_cast<Index>(support.size()); }
};

enum class StopReason { BUDGET_MET, SUPPORT_CAP, STAGNATION };
std::string to_string(StopReason reason);

struct OmpConfig {
    double delta_eq = 0.0;               // PRE budget
    Index max_support = -1;              // -1 means N_f
    double min_pre_decrease = 1e-12;     // stagnation guard
};

struct OmpResult {
    SparseFilter filter;
    StopReason stop_reason = StopReason::BUDGET_MET;
    double pre = 0.0;          // achieved ||A(Phi w - b)||^2
    int iterations = 0;
    bool invalid_triple_used = false;
};

/// OMP over the triple's dictionary. Atom selection correlates the plain
/// residual b - Phi_S w_S against norm-scaled atoms (ties to the lowest
/// index); the restricted least-squares refit is on Phi_S; stopping uses
/// the projected residual ||A(Phi_S w_S - b)||^2 against delta_eq.
OmpResult omp(const DictionaryTriple& triple, const OmpConfig& config);

/// Exhaustive minimal-support search for small instances (N_f <= 16).
/// For each candidate support the coefficients minimize the PRE directly;
/// returns the smallest feasible support, ties by lexicographic order.
SparseFilter minimal_support_oracle(const DictionaryTriple& triple, double delta_eq,
                                    Index max_k);

}  // namespace sparseq
