#include <doctest.h>

#include "sparseq/equalizer.hpp"
#include "sparseq/rng.hpp"

using namespace sparseq;

TEST_CASE("scalar Wiener solution on the memoryless channel") {
    Cir cir{CVec::Ones(1), 0};
    const CorrelationSet corr = build_correlations(cir, 5, 1.0, 2);
    const CVec w_opt = mmse_filter(corr);
    for (Index i = 0; i < 5; ++i)
        CHECK(std::abs(w_opt[i] - (i == 2 ? Complex(0.5, 0) : Complex(0, 0))) < 1e-12);

    const CorrelationSet high_snr = build_correlations(cir, 5, 1e12, 2);
    CHECK(std::abs(mmse_filter(high_snr)[2] - Complex(1.0, 0)) < 1e-6);
}

TEST_CASE("the Wiener solution attains the minimum mse") {
    const Cir cir = generate_random_cir(4, 19);
    const CorrelationSet corr = build_correlations(cir, 16, 3.0, 9);
    const CVec w_opt = mmse_filter(corr);
    CHECK(excess_mse(w_opt, corr) < 1e-10);
    const double direct = corr.eps_x - 2.0 * corr.r_delta.dot(w_opt).real() +
                          w_opt.dot(corr.r_yy * w_opt).real();
    CHECK(direct == doctest::Approx(corr.xi_m).epsilon(1e-10));
}

TEST_CASE("budget calibration from eta_max") {
    CHECK(delta_eq_from_eta_max(0.0, 0.3) == 0.0);
    CHECK(delta_eq_from_eta_max(3.0103, 0.7) == doctest::Approx(0.7).epsilon(1e-4));
    CHECK(delta_eq_from_eta_max(0.25, 0.1) == doctest::Approx(0.005925).epsilon(1e-3));
    CHECK_THROWS_AS(delta_eq_from_eta_max(-1.0, 0.1), std::invalid_argument);
}

TEST_CASE("performance loss in dB") {
    const Cir cir = generate_random_cir(3, 44);
    const CorrelationSet corr = build_correlations(cir, 12, 2.0, 7);
    const CVec w_opt = mmse_filter(corr);
    CHECK(performance_loss_db(w_opt, corr) == doctest::Approx(0.0).epsilon(1e-8));

    // scale a perturbation so that xi_e equals xi_m exactly
    Rng rng(3);
    CVec direction(12);
    for (Index i = 0; i < 12; ++i) direction[i] = rng.complex_gaussian();
    direction *= std::sqrt(corr.xi_m / direction.dot(corr.r_yy * direction).real());
    CHECK(performance_loss_db(w_opt + direction, corr) ==
          doctest::Approx(3.0103).epsilon(1e-4));
}

TEST_CASE("budget-met designs respect the loss budget") {
    for (int instance = 0; instance < 8; ++instance) {
        const Cir cir = generate_random_cir(5, 70, instance);
        DesignSpec spec;
        spec.eta_max_db = 0.25;
        spec.snr_db = 10.0;
        const DesignResult result = design_sparse(spec, cir);
        if (result.diagnostics.stop_reason == StopReason::BUDGET_MET)
            CHECK(result.diagnostics.achieved_eta_db <= spec.eta_max_db + 1e-6);
    }
}

TEST_CASE("extreme budgets give extreme supports") {
    const Cir cir = generate_random_cir(5, 12);
    DesignSpec loose;
    loose.eta_max_db = 30.0;
    loose.snr_db = 10.0;
    CHECK(design_sparse(loose, cir).filter.active_taps() <= 1);

    DesignSpec tight;
    tight.eta_max_db = 0.0;
    tight.snr_db = 10.0;
    const DesignResult dense = design_sparse(tight, cir);
    // a zero budget needs (numerically almost) the dense Wiener solution
    CHECK(dense.filter.active_taps() >= 34);
}

TEST_CASE("active taps are non-increasing in eta_max on a fixed channel") {
    const Cir cir = generate_random_cir(5, 26);
    Index previous = 36;
    for (double eta : {0.05, 0.1, 0.25, 0.5, 1.0, 2.0}) {
        DesignSpec spec;
        spec.eta_max_db = eta;
        spec.snr_db = 10.0;
        const Index active = design_sparse(spec, cir).filter.active_taps();
        CHECK(active <= previous);
        previous = active;
    }
}

TEST_CASE("significant taps keeps the largest magnitudes in place") {
    CVec w(3);
    w << Complex(3, 0), Complex(0.1, 0), Complex(0, -2);
    const SparseFilter kept = significant_taps(w, 2);
    REQUIRE(kept.support == std::vector<Index>{0, 2});
    CHECK(kept.coefficients[0] == w[0]);
    CHECK(kept.coefficients[1] == w[2]);

    const SparseFilter all = significant_taps(w, 3);
    CHECK((all.densify() - w).norm() == 0.0);
    CHECK_THROWS_AS(significant_taps(w, 0), std::invalid_argument);
    CHECK_THROWS_AS(significant_taps(w, 4), std::invalid_argument);
}

TEST_CASE("refit variant never increases the excess error") {
    for (int instance = 0; instance < 5; ++instance) {
        const Cir cir = generate_random_cir(5, 92, instance);
        const CorrelationSet corr = build_correlations(cir, 35, db_to_linear(10.0), 20);
        const CVec w_opt = mmse_filter(corr);
        const SparseFilter plain = significant_taps(w_opt, 9);
        const SparseFilter refit = significant_taps_refit(w_opt, 9, corr);
        CHECK(excess_mse(refit.densify(), corr) <=
              excess_mse(plain.densify(), corr) + 1e-12);
    }
}

TEST_CASE("omp designs beat the significant-taps baseline in aggregate") {
    double omp_total = 0.0;
    double baseline_total = 0.0;
    for (int instance = 0; instance < 200; ++instance) {
        const Cir cir = generate_random_cir(5, 1234, instance);
        const CorrelationSet corr = build_correlations(cir, 35, db_to_linear(10.0), 20);
        DesignSpec spec;
        spec.snr_db = 10.0;
        spec.eta_max_db = 0.0;
        spec.max_support = 9;
        spec.kind = TripleKind::EIG_DU;
        const DesignResult designed = design_sparse(spec, corr);
        omp_total += excess_mse(designed.filter.densify(), corr);
        baseline_total += excess_mse(significant_taps(mmse_filter(corr), 9).densify(), corr);
    }
    CHECK(omp_total / 200.0 <= baseline_total / 200.0);
}
