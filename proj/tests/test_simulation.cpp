#include <doctest.h>

#include <cmath>

#include "sparseq/correlations.hpp"
#include "sparseq/equalizer.hpp"
#include "sparseq/simulation.hpp"

using namespace sparseq;

namespace {

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

}  // namespace

TEST_CASE("constellations have unit average energy") {
    for (Constellation c : {Constellation::QPSK, Constellation::QAM16}) {
        const CVec& points = constellation_points(c);
        CHECK(points.squaredNorm() / points.size() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("qpsk points are (+-1 +-i)/sqrt(2)") {
    const CVec& points = constellation_points(Constellation::QPSK);
    REQUIRE(points.size() == 4);
    for (Index i = 0; i < 4; ++i) {
        CHECK(std::abs(std::abs(points[i].real()) - 1.0 / std::sqrt(2.0)) < 1e-15);
        CHECK(std::abs(std::abs(points[i].imag()) - 1.0 / std::sqrt(2.0)) < 1e-15);
    }
}

TEST_CASE("16-qam minimum distance is 2/sqrt(10)") {
    const CVec& points = constellation_points(Constellation::QAM16);
    double min_dist = 1e9;
    for (Index i = 0; i < 16; ++i)
        for (Index j = i + 1; j < 16; ++j)
            min_dist = std::min(min_dist, std::abs(points[i] - points[j]));
    CHECK(min_dist == doctest::Approx(2.0 / std::sqrt(10.0)).epsilon(1e-12));
}

TEST_CASE("modulate maps indices to points and rejects bad indices") {
    const CVec symbols = qam_modulate({0, 5, 15}, Constellation::QAM16);
    const CVec& points = constellation_points(Constellation::QAM16);
    CHECK(symbols[0] == points[0]);
    CHECK(symbols[1] == points[5]);
    CHECK(symbols[2] == points[15]);
    CHECK_THROWS_AS(qam_modulate({16}, Constellation::QAM16), std::invalid_argument);
}

TEST_CASE("slicing behavior") {
    const CVec& points = constellation_points(Constellation::QAM16);
    for (int i = 0; i < 16; ++i) {
        CHECK(slice(points[i], Constellation::QAM16) == i);
        CHECK(slice(0.9 * points[i], Constellation::QAM16) ==
              slice(points[i] * 1.0, Constellation::QAM16));
    }
    // midpoint between the first two QPSK points ties to the lowest index
    const CVec& qpsk = constellation_points(Constellation::QPSK);
    CHECK(slice(0.5 * (qpsk[0] + qpsk[1]), Constellation::QPSK) == 0);
}

TEST_CASE("noiseless identity link has zero errors") {
    Cir cir{CVec::Ones(1), 0};
    SimConfig config;
    config.constellation = Constellation::QAM16;
    config.snr_db_grid = {60.0};
    config.symbols_per_trial = 20000;
    config.n_f = 5;
    config.delta = 2;
    CVec w = CVec::Zero(5);
    w[2] = 1.0;
    const SerCurve curve = run_ser(config, cir, {{"id", w}});
    CHECK(curve.points[0].errors == 0);
    CHECK(curve.points[0].symbols > 0);
}

TEST_CASE("the zero filter errs at rate (M-1)/M") {
    Cir cir{CVec::Ones(1), 0};
    SimConfig config;
    config.snr_db_grid = {10.0};
    config.symbols_per_trial = 50000;
    config.n_f = 5;
    config.delta = 2;
    const SerCurve curve = run_ser(config, cir, {{"zero", CVec::Zero(5)}});
    const double expected = 15.0 / 16.0;
    CHECK(std::abs(curve.points[0].ser() - expected) <
          3.0 * std::sqrt(expected * (1 - expected) / curve.points[0].symbols));
}

TEST_CASE("qpsk over awgn matches the q-function oracle") {
    Cir cir{CVec::Ones(1), 0};
    for (double snr_db : {0.0, 5.0, 10.0}) {
        const double snr = db_to_linear(snr_db);
        const CorrelationSet corr = build_correlations(cir, 5, snr, 2);
        SimConfig config;
        config.constellation = Constellation::QPSK;
        config.snr_db_grid = {snr_db};
        config.symbols_per_trial = 100000;
        config.n_f = 5;
        config.delta = 2;
        config.seed = 77;
        const SerCurve curve = run_ser(config, cir, {{"wiener", mmse_filter(corr)}});
        const double q = q_function(std::sqrt(snr));
        const double expected = 1.0 - (1.0 - q) * (1.0 - q);
        CHECK(std::abs(curve.points[0].ser() - expected) <=
              3.0 * curve.points[0].standard_error() + 1e-9);
    }
}

TEST_CASE("identical config and seed reproduce the curve bit for bit") {
    const Cir cir = generate_random_cir(3, 8);
    SimConfig config;
    config.snr_db_grid = {8.0, 14.0};
    config.symbols_per_trial = 2000;
    config.trials = 3;
    config.n_f = 9;
    config.delta = 6;
    const CorrelationSet corr = build_correlations(cir, 9, db_to_linear(10.0), 6);
    const CVec w = mmse_filter(corr);
    const SerCurve a = run_ser(config, cir, {{"w", w}});
    const SerCurve b = run_ser(config, cir, {{"w", w}});
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].errors == b.points[i].errors);
        CHECK(a.points[i].symbols == b.points[i].symbols);
    }
}

TEST_CASE("ser is non-increasing in snr for the matched wiener filter") {
    const Cir cir = generate_random_cir(3, 55);
    SimConfig config;
    config.snr_db_grid = {0.0, 5.0, 10.0, 15.0};
    config.symbols_per_trial = 20000;
    config.n_f = 15;
    config.delta = 9;
    // one filter per snr point: redesign and run point by point
    double previous_ser = 1.0;
    double previous_se = 0.0;
    for (double snr_db : config.snr_db_grid) {
        const CorrelationSet corr =
            build_correlations(cir, 15, db_to_linear(snr_db), 9);
        SimConfig point = config;
        point.snr_db_grid = {snr_db};
        const SerCurve curve = run_ser(point, cir, {{"w", mmse_filter(corr)}});
        const double ser = curve.points[0].ser();
        const double se = curve.points[0].standard_error();
        CHECK(ser <= previous_ser + 3.0 * (se + previous_se));
        previous_ser = ser;
        previous_se = se;
    }
}

TEST_CASE("config validation") {
    const Cir cir = generate_random_cir(3, 1);
    SimConfig config;
    config.snr_db_grid = {10.0};
    config.symbols_per_trial = 10;  // too few
    config.n_f = 9;
    config.delta = 6;
    CHECK_THROWS_AS(run_ser(config, cir, {{"w", CVec::Zero(9)}}), std::invalid_argument);
    config.symbols_per_trial = 1000;
    CHECK_THROWS_AS(run_ser(config, cir, {{"w", CVec::Zero(5)}}), std::invalid_argument);
    config.delta = 12;  // > n_f + v - 1
    CHECK_THROWS_AS(run_ser(config, cir, {{"w", CVec::Zero(9)}}), std::invalid_argument);
}
