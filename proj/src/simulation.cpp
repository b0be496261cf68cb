#include "sparseq/simulation.hpp"

#include <stdexcept>

#include "sparseq/rng.hpp"

namespace sparseq {

std::string to_string(Constellation c) {
    return c == Constellation::QPSK ? "QPSK" : "QAM16";
}

Constellation constellation_from_string(const std::string& name) {
    if (name == "QPSK") return Constellation::QPSK;
    if (name == "QAM16") return Constellation::QAM16;
    throw std::invalid_argument("unknown constellation: " + name);
}

namespace {

CVec make_points(Constellation c) {
    if (c == Constellation::QPSK) {
        const double s = 1.0 / std::sqrt(2.0);
        CVec points(4);
        // Gray: one bit per rail, index = (bI << 1) | bQ
        points[0] = Complex(-s, -s);
        points[1] = Complex(-s, s);
        points[2] = Complex(s, -s);
        points[3] = Complex(s, s);
        return points;
    }
    // 16-QAM: Gray-coded 4-PAM per rail, average energy 10 before scaling
    const double scale = 1.0 / std::sqrt(10.0);
    const double levels[4] = {-3.0, -1.0, 1.0, 3.0};  // Gray order 00,01,11,10
    CVec points(16);
    for (int i = 0; i < 4; ++i)
        for (int q = 0; q < 4; ++q)
            points[i * 4 + q] = scale * Complex(levels[i], levels[q]);
    return points;
}

}  // namespace

const CVec& constellation_points(Constellation c) {
    static const CVec qpsk = make_points(Constellation::QPSK);
    static const CVec qam16 = make_points(Constellation::QAM16);
    return c == Constellation::QPSK ? qpsk : qam16;
}

CVec qam_modulate(const std::vector<int>& indices, Constellation c) {
    const CVec& points = constellation_points(c);
    CVec symbols(static_cast<Index>(indices.size()));
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] < 0 || indices[k] >= points.size())
            throw std::invalid_argument("qam_modulate: index out of range");
        symbols[static_cast<Index>(k)] = points[indices[k]];
    }
    return symbols;
}

int slice(Complex symbol, Constellation c) {
    const CVec& points = constellation_points(c);
    int best = 0;
    double best_dist = std::norm(symbol - points[0]);
    for (int i = 1; i < points.size(); ++i) {
        const double dist = std::norm(symbol - points[i]);
        if (dist < best_dist) {
            best_dist = dist;
            best = i;
        }
    }
    return best;
}

SerCurve run_ser(const SimConfig& config, const Cir& cir,
                 const std::vector<LabeledFilter>& filters) {
    const Index n_f = config.n_f;
    const int v = cir.memory;
    if (config.symbols_per_trial <= n_f + v)
        throw std::invalid_argument("run_ser: symbols_per_trial must exceed N_f + v");
    if (config.delta < 0 || config.delta > n_f + v - 1)
        throw std::invalid_argument("run_ser: delta out of range");
    for (const auto& f : filters)
        if (f.taps.size() != n_f)
            throw std::invalid_argument("run_ser: filter length mismatch");

    const CVec& points = constellation_points(config.constellation);
    const int m = static_cast<int>(points.size());
    const int n_sym = config.symbols_per_trial;

    SerCurve curve;
    for (std::size_t p = 0; p < config.snr_db_grid.size(); ++p) {
        const double snr = db_to_linear(config.snr_db_grid[p]);
        std::vector<SerPoint> per_filter(filters.size());
        for (std::size_t f = 0; f < filters.size(); ++f) {
            per_filter[f].snr_db = config.snr_db_grid[p];
            per_filter[f].label = filters[f].label;
        }

        for (int trial = 0; trial < config.trials; ++trial) {
            Rng rng(config.seed, (static_cast<std::uint64_t>(p) << 32) |
                                     static_cast<std::uint64_t>(trial));
            std::vector<int> tx(n_sym);
            for (int k = 0; k < n_sym; ++k) tx[k] = static_cast<int>(rng.below(m));

            // y_k = sum_l h_l x_{k-l} + n_k, x before time 0 treated as zero
            CVec y(n_sym);
            for (int k = 0; k < n_sym; ++k) {
                Complex acc = rng.complex_gaussian(1.0 / snr);
                for (int l = 0; l <= v && l <= k; ++l)
                    acc += cir.taps[l] * points[tx[k - l]];
                y[k] = acc;
            }

            // first k with a full transmit history in the window
            const int k0 = static_cast<int>(n_f) + v - 1;
            for (std::size_t f = 0; f < filters.size(); ++f) {
                const CVec& w = filters[f].taps;
                for (int k = k0; k < n_sym; ++k) {
                    Complex estimate = 0.0;
                    for (Index i = 0; i < n_f; ++i)
                        estimate += std::conj(w[i]) * y[k - i];
                    if (slice(estimate, config.constellation) != tx[k - config.delta])
                        ++per_filter[f].errors;
                    ++per_filter[f].symbols;
                }
            }
        }
        for (auto& point : per_filter) curve.points.push_back(std::move(point));
    }
    return curve;
}

}  // namespace sparseq
