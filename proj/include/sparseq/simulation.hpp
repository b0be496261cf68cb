#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparseq/channel.hpp"
#include "sparseq/types.hpp"

namespace sparseq {

enum class Constellation { QPSK, QAM16 };
std::string to_string(Constellation c);
Constellation constellation_from_string(const std::string& name);

/// Gray-mapped square constellation points, unit average energy.
const CVec& constellation_points(Constellation c);

CVec qam_modulate(const std::vector<int>& indices, Constellation c);

/// Nearest-point detection; exact midpoint ties go to the lowest index.
int slice(Complex symbol, Constellation c);

struct SimConfig {
    Constellation constellation = Constellation::QAM16;
    std::vector<double> snr_db_grid;
    int symbols_per_trial = 10000;
    int trials = 1;
    std::uint64_t seed = 1;
    Index delta = 20;
    Index n_f = 35;
};

struct LabeledFilter {
    std::string label;
    CVec taps;  // dense, length N_f
};

struct SerPoint {
    double snr_db = 0.0;
    std::string label;
    std::uint64_t errors = 0;
    std::uint64_t symbols = 0;

    double ser() const {
        return static_cast<double>(errors) / static_cast<double>(symbols);
    }
    double standard_error() const {
        const double p = ser();
        return std::sqrt(p * (1.0 - p) / static_cast<double>(symbols));
    }
};

struct SerCurve {
    std::vector<SerPoint> points;
};

/// Monte Carlo link: symbols through the FIR channel with complex AWGN of
/// total variance 1/snr, equalized by each filter, sliced and compared with
/// the delayed transmitted symbol. Edge symbols without a full window are
/// excluded. Noise/symbol streams are derived per (seed, trial).
SerCurve run_ser(const SimConfig& config, const Cir& cir,
                 const std::vector<LabeledFilter>& filters);

}  // namespace sparseq
