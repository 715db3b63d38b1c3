// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fr3kit/array.hpp"

namespace fr3 {

/// Azimuth power profile of one propagation link on a uniform, ascending
/// angle grid over [-90, 90] degrees.
struct PowerAngularSpectrum {
    std::string link_id;
    std::vector<double> angles_deg;
    std::vector<double> power;  // linear, >= 0

    double grid_step_deg() const;
    double total_power() const;  // sum(power) * grid step
    void validate() const;       // throws ConfigError
};

/// Beam-filtered power per steering angle for one band's array.
struct BeamformedPas {
    std::string band_label;
    std::vector<double> steering_deg;
    std::vector<double> power;
    ArrayGeometry source_geometry;
};

/// Probability masses over a steering grid.
struct AngularDistribution {
    std::vector<double> angles_deg;
    std::vector<double> mass;
};

struct SimilarityResult {
    std::string link_id;
    double psp_percent = 0.0;  // in [0, 100]
    double r_db = 0.0;         // <= 0, floored at -100 dB
    int k = 1;
};

struct LinkEnsemble {
    std::string band_pair;  // e.g. "FR1-FR3"
    std::vector<SimilarityResult> results;
};

/// Uniform inclusive grid lo, lo+step, ..., hi.
std::vector<double> uniform_grid(double lo_deg, double hi_deg, double step_deg);

/// Steered-gain lookup table gains[s][a] for repeated beamforming against a
/// fixed geometry and fixed grids.
std::vector<std::vector<double>> gain_table(const ArrayGeometry& geometry,
                                            const std::vector<double>& steering_deg,
                                            const std::vector<double>& arrival_deg);

/// B(phi) = sum_theta pas(theta) * gain(phi, theta) * dtheta.
BeamformedPas beamform(const PowerAngularSpectrum& pas, const ArrayGeometry& geometry,
                       const std::vector<double>& steering_deg);

/// Same, against a precomputed gain table (table grids must match).
BeamformedPas beamform_with(const std::vector<std::vector<double>>& gains,
                            const PowerAngularSpectrum& pas, const ArrayGeometry& geometry,
                            const std::vector<double>& steering_deg);

/// Scales a beamformed PAS to unit total mass.
AngularDistribution normalize(const BeamformedPas& bpas);

/// 100 * (1 - TV) where TV is the total variation distance after bringing
/// both distributions onto the coarser of the two grids by nearest-angle
/// accumulation.
double psp_percent(const AngularDistribution& low, const AngularDistribution& high);

/// The k strongest steering angles; ties resolve toward broadside, then
/// toward negative angles.
std::vector<double> top_k_directions(const BeamformedPas& bpas, int k);

/// 10*log10 of high-band power collected at the low-band directions versus
/// the high band's own top-k directions; <= 0 by construction, floored at
/// -100 dB.
double r_ratio_db(const BeamformedPas& bpas_high, const std::vector<double>& dirs_low,
                  const std::vector<double>& dirs_high);

/// Right-continuous empirical CDF with duplicate values merged.
std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> values);

/// One Laplacian-shaped angular cluster.
struct ClusterSpec {
    double center_deg = 0.0;
    double spread_deg = 5.0;  // angular spread (standard deviation)
    double power_db = 0.0;
};

/// Deterministic synthetic PAS: the sum of Laplacian clusters sampled on the
/// grid, with per-cluster center jitter drawn from the seeded generator.
PowerAngularSpectrum synth_pas(uint64_t seed, const std::vector<ClusterSpec>& clusters,
                               double grid_step_deg = 1.0, double jitter_deg = 0.0,
                               const std::string& link_id = "link");

/// Parameters of one band's beam-scan array in a multi-band comparison.
struct PasBand {
    std::string label;
    double frequency_hz = 0.0;
    int elements = 1;  // ULA element count, half-wavelength pitch
};

struct PasStudy {
    std::vector<PasBand> bands;
    double steering_step_deg = 1.0;
    int k = 1;
};

/// Randomized multi-cluster link generator for ensemble studies.
struct SynthEnsembleSpec {
    int links = 100;
    double grid_step_deg = 1.0;
    int clusters_min = 1;
    int clusters_max = 4;
    double center_range_deg = 60.0;
    double spread_min_deg = 4.0;
    double spread_max_deg = 12.0;
    double power_min_db = -10.0;
    double power_max_db = 0.0;
    double jitter_deg = 2.0;
};

std::vector<PowerAngularSpectrum> synth_ensemble(uint64_t seed, const SynthEnsembleSpec& spec);

/// Beamforms every link through every band's array and evaluates PSP and R
/// for each band pair, lower frequency first. Results are ordered by link_id.
std::vector<LinkEnsemble> evaluate_band_pairs(const std::vector<PowerAngularSpectrum>& links,
                                              const PasStudy& study);

}  // namespace fr3
