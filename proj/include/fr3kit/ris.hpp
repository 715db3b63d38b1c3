// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fr3 {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

double distance_m(const Vec3& a, const Vec3& b);

/// RIS-aided single-link case study: a square reflecting surface of fixed
/// side length between a transmitter and a receiver, evaluated over a
/// transmit-power sweep.
struct RisScenario {
    Vec3 tx_pos{0.0, 0.0, 3.0};
    Vec3 ris_pos{2.5, 5.0, 3.0};
    Vec3 rx_pos{5.0, 0.0, 1.5};
    double side_m = 0.20;
    double frequency_hz = 15e9;
    double pt_min_dbm = -10.0;
    double pt_max_dbm = 40.0;
    double pt_step_db = 1.0;
    int phase_bits = 4;
    double p_phase_shifter_w = 4.5e-3;  // per element
    int n_users = 20;
    double p_user_w = 10e-3;  // per user
    double noise_density_w_per_hz = 3.1622776601683794e-20;  // -174 dBm/Hz + 9 dB NF
    double ref_bandwidth_hz = 15e3;
    double g_tx = 1.0;  // linear endpoint gains
    double g_rx = 1.0;

    void validate() const;  // throws ConfigError
};

struct RisResult {
    double pt_dbm = 0.0;
    int n_elements = 0;
    double snr_db = 0.0;
    double se_bps_hz = 0.0;        // log2(1 + snr)
    double ee_bit_per_joule = 0.0; // ref_bandwidth * se / p_total
    double p_total_w = 0.0;
};

/// Elements per side at one-wavelength pitch: floor(side / lambda). A zero
/// count raises ApertureTooSmallError.
int element_grid(double side_m, double frequency_hz);

/// Phase-quantization efficiency sinc^2(pi / 2^bits), in (0, 1].
double quantization_efficiency(int bits);

/// Coherently combined two-segment link: SNR = Pt*gt*gr*N^2 *
/// (lambda/4/pi/d1)^2 * (lambda/4/pi/d2)^2 * eta / (N0 * B). Linear.
double cascaded_snr(const RisScenario& scenario, double pt_dbm);

double spectral_efficiency(const RisScenario& scenario, double pt_dbm);

double energy_efficiency(const RisScenario& scenario, double pt_dbm);

/// One RisResult per transmit-power step, ordered by Pt.
std::vector<RisResult> sweep(const RisScenario& scenario);

double mean_se(const std::vector<RisResult>& results);

struct RisGap {
    std::string reference_label;
    double mean_se_gap_bps_hz = 0.0;  // primary minus reference, sweep mean
};

/// Mean spectral-efficiency gaps of the primary scenario against reference
/// scenarios sharing the same transmit-power grid.
std::vector<RisGap> mean_se_gaps(const RisScenario& primary,
                                 const std::vector<std::pair<std::string, RisScenario>>& references);

}  // namespace fr3
