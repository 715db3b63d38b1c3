// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace fr3 {

/// Inputs of the coverage-capacity scan: a platform at height H above ground
/// steering a fixed-aperture beam, with channel bandwidth mapped linearly
/// over the scanned frequency range.
struct LinkScenario {
    double height_m = 100.0;
    double aperture_side_m = 0.0856;
    double f_min_hz = 3e9;
    double f_max_hz = 30e9;
    double bw_min_hz = 20e6;
    double bw_max_hz = 200e6;
    double snr_db = 10.0;
    double scan_step_hz = 50e6;

    void validate() const;  // throws ConfigError
};

struct TradeoffPoint {
    double frequency_hz = 0.0;
    double hpbw_deg = 0.0;
    double radius_m = 0.0;
    double bandwidth_hz = 0.0;
    double capacity_bps = 0.0;
    double cov_norm = 0.0;
    double cap_norm = 0.0;
    double n_cc = 0.0;  // |cov_norm - cap_norm|
};

struct BalancedBand {
    bool empty = true;
    double f_low_hz = 0.0;
    double f_high_hz = 0.0;
};

/// Free-space path loss 20*log10(4*pi*d*f/c), dB.
double fspl_db(double frequency_hz, double distance_m);

/// Ground footprint radius H*tan(hpbw/2) of a beam pointed straight down.
double coverage_radius_m(double height_m, double hpbw_deg);

/// Linear bandwidth interpolation over [f_min, f_max].
double bandwidth_map_hz(double frequency_hz, const LinkScenario& scenario);

/// B*log2(1 + 10^(snr/10)), bit/s.
double shannon_capacity_bps(double bandwidth_hz, double snr_db);

/// One TradeoffPoint per scan step, with coverage radius and capacity
/// min-max normalized over the scanned set. HPBW uses the fixed-aperture
/// beamwidth of the uniformly excited aperture at each frequency.
std::vector<TradeoffPoint> ncc_scan(const LinkScenario& scenario);

/// Longest contiguous frequency interval with n_cc <= threshold, endpoints
/// refined by linear interpolation between adjacent scan points. Returns an
/// empty result when no scan point satisfies the threshold.
BalancedBand balanced_band(const std::vector<TradeoffPoint>& scan, double threshold);

}  // namespace fr3
