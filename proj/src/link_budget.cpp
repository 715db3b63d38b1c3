// SPDX-License-Identifier: Apache-2.0
#include "fr3kit/link_budget.hpp"

#include <algorithm>
#include <cmath>

#include "fr3kit/array.hpp"
#include "fr3kit/errors.hpp"
#include "fr3kit/units.hpp"

namespace fr3 {

void LinkScenario::validate() const {
    if (!(height_m > 0.0)) throw ConfigError("link scenario: height_m must be > 0");
    if (!(aperture_side_m > 0.0)) throw ConfigError("link scenario: aperture_side_m must be > 0");
    if (!(f_min_hz > 0.0) || !(f_min_hz < f_max_hz))
        throw ConfigError("link scenario: requires 0 < f_min_hz < f_max_hz");
    if (!(bw_min_hz < bw_max_hz)) throw ConfigError("link scenario: requires bw_min_hz < bw_max_hz");
    if (!(scan_step_hz > 0.0)) throw ConfigError("link scenario: scan_step_hz must be > 0");
}

double fspl_db(double frequency_hz, double distance_m) {
    if (!(frequency_hz > 0.0)) throw DomainError("fspl: frequency must be positive");
    if (!(distance_m > 0.0)) throw DomainError("fspl: distance must be positive");
    return 20.0 * std::log10(4.0 * kPi * distance_m * frequency_hz / kSpeedOfLight);
}

double coverage_radius_m(double height_m, double hpbw_deg) {
    if (!(height_m > 0.0)) throw DomainError("coverage radius: height must be positive");
    if (!(hpbw_deg >= 0.0) || hpbw_deg >= 180.0)
        throw DomainError("coverage radius: beamwidth must be in [0, 180) deg");
    return height_m * std::tan(deg2rad(0.5 * hpbw_deg));
}

double bandwidth_map_hz(double frequency_hz, const LinkScenario& scenario) {
    if (frequency_hz < scenario.f_min_hz || frequency_hz > scenario.f_max_hz)
        throw DomainError("bandwidth map: frequency outside the scan range");
    const double t = (frequency_hz - scenario.f_min_hz) / (scenario.f_max_hz - scenario.f_min_hz);
    return scenario.bw_min_hz + (scenario.bw_max_hz - scenario.bw_min_hz) * t;
}

double shannon_capacity_bps(double bandwidth_hz, double snr_db) {
    if (!(bandwidth_hz >= 0.0)) throw DomainError("capacity: bandwidth must be >= 0");
    return bandwidth_hz * std::log2(1.0 + db_to_linear(snr_db));
}

std::vector<TradeoffPoint> ncc_scan(const LinkScenario& scenario) {
    scenario.validate();

    std::vector<TradeoffPoint> scan;
    for (double f = scenario.f_min_hz; f <= scenario.f_max_hz + 1e-6 * scenario.scan_step_hz;
         f += scenario.scan_step_hz) {
        TradeoffPoint p;
        p.frequency_hz = std::min(f, scenario.f_max_hz);
        p.hpbw_deg = aperture_hpbw_deg(scenario.aperture_side_m, p.frequency_hz);
        p.radius_m = coverage_radius_m(scenario.height_m, p.hpbw_deg);
        p.bandwidth_hz = bandwidth_map_hz(p.frequency_hz, scenario);
        p.capacity_bps = shannon_capacity_bps(p.bandwidth_hz, scenario.snr_db);
        scan.push_back(p);
    }

    double r_lo = scan.front().radius_m, r_hi = r_lo;
    double c_lo = scan.front().capacity_bps, c_hi = c_lo;
    for (const auto& p : scan) {
        r_lo = std::min(r_lo, p.radius_m);
        r_hi = std::max(r_hi, p.radius_m);
        c_lo = std::min(c_lo, p.capacity_bps);
        c_hi = std::max(c_hi, p.capacity_bps);
    }
    const double r_span = r_hi - r_lo;
    const double c_span = c_hi - c_lo;
    for (auto& p : scan) {
        p.cov_norm = r_span > 0.0 ? (p.radius_m - r_lo) / r_span : 0.0;
        p.cap_norm = c_span > 0.0 ? (p.capacity_bps - c_lo) / c_span : 0.0;
        p.n_cc = std::abs(p.cov_norm - p.cap_norm);
    }
    return scan;
}

BalancedBand balanced_band(const std::vector<TradeoffPoint>& scan, double threshold) {
    if (scan.empty()) throw DomainError("balanced band: scan must not be empty");

    // Longest run of points at or below the threshold; first wins on ties.
    int best_begin = -1, best_len = 0;
    int run_begin = -1;
    const int n = static_cast<int>(scan.size());
    for (int i = 0; i <= n; ++i) {
        const bool inside = i < n && scan[i].n_cc <= threshold;
        if (inside && run_begin < 0) run_begin = i;
        if (!inside && run_begin >= 0) {
            if (i - run_begin > best_len) {
                best_begin = run_begin;
                best_len = i - run_begin;
            }
            run_begin = -1;
        }
    }
    if (best_begin < 0) return {};

    const int first = best_begin;
    const int last = best_begin + best_len - 1;
    auto cross = [&](int outside, int inside) {
        const double df = scan[inside].frequency_hz - scan[outside].frequency_hz;
        const double dn = scan[inside].n_cc - scan[outside].n_cc;
        return scan[outside].frequency_hz + (threshold - scan[outside].n_cc) / dn * df;
    };

    BalancedBand band;
    band.empty = false;
    band.f_low_hz = first > 0 ? cross(first - 1, first) : scan.front().frequency_hz;
    band.f_high_hz = last < n - 1 ? cross(last + 1, last) : scan.back().frequency_hz;
    return band;
}

}  // namespace fr3
