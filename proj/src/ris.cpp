// SPDX-License-Identifier: Apache-2.0
#include "fr3kit/ris.hpp"

#include <cmath>

#include "fr3kit/errors.hpp"
#include "fr3kit/units.hpp"

namespace fr3 {

double distance_m(const Vec3& a, const Vec3& b) {
    return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                     (a.z - b.z) * (a.z - b.z));
}

void RisScenario::validate() const {
    if (!(side_m > 0.0)) throw ConfigError("ris scenario: side must be > 0");
    if (!(frequency_hz > 0.0)) throw ConfigError("ris scenario: frequency_hz must be > 0");
    if (!(distance_m(tx_pos, ris_pos) > 0.0) || !(distance_m(ris_pos, rx_pos) > 0.0))
        throw ConfigError("ris scenario: surface must not coincide with an endpoint");
    if (!(pt_min_dbm <= pt_max_dbm) || !(pt_step_db > 0.0))
        throw ConfigError("ris scenario: bad transmit power range");
    if (phase_bits < 1) throw ConfigError("ris scenario: phase_bits must be >= 1");
    if (n_users < 0 || !(p_user_w >= 0.0) || !(p_phase_shifter_w >= 0.0))
        throw ConfigError("ris scenario: power terms must be >= 0");
    if (!(noise_density_w_per_hz > 0.0) || !(ref_bandwidth_hz > 0.0))
        throw ConfigError("ris scenario: noise density and bandwidth must be > 0");
    if (!(g_tx > 0.0) || !(g_rx > 0.0)) throw ConfigError("ris scenario: endpoint gains must be > 0");
}

int element_grid(double side_m, double frequency_hz) {
    if (!(side_m > 0.0)) throw DomainError("element grid: side must be positive");
    if (!(frequency_hz > 0.0)) throw DomainError("element grid: frequency must be positive");
    const double lambda = wavelength_m(frequency_hz);
    double ratio = side_m / lambda;
    const double up = std::ceil(ratio);
    if (up - ratio <= 5e-3 * up) ratio = up;  // same integer-snap as the array module
    const int per_side = static_cast<int>(std::floor(ratio));
    if (per_side < 1) throw ApertureTooSmallError("surface smaller than one wavelength pitch");
    return per_side;
}

double quantization_efficiency(int bits) {
    if (bits < 1) throw DomainError("quantization efficiency: bits must be >= 1");
    const double s = sinc(kPi / std::pow(2.0, bits));
    return s * s;
}

double cascaded_snr(const RisScenario& scenario, double pt_dbm) {
    scenario.validate();
    const int per_side = element_grid(scenario.side_m, scenario.frequency_hz);
    const double n_elements = static_cast<double>(per_side) * per_side;

    const double lambda = wavelength_m(scenario.frequency_hz);
    const double d1 = distance_m(scenario.tx_pos, scenario.ris_pos);
    const double d2 = distance_m(scenario.ris_pos, scenario.rx_pos);
    const double seg1 = lambda / (4.0 * kPi * d1);
    const double seg2 = lambda / (4.0 * kPi * d2);
    const double eta = quantization_efficiency(scenario.phase_bits);

    const double signal = dbm_to_watts(pt_dbm) * scenario.g_tx * scenario.g_rx *
                          n_elements * n_elements * seg1 * seg1 * seg2 * seg2 * eta;
    return signal / (scenario.noise_density_w_per_hz * scenario.ref_bandwidth_hz);
}

double spectral_efficiency(const RisScenario& scenario, double pt_dbm) {
    return std::log2(1.0 + cascaded_snr(scenario, pt_dbm));
}

double energy_efficiency(const RisScenario& scenario, double pt_dbm) {
    const int per_side = element_grid(scenario.side_m, scenario.frequency_hz);
    const double p_total = dbm_to_watts(pt_dbm) + scenario.n_users * scenario.p_user_w +
                           static_cast<double>(per_side) * per_side * scenario.p_phase_shifter_w;
    return scenario.ref_bandwidth_hz * spectral_efficiency(scenario, pt_dbm) / p_total;
}

std::vector<RisResult> sweep(const RisScenario& scenario) {
    scenario.validate();
    const int per_side = element_grid(scenario.side_m, scenario.frequency_hz);
    const int n_elements = per_side * per_side;

    std::vector<RisResult> results;
    for (double pt = scenario.pt_min_dbm; pt <= scenario.pt_max_dbm + 1e-9 * scenario.pt_step_db;
         pt += scenario.pt_step_db) {
        RisResult r;
        r.pt_dbm = std::min(pt, scenario.pt_max_dbm);
        r.n_elements = n_elements;
        const double snr = cascaded_snr(scenario, r.pt_dbm);
        r.snr_db = linear_to_db(snr);
        r.se_bps_hz = std::log2(1.0 + snr);
        r.p_total_w = dbm_to_watts(r.pt_dbm) + scenario.n_users * scenario.p_user_w +
                      n_elements * scenario.p_phase_shifter_w;
        r.ee_bit_per_joule = scenario.ref_bandwidth_hz * r.se_bps_hz / r.p_total_w;
        results.push_back(r);
    }
    return results;
}

double mean_se(const std::vector<RisResult>& results) {
    if (results.empty()) throw DomainError("mean SE of an empty sweep");
    double acc = 0.0;
    for (const auto& r : results) acc += r.se_bps_hz;
    return acc / static_cast<double>(results.size());
}

std::vector<RisGap> mean_se_gaps(const RisScenario& primary,
                                 const std::vector<std::pair<std::string, RisScenario>>& references) {
    const auto base = sweep(primary);
    std::vector<RisGap> gaps;
    for (const auto& [label, ref] : references) {
        if (ref.pt_min_dbm != primary.pt_min_dbm || ref.pt_max_dbm != primary.pt_max_dbm ||
            ref.pt_step_db != primary.pt_step_db)
            throw ConfigError("se gap: reference " + label + " uses a different power grid");
        const auto other = sweep(ref);
        double acc = 0.0;
        for (size_t i = 0; i < base.size(); ++i) acc += base[i].se_bps_hz - other[i].se_bps_hz;
        gaps.push_back({label, acc / static_cast<double>(base.size())});
    }
    return gaps;
}

}  // namespace fr3
