// SPDX-License-Identifier: Apache-2.0
#include "fr3kit/pas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fr3kit/errors.hpp"
#include "fr3kit/rng.hpp"

namespace fr3 {

double PowerAngularSpectrum::grid_step_deg() const {
    return angles_deg.size() > 1 ? angles_deg[1] - angles_deg[0] : 1.0;
}

double PowerAngularSpectrum::total_power() const {
    return std::accumulate(power.begin(), power.end(), 0.0) * grid_step_deg();
}

void PowerAngularSpectrum::validate() const {
    if (angles_deg.size() < 2 || angles_deg.size() != power.size())
        throw ConfigError("pas " + link_id + ": needs matching angle/power grids of >= 2 points");
    const double step = grid_step_deg();
    if (!(step > 0.0)) throw ConfigError("pas " + link_id + ": angle grid must ascend");
    for (size_t i = 1; i < angles_deg.size(); ++i) {
        if (std::abs(angles_deg[i] - angles_deg[i - 1] - step) > 1e-9 * std::max(1.0, step))
            throw ConfigError("pas " + link_id + ": angle grid must be uniform");
    }
    for (double p : power)
        if (!(p >= 0.0)) throw ConfigError("pas " + link_id + ": power must be >= 0");
}

std::vector<double> uniform_grid(double lo_deg, double hi_deg, double step_deg) {
    if (!(step_deg > 0.0) || !(hi_deg > lo_deg)) throw ConfigError("bad angle grid bounds");
    const int n = static_cast<int>(std::round((hi_deg - lo_deg) / step_deg)) + 1;
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) grid[i] = lo_deg + i * step_deg;
    return grid;
}

std::vector<std::vector<double>> gain_table(const ArrayGeometry& geometry,
                                            const std::vector<double>& steering_deg,
                                            const std::vector<double>& arrival_deg) {
    std::vector<std::vector<double>> gains(steering_deg.size());
    for (size_t s = 0; s < steering_deg.size(); ++s) {
        gains[s].resize(arrival_deg.size());
        for (size_t a = 0; a < arrival_deg.size(); ++a)
            gains[s][a] = array_power_gain(geometry, steering_deg[s], arrival_deg[a]);
    }
    return gains;
}

BeamformedPas beamform(const PowerAngularSpectrum& pas, const ArrayGeometry& geometry,
                       const std::vector<double>& steering_deg) {
    return beamform_with(gain_table(geometry, steering_deg, pas.angles_deg), pas, geometry,
                         steering_deg);
}

BeamformedPas beamform_with(const std::vector<std::vector<double>>& gains,
                            const PowerAngularSpectrum& pas, const ArrayGeometry& geometry,
                            const std::vector<double>& steering_deg) {
    pas.validate();
    if (!(pas.total_power() > 0.0))
        throw EmptyChannelError("pas " + pas.link_id + " carries no power");
    if (gains.size() != steering_deg.size() ||
        (!gains.empty() && gains.front().size() != pas.angles_deg.size()))
        throw ComparisonError("gain table does not match the requested grids");

    const double dtheta = pas.grid_step_deg();
    BeamformedPas b;
    b.band_label = "";
    b.steering_deg = steering_deg;
    b.source_geometry = geometry;
    b.power.resize(steering_deg.size());
    for (size_t s = 0; s < steering_deg.size(); ++s) {
        double acc = 0.0;
        for (size_t a = 0; a < pas.power.size(); ++a) acc += pas.power[a] * gains[s][a];
        b.power[s] = acc * dtheta;
    }
    return b;
}

AngularDistribution normalize(const BeamformedPas& bpas) {
    const double total = std::accumulate(bpas.power.begin(), bpas.power.end(), 0.0);
    if (!(total > 0.0)) throw EmptyChannelError("beamformed pas has zero total power");
    AngularDistribution d;
    d.angles_deg = bpas.steering_deg;
    d.mass.reserve(bpas.power.size());
    for (double p : bpas.power) d.mass.push_back(p / total);
    return d;
}

namespace {

double grid_step(const std::vector<double>& angles) {
    return angles.size() > 1 ? angles[1] - angles[0] : 1.0;
}

bool same_grid(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

size_t nearest_index(const std::vector<double>& grid, double angle) {
    const double step = grid_step(grid);
    const double idx = std::round((angle - grid.front()) / step);
    return static_cast<size_t>(std::clamp(idx, 0.0, static_cast<double>(grid.size() - 1)));
}

/// Accumulates fine-grid mass onto the coarse grid by nearest angle.
AngularDistribution resample_onto(const AngularDistribution& fine,
                                  const std::vector<double>& coarse) {
    AngularDistribution out;
    out.angles_deg = coarse;
    out.mass.assign(coarse.size(), 0.0);
    for (size_t i = 0; i < fine.angles_deg.size(); ++i)
        out.mass[nearest_index(coarse, fine.angles_deg[i])] += fine.mass[i];
    return out;
}

}  // namespace

double psp_percent(const AngularDistribution& low, const AngularDistribution& high) {
    const AngularDistribution* a = &low;
    const AngularDistribution* b = &high;
    AngularDistribution resampled;
    if (!same_grid(a->angles_deg, b->angles_deg)) {
        const double step_a = grid_step(a->angles_deg);
        const double step_b = grid_step(b->angles_deg);
        if (step_a == step_b)
            throw ComparisonError("distributions on unrelated grids of equal step");
        if (step_a < step_b) {  // a finer -> resample onto b
            resampled = resample_onto(*a, b->angles_deg);
            a = &resampled;
        } else {
            resampled = resample_onto(*b, a->angles_deg);
            b = &resampled;
        }
    }
    double tv = 0.0;
    for (size_t i = 0; i < a->mass.size(); ++i) tv += std::abs(a->mass[i] - b->mass[i]);
    tv *= 0.5;
    return 100.0 * (1.0 - tv);
}

std::vector<double> top_k_directions(const BeamformedPas& bpas, int k) {
    const int n = static_cast<int>(bpas.steering_deg.size());
    if (k < 1 || k > n) throw DomainError("top-k: k must be in [1, grid size]");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (bpas.power[i] != bpas.power[j]) return bpas.power[i] > bpas.power[j];
        const double ai = std::abs(bpas.steering_deg[i]);
        const double aj = std::abs(bpas.steering_deg[j]);
        if (ai != aj) return ai < aj;
        return bpas.steering_deg[i] < bpas.steering_deg[j];
    });

    std::vector<double> dirs(k);
    for (int i = 0; i < k; ++i) dirs[i] = bpas.steering_deg[order[i]];
    return dirs;
}

double r_ratio_db(const BeamformedPas& bpas_high, const std::vector<double>& dirs_low,
                  const std::vector<double>& dirs_high) {
    if (dirs_low.size() != dirs_high.size())
        throw ComparisonError("r ratio: direction sets must have equal size");

    auto collect = [&](const std::vector<double>& dirs) {
        double acc = 0.0;
        for (double d : dirs) acc += bpas_high.power[nearest_index(bpas_high.steering_deg, d)];
        return acc;
    };
    const double num = collect(dirs_low);
    const double den = collect(dirs_high);
    if (!(den > 0.0)) throw EmptyChannelError("r ratio: top-k power of the high band is zero");
    if (!(num > 0.0)) return -100.0;
    return std::max(10.0 * std::log10(num / den), -100.0);
}

std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> values) {
    if (values.empty()) throw DomainError("empirical cdf of an empty sample");
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    std::vector<std::pair<double, double>> cdf;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i + 1 < values.size() && values[i + 1] == values[i]) continue;  // merge duplicates
        cdf.emplace_back(values[i], static_cast<double>(i + 1) / n);
    }
    return cdf;
}

PowerAngularSpectrum synth_pas(uint64_t seed, const std::vector<ClusterSpec>& clusters,
                               double grid_step_deg, double jitter_deg,
                               const std::string& link_id) {
    for (const auto& c : clusters)
        if (!(c.spread_deg > 0.0)) throw ConfigError("cluster spread must be positive");

    Rng rng(seed);
    PowerAngularSpectrum pas;
    pas.link_id = link_id;
    pas.angles_deg = uniform_grid(-90.0, 90.0, grid_step_deg);
    pas.power.assign(pas.angles_deg.size(), 0.0);
    for (const auto& c : clusters) {
        const double center = c.center_deg + rng.uniform(-jitter_deg, jitter_deg);
        const double b = c.spread_deg / std::sqrt(2.0);  // Laplacian scale
        const double p_lin = db_to_linear(c.power_db);
        for (size_t i = 0; i < pas.angles_deg.size(); ++i)
            pas.power[i] += p_lin / (2.0 * b) * std::exp(-std::abs(pas.angles_deg[i] - center) / b);
    }
    return pas;
}

std::vector<PowerAngularSpectrum> synth_ensemble(uint64_t seed, const SynthEnsembleSpec& spec) {
    if (spec.links < 1) throw ConfigError("ensemble needs at least one link");
    if (spec.clusters_min < 1 || spec.clusters_max < spec.clusters_min)
        throw ConfigError("ensemble cluster count range is invalid");

    std::vector<PowerAngularSpectrum> links;
    links.reserve(spec.links);
    for (int l = 0; l < spec.links; ++l) {
        Rng rng = Rng::for_stream(seed, static_cast<uint64_t>(l));
        const int n_clusters = rng.uniform_int(spec.clusters_min, spec.clusters_max);
        std::vector<ClusterSpec> clusters(n_clusters);
        for (auto& c : clusters) {
            c.center_deg = rng.uniform(-spec.center_range_deg, spec.center_range_deg);
            c.spread_deg = rng.uniform(spec.spread_min_deg, spec.spread_max_deg);
            c.power_db = rng.uniform(spec.power_min_db, spec.power_max_db);
        }
        char id[16];
        std::snprintf(id, sizeof(id), "link%05d", l);
        links.push_back(synth_pas(Rng::splitmix64(seed + 1) ^ static_cast<uint64_t>(l), clusters,
                                  spec.grid_step_deg, spec.jitter_deg, id));
    }
    return links;
}

std::vector<LinkEnsemble> evaluate_band_pairs(const std::vector<PowerAngularSpectrum>& links,
                                              const PasStudy& study) {
    if (study.bands.size() < 2) throw ConfigError("band-pair study needs at least two bands");

    struct BandContext {
        PasBand band;
        ArrayGeometry geometry;
        std::vector<double> steering;
        std::vector<double> table_arrivals;
        std::vector<std::vector<double>> gains;
    };

    // Bands ordered by frequency so each pair reads lower-higher.
    std::vector<BandContext> ctx;
    for (const auto& band : study.bands) {
        BandContext c;
        c.band = band;
        c.geometry = make_ula(band.elements, band.frequency_hz);
        c.steering = uniform_grid(-90.0, 90.0, study.steering_step_deg);
        ctx.push_back(std::move(c));
    }
    std::sort(ctx.begin(), ctx.end(),
              [](const BandContext& a, const BandContext& b) {
                  return a.band.frequency_hz < b.band.frequency_hz;
              });

    std::vector<LinkEnsemble> ensembles;
    for (size_t i = 0; i < ctx.size(); ++i)
        for (size_t j = i + 1; j < ctx.size(); ++j)
            ensembles.push_back({ctx[i].band.label + "-" + ctx[j].band.label, {}});

    for (const auto& link : links) {
        std::vector<BeamformedPas> beamformed;
        std::vector<AngularDistribution> dists;
        for (auto& c : ctx) {
            if (c.table_arrivals != link.angles_deg) {  // cache keyed by arrival grid
                c.table_arrivals = link.angles_deg;
                c.gains = gain_table(c.geometry, c.steering, c.table_arrivals);
            }
            BeamformedPas b = beamform_with(c.gains, link, c.geometry, c.steering);
            b.band_label = c.band.label;
            dists.push_back(normalize(b));
            beamformed.push_back(std::move(b));
        }
        size_t pair = 0;
        for (size_t i = 0; i < ctx.size(); ++i) {
            for (size_t j = i + 1; j < ctx.size(); ++j, ++pair) {
                SimilarityResult r;
                r.link_id = link.link_id;
                r.k = study.k;
                r.psp_percent = psp_percent(dists[i], dists[j]);
                const auto dirs_low = top_k_directions(beamformed[i], study.k);
                const auto dirs_high = top_k_directions(beamformed[j], study.k);
                r.r_db = r_ratio_db(beamformed[j], dirs_low, dirs_high);
                ensembles[pair].results.push_back(std::move(r));
            }
        }
    }
    for (auto& e : ensembles)
        std::sort(e.results.begin(), e.results.end(),
                  [](const SimilarityResult& a, const SimilarityResult& b) {
                      return a.link_id < b.link_id;
                  });
    return ensembles;
}

}  // namespace fr3
