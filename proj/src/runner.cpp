// SPDX-License-Identifier: Apache-2.0
#include "fr3kit/runner.hpp"

#include <algorithm>
#include <iostream>

#include "fr3kit/errors.hpp"

namespace fr3 {

namespace fs = std::filesystem;

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out.push_back(sep);
        out += parts[i];
    }
    return out;
}

void run_spectrum(const SpectrumJob& job, ArtifactWriter& out, TableFormat format) {
    Table bands({"label", "low_hz", "high_hz", "status", "bandwidth_hz", "services"});
    for (const auto& b : job.plan.bands())
        bands.add_row({b.label, b.low_hz, b.high_hz, to_string(b.status), b.bandwidth_hz(),
                       join(b.services, ';')});
    out.write_table("bands", bands, format);

    std::vector<std::string> filter_names;
    for (const auto s : job.status_filter) filter_names.push_back(to_string(s));
    Table totals({"status_filter", "total_identified_hz"});
    totals.add_row({join(filter_names, '+'), total_identified_bandwidth(job.plan, job.status_filter)});
    out.write_table("totals", totals, format);

    if (!job.classify_hz.empty()) {
        Table cls({"frequency_hz", "fr"});
        for (double f : job.classify_hz) cls.add_row({f, to_string(classify_fr(f, job.plan))});
        out.write_table("classification", cls, format);
    }

    if (!job.schemes.empty()) {
        Table agg({"label", "mode", "aperture_hz", "occupied_hz", "sparsity",
                   "delay_resolution_s", "range_resolution_m"});
        for (const auto& scheme : job.schemes) {
            const auto res = aggregate({scheme.carriers, scheme.mode}, job.speed_of_light);
            agg.add_row({scheme.label, to_string(scheme.mode), res.aperture_hz, res.occupied_hz,
                         res.sparsity, res.delay_resolution_s, res.range_resolution_m});
        }
        out.write_table("aggregation", agg, format);
    }
}

void run_array(const ArrayJob& job, ArtifactWriter& out, TableFormat format) {
    Table table({"frequency_hz", "n_x", "n_y", "directivity_dbi", "hpbw_deg"});
    for (double f : job.frequencies_hz) {
        const ArrayGeometry g = geometry_for_aperture(job.aperture_side_m, f, job.pitch_rule, job.kind);
        table.add_row({f, static_cast<int64_t>(g.n_x), static_cast<int64_t>(g.n_y),
                       directivity_dbi(g, job.grid_deg), hpbw_deg(g, PatternPlane::azimuth)});
    }
    out.write_table("array", table, format);
}

void run_tradeoff(const TradeoffJob& job, ArtifactWriter& out, TableFormat format) {
    const auto scan = ncc_scan(job.scenario);
    const auto band = balanced_band(scan, job.threshold);

    Table table({"frequency_hz", "hpbw_deg", "radius_m", "bandwidth_hz", "capacity_bit_s",
                 "cov_norm", "cap_norm", "n_cc"});
    for (const auto& p : scan)
        table.add_row({p.frequency_hz, p.hpbw_deg, p.radius_m, p.bandwidth_hz, p.capacity_bps,
                       p.cov_norm, p.cap_norm, p.n_cc});
    if (format == TableFormat::csv) {
        table.add_summary_line(band.empty ? "balanced_band,none,none"
                                          : "balanced_band," + format_number(band.f_low_hz) + "," +
                                                format_number(band.f_high_hz));
        out.write_table("tradeoff", table, format);
    } else {
        out.write_table("tradeoff", table, format);
        std::string summary = band.empty
                                  ? "{\"balanced_band\": null}\n"
                                  : "{\"balanced_band\": {\"f_low_hz\": " + format_number(band.f_low_hz) +
                                        ", \"f_high_hz\": " + format_number(band.f_high_hz) + "}}\n";
        out.write("balanced_band.json", summary);
    }
}

void run_pas(const PasJob& job, uint64_t seed, ArtifactWriter& out, TableFormat format) {
    std::vector<PowerAngularSpectrum> links;
    if (job.synthetic) {
        links = synth_ensemble(seed, job.synth);
    } else {
        std::vector<fs::path> files;
        std::error_code ec;
        for (const auto& entry : fs::directory_iterator(job.input_dir, ec)) {
            if (entry.path().extension() == ".csv") files.push_back(entry.path());
        }
        if (ec) throw IoError("cannot read directory " + job.input_dir.string());
        std::sort(files.begin(), files.end());
        for (const auto& f : files)
            for (auto& pas : parse_pas_csv(read_file(f))) links.push_back(std::move(pas));
        if (links.empty()) throw ConfigError("pas: no links found under " + job.input_dir.string());
    }

    const auto ensembles = evaluate_band_pairs(links, job.study);
    for (const auto& ensemble : ensembles) {
        Table sim({"link_id", "psp_percent", "r_db", "k"});
        std::vector<double> psp_values, r_values;
        for (const auto& r : ensemble.results) {
            sim.add_row({r.link_id, r.psp_percent, r.r_db, static_cast<int64_t>(r.k)});
            psp_values.push_back(r.psp_percent);
            r_values.push_back(r.r_db);
        }
        out.write_table("similarity_" + ensemble.band_pair, sim, format);

        Table psp_cdf({"psp_percent", "cum_prob"});
        for (const auto& [v, p] : empirical_cdf(psp_values)) psp_cdf.add_row({v, p});
        out.write_table("cdf_psp_" + ensemble.band_pair, psp_cdf, format);

        Table r_cdf({"r_db", "cum_prob"});
        for (const auto& [v, p] : empirical_cdf(r_values)) r_cdf.add_row({v, p});
        out.write_table("cdf_r_" + ensemble.band_pair, r_cdf, format);
    }
}

Table ris_table(const std::vector<RisResult>& results) {
    Table table({"pt_dbm", "n_elements", "snr_db", "se", "ee", "p_total_w"});
    for (const auto& r : results)
        table.add_row({r.pt_dbm, static_cast<int64_t>(r.n_elements), r.snr_db, r.se_bps_hz,
                       r.ee_bit_per_joule, r.p_total_w});
    return table;
}

void run_ris(const RisJob& job, ArtifactWriter& out, TableFormat format) {
    out.write_table("ris", ris_table(sweep(job.scenario)), format);

    if (!job.compare) return;
    for (const auto& [label, variant] : job.compare_set)
        out.write_table("ris_" + label, ris_table(sweep(variant)), format);

    const auto gaps = mean_se_gaps(job.scenario, job.compare_set);
    Table cmp({"reference", "mean_se_gap_bps_hz"});
    for (const auto& gap : gaps) {
        cmp.add_row({gap.reference_label, gap.mean_se_gap_bps_hz});
        std::cout << "mean SE gap vs " << gap.reference_label << ": "
                  << format_number(gap.mean_se_gap_bps_hz) << " bit/s/Hz\n";
    }
    out.write_table("compare", cmp, format);
}

}  // namespace

void run(const RunConfig& rc) {
    const ParsedJob parsed = parse_config(rc);
    ArtifactWriter out(rc.out_dir);
    out.write("effective_config.json", parsed.effective_json);

    if (const auto* job = std::get_if<SpectrumJob>(&parsed.job)) run_spectrum(*job, out, rc.format);
    else if (const auto* job = std::get_if<ArrayJob>(&parsed.job)) run_array(*job, out, rc.format);
    else if (const auto* job = std::get_if<TradeoffJob>(&parsed.job)) run_tradeoff(*job, out, rc.format);
    else if (const auto* job = std::get_if<PasJob>(&parsed.job)) run_pas(*job, parsed.seed, out, rc.format);
    else if (const auto* job = std::get_if<RisJob>(&parsed.job)) run_ris(*job, out, rc.format);

    out.finalize();
}

}  // namespace fr3
