// SPDX-License-Identifier: Apache-2.0
#include "fr3kit/config.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "fr3kit/errors.hpp"

namespace fr3 {

using nlohmann::json;

std::string to_string(Subcommand s) {
    switch (s) {
        case Subcommand::spectrum: return "spectrum";
        case Subcommand::array: return "array";
        case Subcommand::tradeoff: return "tradeoff";
        case Subcommand::pas: return "pas";
        case Subcommand::ris: return "ris";
    }
    return "?";
}

Subcommand subcommand_from_string(const std::string& s) {
    if (s == "spectrum") return Subcommand::spectrum;
    if (s == "array") return Subcommand::array;
    if (s == "tradeoff") return Subcommand::tradeoff;
    if (s == "pas") return Subcommand::pas;
    if (s == "ris") return Subcommand::ris;
    throw ConfigError("unknown subcommand: " + s);
}

namespace {

/// Tracks which keys of a JSON object were consumed so leftovers can be
/// reported with their full path.
class ObjReader {
  public:
    ObjReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ConfigError(path_ + ": expected an object");
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    const json* get(const std::string& key) {
        seen_.insert(key);
        return j_.contains(key) ? &j_.at(key) : nullptr;
    }

    double number(const std::string& key, double fallback) {
        const json* v = get(key);
        if (v == nullptr) return fallback;
        if (!v->is_number()) throw ConfigError(child(key) + ": expected a number");
        return v->get<double>();
    }

    int integer(const std::string& key, int fallback) {
        const json* v = get(key);
        if (v == nullptr) return fallback;
        if (!v->is_number_integer()) throw ConfigError(child(key) + ": expected an integer");
        return v->get<int>();
    }

    std::string text(const std::string& key, const std::string& fallback) {
        const json* v = get(key);
        if (v == nullptr) return fallback;
        if (!v->is_string()) throw ConfigError(child(key) + ": expected a string");
        return v->get<std::string>();
    }

    bool boolean(const std::string& key, bool fallback) {
        const json* v = get(key);
        if (v == nullptr) return fallback;
        if (!v->is_boolean()) throw ConfigError(child(key) + ": expected a boolean");
        return v->get<bool>();
    }

    std::vector<double> number_list(const std::string& key, std::vector<double> fallback) {
        const json* v = get(key);
        if (v == nullptr) return fallback;
        if (!v->is_array()) throw ConfigError(child(key) + ": expected an array of numbers");
        std::vector<double> out;
        for (const auto& e : *v) {
            if (!e.is_number()) throw ConfigError(child(key) + ": expected an array of numbers");
            out.push_back(e.get<double>());
        }
        return out;
    }

    std::string child(const std::string& key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

    void done() const {
        for (const auto& item : j_.items())
            if (seen_.count(item.key()) == 0)
                throw ConfigError("unknown key: " + child(item.key()));
    }

    const json& raw() const { return j_; }
    const std::string& path() const { return path_; }

  private:
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

Vec3 read_vec3(ObjReader& r, const std::string& key, const Vec3& fallback) {
    const json* v = r.get(key);
    if (v == nullptr) return fallback;
    if (!v->is_array() || v->size() != 3 || !(*v)[0].is_number() || !(*v)[1].is_number() ||
        !(*v)[2].is_number())
        throw ConfigError(r.child(key) + ": expected [x, y, z] in meters");
    return {(*v)[0].get<double>(), (*v)[1].get<double>(), (*v)[2].get<double>()};
}

FrequencyBand read_band(const json& j, const std::string& path) {
    ObjReader r(j, path);
    FrequencyBand b;
    b.label = r.text("label", "");
    b.low_hz = r.number("low_hz", 0.0);
    b.high_hz = r.number("high_hz", 0.0);
    b.status = band_status_from_string(r.text("status", "allocated"));
    if (const json* v = r.get("services")) {
        if (!v->is_array()) throw ConfigError(path + ".services: expected an array of strings");
        for (const auto& s : *v) {
            if (!s.is_string()) throw ConfigError(path + ".services: expected an array of strings");
            b.services.push_back(s.get<std::string>());
        }
    }
    r.done();
    return b;
}

json band_to_json(const FrequencyBand& b) {
    json j;
    j["label"] = b.label;
    j["low_hz"] = b.low_hz;
    j["high_hz"] = b.high_hz;
    j["status"] = to_string(b.status);
    j["services"] = b.services;
    return j;
}

SpectrumJob read_spectrum(const json& section, std::string* effective_error_path) {
    (void)effective_error_path;
    ObjReader r(section, "spectrum");
    SpectrumJob job;

    if (r.has("plan") && r.has("plan_file"))
        throw ConfigError("spectrum: plan and plan_file are mutually exclusive");
    if (const json* v = r.get("plan")) {
        if (!v->is_array()) throw ConfigError("spectrum.plan: expected an array of bands");
        std::vector<FrequencyBand> bands;
        for (size_t i = 0; i < v->size(); ++i)
            bands.push_back(read_band((*v)[i], "spectrum.plan[" + std::to_string(i) + "]"));
        job.plan = BandPlan(std::move(bands));
    } else if (r.has("plan_file")) {
        const std::string file = r.text("plan_file", "");
        job.plan = parse_band_plan_json(read_file(file));
    } else {
        job.plan = BandPlan::builtin_default();
    }

    if (const json* v = r.get("status_filter")) {
        if (!v->is_array()) throw ConfigError("spectrum.status_filter: expected an array of strings");
        job.status_filter.clear();
        for (const auto& s : *v) {
            if (!s.is_string())
                throw ConfigError("spectrum.status_filter: expected an array of strings");
            job.status_filter.insert(band_status_from_string(s.get<std::string>()));
        }
    }

    job.classify_hz = r.number_list("classify_hz", {});

    if (const json* v = r.get("schemes")) {
        if (!v->is_array()) throw ConfigError("spectrum.schemes: expected an array");
        for (size_t i = 0; i < v->size(); ++i) {
            const std::string path = "spectrum.schemes[" + std::to_string(i) + "]";
            ObjReader sr((*v)[i], path);
            SpectrumJob::Scheme scheme;
            scheme.label = sr.text("label", "scheme" + std::to_string(i));
            scheme.mode = aggregation_mode_from_string(sr.text("mode", "non-contiguous"));
            const json* carriers = sr.get("carriers_hz");
            if (carriers == nullptr || !carriers->is_array())
                throw ConfigError(path + ".carriers_hz: expected an array of [low, high] pairs");
            int ci = 0;
            for (const auto& c : *carriers) {
                if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
                    throw ConfigError(path + ".carriers_hz: expected [low, high] pairs");
                FrequencyBand band;
                band.label = scheme.label + "-c" + std::to_string(ci++);
                band.low_hz = c[0].get<double>();
                band.high_hz = c[1].get<double>();
                scheme.carriers.push_back(std::move(band));
            }
            sr.done();
            job.schemes.push_back(std::move(scheme));
        }
    }

    job.speed_of_light = r.number("speed_of_light_m_s", kSpeedOfLight);
    if (!(job.speed_of_light > 0.0))
        throw ConfigError("spectrum.speed_of_light_m_s: must be > 0");
    r.done();
    return job;
}

json spectrum_to_json(const SpectrumJob& job) {
    json j;
    json plan = json::array();
    for (const auto& b : job.plan.bands()) plan.push_back(band_to_json(b));
    j["plan"] = std::move(plan);
    json filters = json::array();
    for (const auto s : job.status_filter) filters.push_back(to_string(s));
    j["status_filter"] = std::move(filters);
    j["classify_hz"] = job.classify_hz;
    json schemes = json::array();
    for (const auto& s : job.schemes) {
        json sj;
        sj["label"] = s.label;
        sj["mode"] = to_string(s.mode);
        json carriers = json::array();
        for (const auto& c : s.carriers) carriers.push_back({c.low_hz, c.high_hz});
        sj["carriers_hz"] = std::move(carriers);
        schemes.push_back(std::move(sj));
    }
    j["schemes"] = std::move(schemes);
    j["speed_of_light_m_s"] = job.speed_of_light;
    return j;
}

ArrayJob read_array(const json& section) {
    ObjReader r(section, "array");
    ArrayJob job;
    job.aperture_side_m = r.number("aperture_side_m", job.aperture_side_m);
    if (!(job.aperture_side_m > 0.0)) throw ConfigError("array.aperture_side_m: must be > 0");
    job.frequencies_hz = r.number_list("frequencies_hz", job.frequencies_hz);
    for (double f : job.frequencies_hz)
        if (!(f > 0.0)) throw ConfigError("array.frequencies_hz: must be > 0");
    job.pitch_rule = pitch_rule_from_string(r.text("pitch_rule", to_string(job.pitch_rule)));
    job.kind = array_kind_from_string(r.text("kind", to_string(job.kind)));
    job.grid_deg = r.number("grid_deg", job.grid_deg);
    if (!(job.grid_deg > 0.0) || job.grid_deg > 0.5)
        throw ConfigError("array.grid_deg: must be in (0, 0.5]");
    r.done();
    return job;
}

json array_to_json(const ArrayJob& job) {
    json j;
    j["aperture_side_m"] = job.aperture_side_m;
    j["frequencies_hz"] = job.frequencies_hz;
    j["pitch_rule"] = to_string(job.pitch_rule);
    j["kind"] = to_string(job.kind);
    j["grid_deg"] = job.grid_deg;
    return j;
}

TradeoffJob read_tradeoff(const json& section) {
    ObjReader r(section, "tradeoff");
    TradeoffJob job;
    LinkScenario& s = job.scenario;
    s.height_m = r.number("height_m", s.height_m);
    s.aperture_side_m = r.number("aperture_side_m", s.aperture_side_m);
    s.f_min_hz = r.number("f_min_hz", s.f_min_hz);
    s.f_max_hz = r.number("f_max_hz", s.f_max_hz);
    s.bw_min_hz = r.number("bw_min_hz", s.bw_min_hz);
    s.bw_max_hz = r.number("bw_max_hz", s.bw_max_hz);
    s.snr_db = r.number("snr_db", s.snr_db);
    s.scan_step_hz = r.number("scan_step_hz", s.scan_step_hz);
    job.threshold = r.number("threshold", job.threshold);
    if (!(job.threshold >= 0.0)) throw ConfigError("tradeoff.threshold: must be >= 0");
    r.done();
    s.validate();
    return job;
}

json tradeoff_to_json(const TradeoffJob& job) {
    json j;
    j["height_m"] = job.scenario.height_m;
    j["aperture_side_m"] = job.scenario.aperture_side_m;
    j["f_min_hz"] = job.scenario.f_min_hz;
    j["f_max_hz"] = job.scenario.f_max_hz;
    j["bw_min_hz"] = job.scenario.bw_min_hz;
    j["bw_max_hz"] = job.scenario.bw_max_hz;
    j["snr_db"] = job.scenario.snr_db;
    j["scan_step_hz"] = job.scenario.scan_step_hz;
    j["threshold"] = job.threshold;
    return j;
}

PasJob read_pas(const json& section, bool force_synthetic) {
    ObjReader r(section, "pas");
    PasJob job;

    const std::string mode = r.text("mode", "synthetic");
    if (mode == "synthetic") job.synthetic = true;
    else if (mode == "directory") job.synthetic = false;
    else throw ConfigError("pas.mode: expected synthetic or directory");
    if (force_synthetic) job.synthetic = true;
    job.input_dir = r.text("input_dir", "");
    if (!job.synthetic && job.input_dir.empty())
        throw ConfigError("pas.input_dir: required in directory mode");

    job.study.bands = {{"FR1", 4e9, 4}, {"FR3", 15e9, 16}, {"FR2", 28e9, 28}};
    if (const json* v = r.get("bands")) {
        if (!v->is_array() || v->size() < 2)
            throw ConfigError("pas.bands: expected an array of at least two bands");
        job.study.bands.clear();
        for (size_t i = 0; i < v->size(); ++i) {
            const std::string path = "pas.bands[" + std::to_string(i) + "]";
            ObjReader br((*v)[i], path);
            PasBand band;
            band.label = br.text("label", "band" + std::to_string(i));
            band.frequency_hz = br.number("frequency_hz", 0.0);
            band.elements = br.integer("elements", 0);
            if (!(band.frequency_hz > 0.0)) throw ConfigError(path + ".frequency_hz: must be > 0");
            if (band.elements < 1) throw ConfigError(path + ".elements: must be >= 1");
            br.done();
            job.study.bands.push_back(std::move(band));
        }
    }

    job.study.steering_step_deg = r.number("steering_step_deg", 1.0);
    if (!(job.study.steering_step_deg > 0.0))
        throw ConfigError("pas.steering_step_deg: must be > 0");
    job.study.k = r.integer("k", 1);
    if (job.study.k < 1) throw ConfigError("pas.k: must be >= 1");

    if (const json* v = r.get("synthetic")) {
        ObjReader sr(*v, "pas.synthetic");
        SynthEnsembleSpec& spec = job.synth;
        spec.links = sr.integer("links", spec.links);
        spec.grid_step_deg = sr.number("grid_step_deg", spec.grid_step_deg);
        spec.clusters_min = sr.integer("clusters_min", spec.clusters_min);
        spec.clusters_max = sr.integer("clusters_max", spec.clusters_max);
        spec.center_range_deg = sr.number("center_range_deg", spec.center_range_deg);
        spec.spread_min_deg = sr.number("spread_min_deg", spec.spread_min_deg);
        spec.spread_max_deg = sr.number("spread_max_deg", spec.spread_max_deg);
        spec.power_min_db = sr.number("power_min_db", spec.power_min_db);
        spec.power_max_db = sr.number("power_max_db", spec.power_max_db);
        spec.jitter_deg = sr.number("jitter_deg", spec.jitter_deg);
        sr.done();
        if (spec.links < 1) throw ConfigError("pas.synthetic.links: must be >= 1");
        if (!(spec.grid_step_deg > 0.0)) throw ConfigError("pas.synthetic.grid_step_deg: must be > 0");
        if (spec.clusters_min < 1 || spec.clusters_max < spec.clusters_min)
            throw ConfigError("pas.synthetic: cluster count range is invalid");
        if (!(spec.spread_min_deg > 0.0) || spec.spread_max_deg < spec.spread_min_deg)
            throw ConfigError("pas.synthetic: spread range is invalid");
    }
    r.done();
    return job;
}

json pas_to_json(const PasJob& job) {
    json j;
    j["mode"] = job.synthetic ? "synthetic" : "directory";
    j["input_dir"] = job.input_dir.string();
    json bands = json::array();
    for (const auto& b : job.study.bands) {
        json bj;
        bj["label"] = b.label;
        bj["frequency_hz"] = b.frequency_hz;
        bj["elements"] = b.elements;
        bands.push_back(std::move(bj));
    }
    j["bands"] = std::move(bands);
    j["steering_step_deg"] = job.study.steering_step_deg;
    j["k"] = job.study.k;
    json s;
    s["links"] = job.synth.links;
    s["grid_step_deg"] = job.synth.grid_step_deg;
    s["clusters_min"] = job.synth.clusters_min;
    s["clusters_max"] = job.synth.clusters_max;
    s["center_range_deg"] = job.synth.center_range_deg;
    s["spread_min_deg"] = job.synth.spread_min_deg;
    s["spread_max_deg"] = job.synth.spread_max_deg;
    s["power_min_db"] = job.synth.power_min_db;
    s["power_max_db"] = job.synth.power_max_db;
    s["jitter_deg"] = job.synth.jitter_deg;
    j["synthetic"] = std::move(s);
    return j;
}

double noise_density_from(double noise_dbm_per_hz, double noise_figure_db) {
    return std::pow(10.0, (noise_dbm_per_hz + noise_figure_db - 30.0) / 10.0);
}

RisJob read_ris(const json& section, bool compare_flag) {
    ObjReader r(section, "ris");
    RisJob job;
    RisScenario& s = job.scenario;
    s.tx_pos = read_vec3(r, "tx_pos_m", s.tx_pos);
    s.ris_pos = read_vec3(r, "ris_pos_m", s.ris_pos);
    s.rx_pos = read_vec3(r, "rx_pos_m", s.rx_pos);
    s.side_m = r.number("side_m", s.side_m);
    s.frequency_hz = r.number("frequency_hz", s.frequency_hz);
    s.pt_min_dbm = r.number("pt_min_dbm", s.pt_min_dbm);
    s.pt_max_dbm = r.number("pt_max_dbm", s.pt_max_dbm);
    s.pt_step_db = r.number("pt_step_db", s.pt_step_db);
    s.phase_bits = r.integer("phase_bits", s.phase_bits);
    s.p_phase_shifter_w = r.number("p_phase_shifter_w", s.p_phase_shifter_w);
    s.n_users = r.integer("n_users", s.n_users);
    s.p_user_w = r.number("p_user_w", s.p_user_w);
    // Noise can be given as a density outright or as dBm/Hz plus a noise
    // figure; the direct key wins and is what the effective config emits.
    const double noise_dbm = r.number("noise_dbm_per_hz", -174.0);
    const double noise_figure = r.number("noise_figure_db", 9.0);
    s.noise_density_w_per_hz =
        r.number("noise_density_w_per_hz", noise_density_from(noise_dbm, noise_figure));
    s.ref_bandwidth_hz = r.number("ref_bandwidth_hz", s.ref_bandwidth_hz);
    s.g_tx = r.number("g_tx_linear", db_to_linear(r.number("g_tx_dbi", 0.0)));
    s.g_rx = r.number("g_rx_linear", db_to_linear(r.number("g_rx_dbi", 0.0)));

    job.compare = compare_flag;
    // Default comparison set: the same surface driven at the three bands,
    // with per-band phase resolution and shifter power.
    json default_compare = json::array();
    default_compare.push_back({{"label", "3.5GHz"},
                               {"frequency_hz", 3.5e9},
                               {"phase_bits", 6},
                               {"p_phase_shifter_w", 7.8e-3}});
    default_compare.push_back({{"label", "15GHz"},
                               {"frequency_hz", 15e9},
                               {"phase_bits", 4},
                               {"p_phase_shifter_w", 4.5e-3}});
    default_compare.push_back({{"label", "28GHz"},
                               {"frequency_hz", 28e9},
                               {"phase_bits", 3},
                               {"p_phase_shifter_w", 1.5e-3}});
    const json* compare = r.get("compare");
    const json& compare_src = compare != nullptr ? *compare : default_compare;
    if (!compare_src.is_array()) throw ConfigError("ris.compare: expected an array");
    for (size_t i = 0; i < compare_src.size(); ++i) {
        const std::string path = "ris.compare[" + std::to_string(i) + "]";
        ObjReader cr(compare_src[i], path);
        RisScenario variant = s;
        const std::string label = cr.text("label", "variant" + std::to_string(i));
        variant.frequency_hz = cr.number("frequency_hz", s.frequency_hz);
        variant.phase_bits = cr.integer("phase_bits", s.phase_bits);
        variant.p_phase_shifter_w = cr.number("p_phase_shifter_w", s.p_phase_shifter_w);
        cr.done();
        variant.validate();
        job.compare_set.emplace_back(label, variant);
    }
    r.done();
    s.validate();
    return job;
}

json ris_to_json(const RisJob& job) {
    const RisScenario& s = job.scenario;
    json j;
    j["tx_pos_m"] = {s.tx_pos.x, s.tx_pos.y, s.tx_pos.z};
    j["ris_pos_m"] = {s.ris_pos.x, s.ris_pos.y, s.ris_pos.z};
    j["rx_pos_m"] = {s.rx_pos.x, s.rx_pos.y, s.rx_pos.z};
    j["side_m"] = s.side_m;
    j["frequency_hz"] = s.frequency_hz;
    j["pt_min_dbm"] = s.pt_min_dbm;
    j["pt_max_dbm"] = s.pt_max_dbm;
    j["pt_step_db"] = s.pt_step_db;
    j["phase_bits"] = s.phase_bits;
    j["p_phase_shifter_w"] = s.p_phase_shifter_w;
    j["n_users"] = s.n_users;
    j["p_user_w"] = s.p_user_w;
    j["noise_density_w_per_hz"] = s.noise_density_w_per_hz;
    j["ref_bandwidth_hz"] = s.ref_bandwidth_hz;
    j["g_tx_linear"] = s.g_tx;
    j["g_rx_linear"] = s.g_rx;
    json compare = json::array();
    for (const auto& [label, variant] : job.compare_set) {
        json cj;
        cj["label"] = label;
        cj["frequency_hz"] = variant.frequency_hz;
        cj["phase_bits"] = variant.phase_bits;
        cj["p_phase_shifter_w"] = variant.p_phase_shifter_w;
        compare.push_back(std::move(cj));
    }
    j["compare"] = std::move(compare);
    return j;
}

void apply_override(json& section, const std::string& assignment, const std::string& prefix) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("override must be key=value: " + assignment);
    const std::string key_path = assignment.substr(0, eq);
    const std::string value_text = assignment.substr(eq + 1);

    json value;
    try {
        value = json::parse(value_text);
    } catch (const json::parse_error&) {
        value = value_text;  // bare strings allowed
    }

    json* node = &section;
    std::istringstream keys(key_path);
    std::string key;
    std::vector<std::string> parts;
    while (std::getline(keys, key, '.')) parts.push_back(key);
    if (parts.empty()) throw ConfigError("override must be key=value: " + assignment);
    for (size_t i = 0; i + 1 < parts.size(); ++i) node = &(*node)[parts[i]];
    (*node)[parts.back()] = std::move(value);
    (void)prefix;
}

}  // namespace

BandPlan parse_band_plan_json(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("band plan: invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ConfigError("band plan: expected a JSON array of bands");
    std::vector<FrequencyBand> bands;
    for (size_t i = 0; i < doc.size(); ++i)
        bands.push_back(read_band(doc[i], "plan[" + std::to_string(i) + "]"));
    return BandPlan(std::move(bands));
}

std::vector<PowerAngularSpectrum> parse_pas_csv(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line) || line != "link_id,angle_deg,power_linear")
        throw ConfigError("pas csv: expected header link_id,angle_deg,power_linear");

    std::map<std::string, std::vector<std::pair<double, double>>> by_link;
    std::vector<std::string> order;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string id, angle, power;
        if (!std::getline(row, id, ',') || !std::getline(row, angle, ',') ||
            !std::getline(row, power))
            throw ConfigError("pas csv: malformed row at line " + std::to_string(line_no));
        try {
            if (by_link.find(id) == by_link.end()) order.push_back(id);
            by_link[id].emplace_back(std::stod(angle), std::stod(power));
        } catch (const std::exception&) {
            throw ConfigError("pas csv: bad number at line " + std::to_string(line_no));
        }
    }

    std::vector<PowerAngularSpectrum> links;
    for (const auto& id : order) {
        auto rows = by_link[id];
        std::sort(rows.begin(), rows.end());
        PowerAngularSpectrum pas;
        pas.link_id = id;
        for (const auto& [a, p] : rows) {
            pas.angles_deg.push_back(a);
            pas.power.push_back(p);
        }
        pas.validate();
        links.push_back(std::move(pas));
    }
    return links;
}

ParsedJob parse_config(const RunConfig& rc) {
    std::string text = "{}";
    if (!rc.config_path.empty()) text = read_file(rc.config_path);
    return parse_config_text(rc, text);
}

ParsedJob parse_config_text(const RunConfig& rc, const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config: expected a JSON object");

    static const std::set<std::string> kSections = {"spectrum", "array", "tradeoff", "pas", "ris"};
    for (const auto& item : doc.items())
        if (item.key() != "seed" && kSections.count(item.key()) == 0)
            throw ConfigError("unknown key: " + item.key());

    ParsedJob parsed;
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_integer()) throw ConfigError("seed: expected an integer");
        parsed.seed = doc["seed"].get<uint64_t>();
    }
    if (rc.seed.has_value()) parsed.seed = *rc.seed;

    const std::string section_name = to_string(rc.subcommand);
    json section = doc.contains(section_name) ? doc[section_name] : json::object();
    for (const auto& assignment : rc.overrides)
        apply_override(section, assignment, section_name);

    json effective;
    effective["seed"] = parsed.seed;
    switch (rc.subcommand) {
        case Subcommand::spectrum: {
            auto job = read_spectrum(section, nullptr);
            effective[section_name] = spectrum_to_json(job);
            parsed.job = std::move(job);
            break;
        }
        case Subcommand::array: {
            auto job = read_array(section);
            effective[section_name] = array_to_json(job);
            parsed.job = std::move(job);
            break;
        }
        case Subcommand::tradeoff: {
            auto job = read_tradeoff(section);
            effective[section_name] = tradeoff_to_json(job);
            parsed.job = std::move(job);
            break;
        }
        case Subcommand::pas: {
            auto job = read_pas(section, rc.pas_synthetic);
            effective[section_name] = pas_to_json(job);
            parsed.job = std::move(job);
            break;
        }
        case Subcommand::ris: {
            auto job = read_ris(section, rc.ris_compare);
            effective[section_name] = ris_to_json(job);
            parsed.job = std::move(job);
            break;
        }
    }
    parsed.effective_json = effective.dump(2) + "\n";
    return parsed;
}

}  // namespace fr3
