// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fr3kit/csv.hpp"
#include "fr3kit/link_budget.hpp"
#include "fr3kit/pas.hpp"
#include "fr3kit/ris.hpp"
#include "fr3kit/spectrum.hpp"

namespace fr3 {

enum class Subcommand { spectrum, array, tradeoff, pas, ris };

std::string to_string(Subcommand s);
Subcommand subcommand_from_string(const std::string& s);

/// Invocation parameters collected by the CLI front end.
struct RunConfig {
    Subcommand subcommand = Subcommand::spectrum;
    std::filesystem::path config_path;  // empty -> built-in defaults
    std::filesystem::path out_dir = ".";
    std::optional<uint64_t> seed;       // overrides the config file's seed
    TableFormat format = TableFormat::csv;
    std::vector<std::string> overrides;  // key=value, relative to the subcommand section
    bool pas_synthetic = false;          // force synthetic mode for `pas`
    bool ris_compare = false;            // multi-configuration mode for `ris`
};

struct SpectrumJob {
    BandPlan plan;
    std::set<BandStatus> status_filter{BandStatus::allocated};
    std::vector<double> classify_hz;
    struct Scheme {
        std::string label;
        std::vector<FrequencyBand> carriers;
        AggregationMode mode = AggregationMode::non_contiguous;
    };
    std::vector<Scheme> schemes;
    double speed_of_light = kSpeedOfLight;
};

struct ArrayJob {
    double aperture_side_m = 0.0856;
    std::vector<double> frequencies_hz{3.5e9, 14e9, 28e9};
    PitchRule pitch_rule = PitchRule::half_wavelength;
    ArrayKind kind = ArrayKind::ura;
    double grid_deg = 0.5;
};

struct TradeoffJob {
    LinkScenario scenario;
    double threshold = 0.5;
};

struct PasJob {
    bool synthetic = true;
    std::filesystem::path input_dir;
    SynthEnsembleSpec synth;
    PasStudy study;
};

struct RisJob {
    RisScenario scenario;
    bool compare = false;
    std::vector<std::pair<std::string, RisScenario>> compare_set;
};

struct ParsedJob {
    uint64_t seed = 0;
    std::variant<SpectrumJob, ArrayJob, TradeoffJob, PasJob, RisJob> job;
    std::string effective_json;  // fully resolved configuration document
};

/// Loads, overrides, validates. Unknown keys are rejected with their path;
/// schema violations raise ConfigError, unreadable files IoError.
ParsedJob parse_config(const RunConfig& rc);

/// Same, from an in-memory JSON document (the config file's contents).
ParsedJob parse_config_text(const RunConfig& rc, const std::string& json_text);

/// Band-plan document: a JSON array of band objects.
BandPlan parse_band_plan_json(const std::string& json_text);

/// PAS input: CSV with header link_id,angle_deg,power_linear.
std::vector<PowerAngularSpectrum> parse_pas_csv(const std::string& csv_text);

}  // namespace fr3
