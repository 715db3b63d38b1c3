// SPDX-License-Identifier: Apache-2.0
#include "fr3kit/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "fr3kit/errors.hpp"

namespace fr3 {

std::string to_string(BandStatus s) {
    switch (s) {
        case BandStatus::allocated: return "allocated";
        case BandStatus::conditional: return "conditional";
        case BandStatus::study: return "study";
        case BandStatus::fr_definition: return "fr-definition";
    }
    return "?";
}

std::string to_string(FrClass c) {
    switch (c) {
        case FrClass::fr1: return "FR1";
        case FrClass::fr2: return "FR2";
        case FrClass::fr3: return "FR3";
        case FrClass::unclassified: return "unclassified";
    }
    return "?";
}

std::string to_string(AggregationMode m) {
    return m == AggregationMode::contiguous ? "contiguous" : "non-contiguous";
}

BandStatus band_status_from_string(const std::string& s) {
    if (s == "allocated") return BandStatus::allocated;
    if (s == "conditional") return BandStatus::conditional;
    if (s == "study") return BandStatus::study;
    if (s == "fr-definition") return BandStatus::fr_definition;
    throw ConfigError("unknown band status: " + s);
}

AggregationMode aggregation_mode_from_string(const std::string& s) {
    if (s == "contiguous") return AggregationMode::contiguous;
    if (s == "non-contiguous") return AggregationMode::non_contiguous;
    throw ConfigError("unknown aggregation mode: " + s);
}

namespace {

void validate_band(const FrequencyBand& b) {
    if (b.label.empty()) throw ConfigError("band label must not be empty");
    if (!(b.low_hz > 0.0) || !(b.high_hz > 0.0) || !(b.low_hz < b.high_hz))
        throw ConfigError("band " + b.label + ": requires 0 < low < high");
}

}  // namespace

BandPlan::BandPlan(std::vector<FrequencyBand> bands) : bands_(std::move(bands)) {
    std::unordered_set<std::string> labels;
    for (const auto& b : bands_) {
        validate_band(b);
        if (!labels.insert(b.label).second)
            throw ConfigError("duplicate band label: " + b.label);
    }
    std::sort(bands_.begin(), bands_.end(), [](const FrequencyBand& a, const FrequencyBand& b) {
        return a.low_hz != b.low_hz ? a.low_hz < b.low_hz : a.high_hz < b.high_hz;
    });
    const FrequencyBand* prev = nullptr;
    for (const auto& b : bands_) {
        if (b.status != BandStatus::fr_definition) continue;
        if (prev != nullptr && b.low_hz < prev->high_hz)
            throw ConfigError("fr-definition bands overlap: " + prev->label + " and " + b.label);
        prev = &b;
    }
}

const FrequencyBand* BandPlan::find(const std::string& label) const {
    for (const auto& b : bands_)
        if (b.label == label) return &b;
    return nullptr;
}

BandPlan BandPlan::builtin_default() {
    const std::vector<std::string> imt = {"IMT"};
    std::vector<FrequencyBand> bands = {
        {"FR1", 450e6, 6e9, BandStatus::fr_definition, imt},
        {"FR3", 7.125e9, 24.25e9, BandStatus::fr_definition, imt},
        {"FR2", 24.25e9, 52.6e9, BandStatus::fr_definition, imt},
        // WRC-23 identification below the FR3 floor; kept out of the
        // mobile-primary total so the allocated sum stays the 9.275 GHz
        // aggregate of the six bands that follow.
        {"6.4GHz-IMT", 6.425e9, 7.125e9, BandStatus::conditional, imt},
        {"7GHz-mobile", 7.125e9, 8.4e9, BandStatus::allocated, imt},
        {"10GHz-mobile", 10e9, 10.5e9, BandStatus::allocated, imt},
        {"11GHz-mobile", 10.7e9, 13.25e9, BandStatus::allocated, {"IMT", "satellite-downlink"}},
        {"15GHz-mobile", 14.8e9, 15.35e9, BandStatus::allocated, imt},
        {"18GHz-mobile", 17.7e9, 19.7e9, BandStatus::allocated, {"IMT", "satellite-downlink"}},
        {"22GHz-mobile", 21.2e9, 23.6e9, BandStatus::allocated, imt},
    };
    return BandPlan(std::move(bands));
}

FrClass classify_fr(double frequency_hz, const BandPlan& plan) {
    if (!(frequency_hz > 0.0)) throw DomainError("classify_fr: frequency must be positive");

    const FrequencyBand* fr[3] = {nullptr, nullptr, nullptr};
    for (const auto& b : plan.bands()) {
        if (b.status != BandStatus::fr_definition) continue;
        if (b.label == "FR1") fr[0] = &b;
        else if (b.label == "FR2") fr[1] = &b;
        else if (b.label == "FR3") fr[2] = &b;
    }
    if (fr[0] == nullptr || fr[1] == nullptr || fr[2] == nullptr)
        throw ConfigError("plan lacks the FR1/FR2/FR3 fr-definition bands");

    double top_high = 0.0;
    for (const auto* b : fr) top_high = std::max(top_high, b->high_hz);

    const FrClass classes[3] = {FrClass::fr1, FrClass::fr2, FrClass::fr3};
    for (int i = 0; i < 3; ++i) {
        const auto* b = fr[i];
        const bool topmost = b->high_hz == top_high;
        if (frequency_hz >= b->low_hz &&
            (frequency_hz < b->high_hz || (topmost && frequency_hz <= b->high_hz)))
            return classes[i];
    }
    return FrClass::unclassified;
}

std::vector<std::pair<double, double>> merge_intervals(std::vector<std::pair<double, double>> intervals) {
    std::sort(intervals.begin(), intervals.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& iv : intervals) {
        if (!merged.empty() && iv.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, iv.second);
        else
            merged.push_back(iv);
    }
    return merged;
}

double total_identified_bandwidth(const BandPlan& plan, const std::set<BandStatus>& status_filter) {
    std::vector<std::pair<double, double>> intervals;
    for (const auto& b : plan.bands())
        if (status_filter.count(b.status) != 0) intervals.emplace_back(b.low_hz, b.high_hz);
    double total = 0.0;
    for (const auto& iv : merge_intervals(std::move(intervals))) total += iv.second - iv.first;
    return total;
}

AggregationResult aggregate(const AggregationScheme& scheme, double speed_of_light) {
    if (scheme.carriers.empty()) throw InvalidSchemeError("aggregation scheme has no carriers");

    std::vector<std::pair<double, double>> intervals;
    double lo = scheme.carriers.front().low_hz;
    double hi = scheme.carriers.front().high_hz;
    for (const auto& c : scheme.carriers) {
        validate_band(c);
        intervals.emplace_back(c.low_hz, c.high_hz);
        lo = std::min(lo, c.low_hz);
        hi = std::max(hi, c.high_hz);
    }
    const auto merged = merge_intervals(std::move(intervals));
    if (scheme.mode == AggregationMode::contiguous && merged.size() > 1)
        throw ModeMismatchError("contiguous scheme has a gap between carriers");

    AggregationResult res;
    res.aperture_hz = hi - lo;
    for (const auto& iv : merged) res.occupied_hz += iv.second - iv.first;
    res.sparsity = res.occupied_hz / res.aperture_hz;
    res.delay_resolution_s = 1.0 / res.aperture_hz;
    res.range_resolution_m = speed_of_light / (2.0 * res.aperture_hz);
    return res;
}

}  // namespace fr3
