// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fr3kit/units.hpp"

namespace fr3 {

enum class BandStatus { allocated, conditional, study, fr_definition };
enum class FrClass { fr1, fr2, fr3, unclassified };
enum class AggregationMode { contiguous, non_contiguous };

std::string to_string(BandStatus s);
std::string to_string(FrClass c);
std::string to_string(AggregationMode m);
BandStatus band_status_from_string(const std::string& s);
AggregationMode aggregation_mode_from_string(const std::string& s);

/// A labeled spectrum interval with its regulatory status.
struct FrequencyBand {
    std::string label;
    double low_hz = 0.0;
    double high_hz = 0.0;
    BandStatus status = BandStatus::allocated;
    std::vector<std::string> services;

    double bandwidth_hz() const { return high_hz - low_hz; }
};

/// Immutable, ordered registry of frequency bands. Bands are sorted by
/// (low, high) on construction; FR-definition bands must not overlap each
/// other and labels must be unique.
class BandPlan {
  public:
    BandPlan() = default;
    explicit BandPlan(std::vector<FrequencyBand> bands);

    const std::vector<FrequencyBand>& bands() const { return bands_; }
    const FrequencyBand* find(const std::string& label) const;
    bool empty() const { return bands_.empty(); }

    /// The shipped registry: the FR1/FR2/FR3 range definitions, the six
    /// mobile-primary upper mid-band allocations, and the conditional
    /// 6.425-7.125 GHz identification.
    static BandPlan builtin_default();

  private:
    std::vector<FrequencyBand> bands_;
};

struct AggregationScheme {
    std::vector<FrequencyBand> carriers;
    AggregationMode mode = AggregationMode::non_contiguous;
};

struct AggregationResult {
    double aperture_hz = 0.0;         // end-to-end span of all carriers
    double occupied_hz = 0.0;         // measure of the carrier union
    double sparsity = 0.0;            // occupied / aperture, in (0, 1]
    double delay_resolution_s = 0.0;  // 1 / aperture
    double range_resolution_m = 0.0;  // c / (2 * aperture)
};

/// Classifies a frequency against the plan's FR-definition bands. Intervals
/// are closed below and open above; the topmost band also closes its high
/// end. Throws ConfigError if the plan lacks the FR1/FR2/FR3 definitions.
FrClass classify_fr(double frequency_hz, const BandPlan& plan);

/// Sum of bandwidth over bands whose status is in the filter, with
/// overlapping intervals merged before summation.
double total_identified_bandwidth(const BandPlan& plan, const std::set<BandStatus>& status_filter);

/// Aperture, occupancy and the resolution figures of a carrier set.
AggregationResult aggregate(const AggregationScheme& scheme, double speed_of_light = kSpeedOfLight);

/// Sorted union of intervals; touching intervals merge.
std::vector<std::pair<double, double>> merge_intervals(std::vector<std::pair<double, double>> intervals);

}  // namespace fr3
