// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "fr3kit/units.hpp"

namespace fr3 {

enum class ArrayKind { ula, ura };
enum class PitchRule { half_wavelength, full_wavelength };
enum class PatternPlane { azimuth, elevation };

std::string to_string(ArrayKind k);
std::string to_string(PitchRule r);
ArrayKind array_kind_from_string(const std::string& s);
PitchRule pitch_rule_from_string(const std::string& s);

/// Uniformly weighted array of isotropic elements on a rectangular lattice.
/// The x axis carries n_x elements (azimuth plane), the y axis n_y; a ULA has
/// n_y = 1. Broadside is the +z direction; azimuth angles are measured from
/// broadside in degrees.
struct ArrayGeometry {
    ArrayKind kind = ArrayKind::ula;
    int n_x = 1;
    int n_y = 1;
    double spacing_m = 0.0;
    double frequency_hz = 0.0;

    double wavelength_m() const { return fr3::wavelength_m(frequency_hz); }
    int total_elements() const { return n_x * n_y; }
};

ArrayGeometry make_ula(int n, double frequency_hz);
ArrayGeometry make_ula(int n, double frequency_hz, double spacing_m);
ArrayGeometry make_ura(int n_x, int n_y, double frequency_hz);
ArrayGeometry make_ura(int n_x, int n_y, double frequency_hz, double spacing_m);

/// Element count per side for a fixed aperture side length.
/// half_wavelength: floor(L / (lambda/2)) + 1, elements spanning at most the
/// aperture; full_wavelength: floor(L / lambda), 0 flags a degenerate fit.
/// Pitch ratios within 0.5% of the next integer are treated as exact fits
/// (apertures are typically quoted to three significant digits).
int elements_for_aperture(double aperture_side_m, double frequency_hz, PitchRule rule);

/// Geometry whose per-side count comes from elements_for_aperture.
ArrayGeometry geometry_for_aperture(double aperture_side_m, double frequency_hz, PitchRule rule,
                                    ArrayKind kind);

/// Steered power gain in the azimuth plane, |AF|^2 scaled so the peak
/// (arrival = steer) equals the linear broadside directivity. Symmetric in
/// (steer, arrival) for a ULA.
double array_power_gain(const ArrayGeometry& geometry, double steer_deg, double arrival_deg);

/// Full-sphere power gain at broadside steer, same normalization as
/// array_power_gain. Azimuth and elevation in degrees from broadside.
double sphere_power_gain(const ArrayGeometry& geometry, double az_deg, double el_deg);

/// Directivity in dBi via midpoint quadrature over the full sphere, checked
/// against one grid refinement; disagreement above 1% raises
/// ConvergenceError.
double directivity_dbi(const ArrayGeometry& geometry, double grid_deg = 0.5);

/// Half-power beamwidth of the broadside pattern cut in the given plane,
/// found by bisection between the two -3 dB crossings. Patterns that never
/// fall 3 dB below the peak within +/-90 deg raise BeamwidthUndefinedError.
double hpbw_deg(const ArrayGeometry& geometry, PatternPlane plane = PatternPlane::azimuth);

/// Half-power beamwidth of a uniformly excited line aperture of the given
/// side length: the element-count-free limit 2*asin(0.443 * lambda / L).
double aperture_hpbw_deg(double aperture_side_m, double frequency_hz);

/// Power pattern sampled over an arrival grid at a fixed steer, with the
/// derived beam metrics attached.
struct BeamPattern {
    double steer_deg = 0.0;
    std::vector<double> arrival_deg;
    std::vector<double> gains;  // linear power gain per arrival angle
    double hpbw_deg = 0.0;
    double directivity_dbi = 0.0;
};

BeamPattern sample_pattern(const ArrayGeometry& geometry, double steer_deg,
                           const std::vector<double>& arrival_deg);

}  // namespace fr3
