// SPDX-License-Identifier: Apache-2.0
#include "fr3kit/array.hpp"

#include <algorithm>
#include <cmath>

#include "fr3kit/errors.hpp"

namespace fr3 {

std::string to_string(ArrayKind k) { return k == ArrayKind::ula ? "ULA" : "URA"; }

std::string to_string(PitchRule r) {
    return r == PitchRule::half_wavelength ? "half_wavelength" : "full_wavelength";
}

ArrayKind array_kind_from_string(const std::string& s) {
    if (s == "ULA" || s == "ula") return ArrayKind::ula;
    if (s == "URA" || s == "ura") return ArrayKind::ura;
    throw ConfigError("unknown array kind: " + s);
}

PitchRule pitch_rule_from_string(const std::string& s) {
    if (s == "half_wavelength") return PitchRule::half_wavelength;
    if (s == "full_wavelength") return PitchRule::full_wavelength;
    throw ConfigError("unknown pitch rule: " + s);
}

namespace {

void validate_geometry(const ArrayGeometry& g) {
    if (g.n_x < 1 || g.n_y < 1) throw DomainError("array: element counts must be >= 1");
    if (!(g.spacing_m > 0.0) && g.total_elements() > 1)
        throw DomainError("array: spacing must be positive");
    if (!(g.frequency_hz > 0.0)) throw DomainError("array: frequency must be positive");
}

/// |sin(n x) / (n sin x)|^2 with its removable singularities filled in.
double af_power(int n, double x) {
    if (n == 1) return 1.0;
    const double s = std::sin(x);
    if (std::abs(s) < 1e-12) return 1.0;
    const double v = std::sin(n * x) / (n * s);
    return v * v;
}

/// Exact broadside directivity of the uniform lattice, from the pairwise
/// element-separation sum aggregated over lattice offsets.
double directivity_linear(const ArrayGeometry& g) {
    const double kd = 2.0 * kPi * g.spacing_m / g.wavelength_m();
    double denom = 0.0;
    for (int m = -(g.n_x - 1); m <= g.n_x - 1; ++m) {
        for (int n = -(g.n_y - 1); n <= g.n_y - 1; ++n) {
            const double mult = static_cast<double>(g.n_x - std::abs(m)) * (g.n_y - std::abs(n));
            denom += mult * sinc(kd * std::hypot(static_cast<double>(m), static_cast<double>(n)));
        }
    }
    const double n_tot = g.total_elements();
    return n_tot * n_tot / denom;
}

double plane_cut_af(const ArrayGeometry& g, int n_axis, double angle_deg) {
    const double x = kPi * g.spacing_m / g.wavelength_m() * std::sin(deg2rad(angle_deg));
    return af_power(n_axis, x);
}

}  // namespace

ArrayGeometry make_ula(int n, double frequency_hz) {
    return make_ula(n, frequency_hz, 0.5 * wavelength_m(frequency_hz));
}

ArrayGeometry make_ula(int n, double frequency_hz, double spacing_m) {
    ArrayGeometry g{ArrayKind::ula, n, 1, spacing_m, frequency_hz};
    validate_geometry(g);
    return g;
}

ArrayGeometry make_ura(int n_x, int n_y, double frequency_hz) {
    return make_ura(n_x, n_y, frequency_hz, 0.5 * wavelength_m(frequency_hz));
}

ArrayGeometry make_ura(int n_x, int n_y, double frequency_hz, double spacing_m) {
    ArrayGeometry g{ArrayKind::ura, n_x, n_y, spacing_m, frequency_hz};
    validate_geometry(g);
    return g;
}

int elements_for_aperture(double aperture_side_m, double frequency_hz, PitchRule rule) {
    if (!(aperture_side_m > 0.0)) throw DomainError("aperture side must be positive");
    if (!(frequency_hz > 0.0)) throw DomainError("frequency must be positive");

    const double lambda = wavelength_m(frequency_hz);
    const double pitch = rule == PitchRule::half_wavelength ? 0.5 * lambda : lambda;

    double ratio = aperture_side_m / pitch;
    const double up = std::ceil(ratio);
    if (up - ratio <= 5e-3 * up) ratio = up;  // integer-snap for rounded apertures

    const int units = static_cast<int>(std::floor(ratio));
    return rule == PitchRule::half_wavelength ? units + 1 : units;
}

ArrayGeometry geometry_for_aperture(double aperture_side_m, double frequency_hz, PitchRule rule,
                                    ArrayKind kind) {
    const int n = elements_for_aperture(aperture_side_m, frequency_hz, rule);
    if (n < 1) throw ApertureTooSmallError("aperture smaller than one element pitch");
    const double lambda = wavelength_m(frequency_hz);
    const double pitch = rule == PitchRule::half_wavelength ? 0.5 * lambda : lambda;
    return kind == ArrayKind::ula ? make_ula(n, frequency_hz, pitch)
                                  : make_ura(n, n, frequency_hz, pitch);
}

double array_power_gain(const ArrayGeometry& geometry, double steer_deg, double arrival_deg) {
    validate_geometry(geometry);
    const double du = std::sin(deg2rad(arrival_deg)) - std::sin(deg2rad(steer_deg));
    const double x = kPi * geometry.spacing_m / geometry.wavelength_m() * du;
    return af_power(geometry.n_x, x) * directivity_linear(geometry);
}

double sphere_power_gain(const ArrayGeometry& geometry, double az_deg, double el_deg) {
    validate_geometry(geometry);
    const double u = std::sin(deg2rad(az_deg)) * std::cos(deg2rad(el_deg));
    const double v = std::sin(deg2rad(el_deg));
    const double scale = kPi * geometry.spacing_m / geometry.wavelength_m();
    return af_power(geometry.n_x, scale * u) * af_power(geometry.n_y, scale * v) *
           directivity_linear(geometry);
}

namespace {

/// Midpoint quadrature of the normalized power pattern over the full sphere.
double pattern_integral(const ArrayGeometry& g, double grid_deg) {
    const double scale = kPi * g.spacing_m / g.wavelength_m();
    const double h = deg2rad(grid_deg);
    const int n_theta = static_cast<int>(std::ceil(kPi / h));
    const int n_phi = static_cast<int>(std::ceil(2.0 * kPi / h));
    const double dt = kPi / n_theta;
    const double dp = 2.0 * kPi / n_phi;

    double integral = 0.0;
    for (int i = 0; i < n_theta; ++i) {
        const double theta = (i + 0.5) * dt;
        const double st = std::sin(theta);
        double ring = 0.0;
        for (int j = 0; j < n_phi; ++j) {
            const double phi = (j + 0.5) * dp;
            const double u = st * std::cos(phi);
            const double v = st * std::sin(phi);
            ring += af_power(g.n_x, scale * u) * af_power(g.n_y, scale * v);
        }
        integral += ring * st * dt * dp;
    }
    return integral;
}

}  // namespace

double directivity_dbi(const ArrayGeometry& geometry, double grid_deg) {
    validate_geometry(geometry);
    if (!(grid_deg > 0.0) || grid_deg > 0.5)
        throw DomainError("directivity: integration grid must be in (0, 0.5] deg");

    const double coarse = pattern_integral(geometry, grid_deg);
    const double fine = pattern_integral(geometry, 0.5 * grid_deg);
    if (std::abs(coarse - fine) > 0.01 * fine)
        throw ConvergenceError("directivity integration did not settle under grid refinement");
    return linear_to_db(4.0 * kPi / fine);
}

double hpbw_deg(const ArrayGeometry& geometry, PatternPlane plane) {
    validate_geometry(geometry);
    const int n_axis = plane == PatternPlane::azimuth ? geometry.n_x : geometry.n_y;
    if (n_axis == 1)
        throw BeamwidthUndefinedError("pattern cut is isotropic; no -3 dB crossing");

    // March outward from broadside with a step well below the expected main
    // lobe width, then bisect the first half-power bracket.
    const double lobe_estimate_deg =
        rad2deg(0.886 * geometry.wavelength_m() / (n_axis * geometry.spacing_m));
    const double step = std::clamp(lobe_estimate_deg / 16.0, 1e-4, 0.1);

    double lo = 0.0;
    double hi = -1.0;
    for (double a = step; a <= 90.0 + step; a += step) {
        const double angle = std::min(a, 90.0);
        if (plane_cut_af(geometry, n_axis, angle) < 0.5) {
            hi = angle;
            break;
        }
        lo = angle;
        if (angle >= 90.0) break;
    }
    if (hi < 0.0)
        throw BeamwidthUndefinedError("no -3 dB crossing within +/-90 deg of broadside");

    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (plane_cut_af(geometry, n_axis, mid) >= 0.5 ? lo : hi) = mid;
    }
    return lo + hi;  // symmetric about broadside
}

double aperture_hpbw_deg(double aperture_side_m, double frequency_hz) {
    if (!(aperture_side_m > 0.0)) throw DomainError("aperture side must be positive");
    if (!(frequency_hz > 0.0)) throw DomainError("frequency must be positive");

    // Half-power abscissa of sin(x)/x, solved once.
    static const double x_half = [] {
        double lo = 1.0, hi = 2.0;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (sinc(mid) > std::sqrt(0.5) ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }();

    const double u = x_half / kPi * wavelength_m(frequency_hz) / aperture_side_m;
    if (u >= 1.0)
        throw BeamwidthUndefinedError("sub-wavelength aperture: no -3 dB crossing in the visible region");
    return 2.0 * rad2deg(std::asin(u));
}

BeamPattern sample_pattern(const ArrayGeometry& geometry, double steer_deg,
                           const std::vector<double>& arrival_deg) {
    BeamPattern p;
    p.steer_deg = steer_deg;
    p.arrival_deg = arrival_deg;
    p.gains.reserve(arrival_deg.size());
    for (double a : arrival_deg) p.gains.push_back(array_power_gain(geometry, steer_deg, a));
    p.hpbw_deg = hpbw_deg(geometry, PatternPlane::azimuth);
    p.directivity_dbi = directivity_dbi(geometry);
    return p;
}

}  // namespace fr3
