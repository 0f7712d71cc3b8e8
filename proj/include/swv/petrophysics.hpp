#pragma once
// Closed-form petrophysical and elastic relations: dynamic moduli, sonic
// velocity conversions, the Castagna mudrock line, shale volume and the
// porosity responses. All pure functions; math domain violations throw
// std::domain_error.

#include <span>
#include <stdexcept>
#include <vector>

namespace swv {

// Unit factor tying (ft/us)^2 * g/cm3 to psi in the dynamic-moduli relations.
inline constexpr double kModulusUnitFactor = 1.34e10;

// 1 ft/us = 304.8 km/s
inline constexpr double kFtPerUsToKmPerS = 304.8;

inline double ftus_to_kms(double v) { return v * kFtPerUsToKmPerS; }
inline double kms_to_ftus(double v) { return v / kFtPerUsToKmPerS; }

// DT in us/ft -> compressional velocity in km/s
double vp_from_dt(double dt_us_per_ft);

struct CastagnaCoefficients {
    double slope = 0.80416;
    double intercept = 0.85588;
};

// Mudrock line Vs = slope*Vp - intercept, both in km/s. Negative outputs are
// returned as-is; callers decide whether to discard them.
double castagna_vs(double vp_km_s, const CastagnaCoefficients& c = {});

// Vp below which the mudrock line goes non-positive.
double castagna_vp_floor(const CastagnaCoefficients& c = {});

struct ElasticModuli {
    double young = 0.0;          // E, psi
    double bulk = 0.0;           // K, psi
    double shear = 0.0;          // G, psi
    double compressibility = 0;  // C = 1/K, 1/psi
    double poisson = 0.0;        // nu, dimensionless
    double constrained = 0.0;    // M = K + 4G/3, psi
    double lame_lambda = 0.0;    // lambda = K - 2G/3, psi
};

struct VelocityPair {
    double vp = 0.0;
    double vs = 0.0;
};

// Velocities in ft/us, density in g/cm3, moduli in psi.
ElasticModuli moduli_from_velocities(double vp_ftus, double vs_ftus, double rho_g_cm3);

// Inverse of moduli_from_velocities under the default unit factor:
// vp = sqrt(M / (unit_factor * rho)), vs = sqrt(G / (unit_factor * rho)).
// Pass unit_factor = 1 for moduli already in velocity-squared-times-density
// units (the textbook sqrt(M/rho) form).
VelocityPair velocities_from_moduli(const ElasticModuli& m, double rho_g_cm3,
                                    double unit_factor = kModulusUnitFactor);

// sqrt((1 - nu) / (0.5 - nu)); requires 0 <= nu < 0.5
double vp_vs_ratio_from_poisson(double nu);

// (gr - gr_min) / (gr_max - gr_min), clamped to [0, 1]
double gamma_ray_index(double gr_log, double gr_min, double gr_max);

// linear shale-volume model
inline double vsh_linear(double igr) { return igr; }

// time-average porosity (dt - dt_matrix) / (dt_fluid - dt_matrix)
double wyllie_porosity(double dt, double dt_matrix, double dt_fluid);

// (rho_matrix - rho_bulk) / (rho_matrix - rho_fluid)
double density_porosity(double rho_bulk, double rho_matrix, double rho_fluid);

// neutron log response from the mud-filtrate, hydrocarbon, shale and matrix
// portions; all arguments are fractions in [0, 1] with phi + vsh <= 1
double neutron_response(double phi, double sxo, double vsh, double phi_nmf, double phi_nhc,
                        double phi_sh, double phi_nma);

struct GrComponent {
    double density = 0.0;        // rho_i, g/cm3
    double volume = 0.0;         // V_i, bulk volume fraction
    double radioactivity = 0.0;  // A_i, proportionality factor
};

// sum(rho_i * V_i * A_i) / rho_bulk
double gr_response(std::span<const GrComponent> components, double rho_bulk);

struct PeComponent {
    double atomic_fraction = 0.0;  // A_i
    double atomic_number = 0.0;    // Z_i
    double proportion = 0.0;       // P_i
};

// photoelectric index sum(A_i * Z_i^4 * P_i) / sum(A_i * P_i)
double pe_index(std::span<const PeComponent> components);

}  // namespace swv
