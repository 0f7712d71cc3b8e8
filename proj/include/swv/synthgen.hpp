#pragma once
// Seeded generator for a two-well synthetic field: layered sand/shale
// columns with consistent GR/NPHI/RHOB/DT/RES responses, a nonlinear sonic
// ground truth, parameter drift between wells and injected null samples.

#include <cstdint>
#include <utility>

#include "swv/well_log.hpp"

namespace swv {

struct SynthConfig {
    std::uint64_t seed = 8;
    int n_samples = 1200;  // per well
    double depth_start = 1500.0;  // m
    double depth_step = 0.5;      // m

    // layering
    double layer_thickness_min = 4.0;   // m
    double layer_thickness_max = 28.0;  // m
    double transition_half_width = 1.2; // m, smoothstep blend at boundaries

    // porosity model: surface value decaying with depth, reduced in shale
    double porosity_surface = 0.36;
    double porosity_decay = 2800.0;  // e-folding depth, m
    double porosity_shale_factor = 0.5;
    double porosity_noise = 0.008;  // correlated wiggle, v/v

    // lithology end-member responses
    double gr_sand = 22.0;    // API
    double gr_shale = 140.0;  // API
    double rho_matrix_sand = 2.65;   // g/cm3
    double rho_matrix_shale = 2.58;  // g/cm3
    double rho_fluid = 1.0;          // g/cm3
    double nphi_shale_excess = 0.25; // v/v apparent porosity added by clay

    // sonic ground truth (us/ft), nonlinear through the interaction term
    double dt_base = 57.0;
    double dt_porosity = 125.0;
    double dt_shale = 42.0;
    double dt_interaction = 250.0;
    double dt_depth_slope = -0.012;  // per m below depth_start

    // resistivity: slow random walk in log10 ohmm, weakly tied to lithology
    double res_log_mean = 1.0;
    double res_log_sd = 0.35;
    double res_shale_slope = -0.25;

    // independent Gaussian measurement noise per curve
    double noise_gr = 9.0;       // API
    double noise_nphi = 0.010;   // v/v
    double noise_rhob = 0.015;   // g/cm3
    double noise_dt = 2.5;      // us/ft
    double noise_res_log = 0.05; // log10 ohmm

    double missing_fraction = 0.02;  // per curve, per sample
    double well_drift = 0.10;  // relative shift of well B parameter means
};

void validate_synth_config(const SynthConfig& cfg);

// Deterministic under cfg.seed; wells SYNTH-A and SYNTH-B.
std::pair<WellLog, WellLog> generate_field(const SynthConfig& cfg);

}  // namespace swv
