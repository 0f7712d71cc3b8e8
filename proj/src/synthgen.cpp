#include "swv/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "swv/util.hpp"

namespace swv {

namespace {

// Per-well parameter set; well B gets a drifted copy.
struct WellParams {
    double gr_sand = 0.0;
    double gr_shale = 0.0;
    double porosity_surface = 0.0;
    double porosity_shale_factor = 0.0;
    double rho_matrix_sand = 0.0;
    double rho_matrix_shale = 0.0;
    double nphi_shale_excess = 0.0;
    double dt_base = 0.0;
    double dt_porosity = 0.0;
    double dt_shale = 0.0;
    double dt_interaction = 0.0;
    double res_log_mean = 0.0;
};

WellParams base_params(const SynthConfig& cfg) {
    return {cfg.gr_sand,          cfg.gr_shale,       cfg.porosity_surface,
            cfg.porosity_shale_factor, cfg.rho_matrix_sand, cfg.rho_matrix_shale,
            cfg.nphi_shale_excess, cfg.dt_base,        cfg.dt_porosity,
            cfg.dt_shale,          cfg.dt_interaction, cfg.res_log_mean};
}

WellParams drifted_params(const SynthConfig& cfg) {
    WellParams p = base_params(cfg);
    Rng rng(derive_seed(cfg.seed, "drift"));
    // Fixed field order keeps the draw sequence stable.
    for (double* v : {&p.gr_sand, &p.gr_shale, &p.porosity_surface, &p.porosity_shale_factor,
                      &p.rho_matrix_sand, &p.rho_matrix_shale, &p.nphi_shale_excess, &p.dt_base,
                      &p.dt_porosity, &p.dt_shale, &p.dt_interaction, &p.res_log_mean}) {
        *v *= 1.0 + cfg.well_drift * rng.uniform(-1.0, 1.0);
    }
    return p;
}

// First-order autoregressive stream with stationary standard deviation sd.
class Ar1 {
public:
    Ar1(double rho, double sd, Rng& rng) : rho_(rho), scale_(sd * std::sqrt(1.0 - rho * rho)),
                                           rng_(rng), state_(sd * rng.normal()) {}
    double next() {
        state_ = rho_ * state_ + scale_ * rng_.normal();
        return state_;
    }

private:
    double rho_;
    double scale_;
    Rng& rng_;
    double state_;
};

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

// Shale volume per sample: alternating sand/shale layers of random thickness,
// blended across boundaries over +/- transition_half_width.
std::vector<double> shale_profile(const SynthConfig& cfg, const std::vector<double>& depth,
                                  Rng& rng) {
    std::vector<double> tops;
    std::vector<double> core;
    bool shale = rng.uniform01() < 0.5;
    double z = depth.front();
    while (z < depth.back() + cfg.layer_thickness_max) {
        tops.push_back(z);
        core.push_back(shale ? rng.uniform(0.75, 0.97) : rng.uniform(0.03, 0.20));
        z += rng.uniform(cfg.layer_thickness_min, cfg.layer_thickness_max);
        shale = !shale;
    }

    std::vector<double> out(depth.size());
    const double w = cfg.transition_half_width;
    std::size_t k = 0;
    for (std::size_t i = 0; i < depth.size(); ++i) {
        const double zd = depth[i];
        while (k + 1 < tops.size() && zd >= tops[k + 1]) ++k;
        double v = core[k];
        if (w > 0.0) {
            if (k + 1 < tops.size() && zd > tops[k + 1] - w) {
                const double t = (zd - (tops[k + 1] - w)) / (2.0 * w);
                v = core[k] + (core[k + 1] - core[k]) * smoothstep(t);
            } else if (k > 0 && zd < tops[k] + w) {
                const double t = (zd - (tops[k] - w)) / (2.0 * w);
                v = core[k - 1] + (core[k] - core[k - 1]) * smoothstep(t);
            }
        }
        out[i] = v;
    }
    return out;
}

void inject_missing(std::vector<double>& samples, double fraction, Rng& rng) {
    for (double& v : samples) {
        if (rng.uniform01() < fraction) v = std::numeric_limits<double>::quiet_NaN();
    }
}

WellLog generate_well(const SynthConfig& cfg, const WellParams& p, const std::string& label) {
    const auto n = static_cast<std::size_t>(cfg.n_samples);
    std::vector<double> depth(n);
    for (std::size_t i = 0; i < n; ++i) depth[i] = cfg.depth_start + cfg.depth_step * static_cast<double>(i);

    Rng layer_rng(derive_seed(cfg.seed, label + "/layers"));
    Rng phi_rng(derive_seed(cfg.seed, label + "/phi"));
    Rng res_rng(derive_seed(cfg.seed, label + "/res"));
    Rng gr_rng(derive_seed(cfg.seed, label + "/noise/gr"));
    Rng nphi_rng(derive_seed(cfg.seed, label + "/noise/nphi"));
    Rng rhob_rng(derive_seed(cfg.seed, label + "/noise/rhob"));
    Rng dt_rng(derive_seed(cfg.seed, label + "/noise/dt"));
    Rng reslog_rng(derive_seed(cfg.seed, label + "/noise/res"));

    const std::vector<double> vsh = shale_profile(cfg, depth, layer_rng);
    Ar1 phi_wiggle(0.95, cfg.porosity_noise, phi_rng);
    Ar1 res_walk(0.985, cfg.res_log_sd, res_rng);

    std::vector<double> gr(n), nphi(n), rhob(n), dt(n), res(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double v = vsh[i];
        const double phi_trend = p.porosity_surface * std::exp(-depth[i] / cfg.porosity_decay) *
                                 (1.0 - p.porosity_shale_factor * v);
        const double phi = std::clamp(phi_trend + phi_wiggle.next(), 0.01, 0.40);

        const double dt_clean = p.dt_base + p.dt_porosity * phi + p.dt_shale * v +
                                p.dt_interaction * phi * v +
                                cfg.dt_depth_slope * (depth[i] - cfg.depth_start);
        dt[i] = std::clamp(dt_clean + cfg.noise_dt * dt_rng.normal(), 42.0, 280.0);

        gr[i] = std::clamp(p.gr_sand + (p.gr_shale - p.gr_sand) * v + cfg.noise_gr * gr_rng.normal(),
                           0.0, 400.0);
        nphi[i] = std::clamp(phi + p.nphi_shale_excess * v + cfg.noise_nphi * nphi_rng.normal(),
                             -0.04, 0.98);

        const double rho_matrix = p.rho_matrix_sand + (p.rho_matrix_shale - p.rho_matrix_sand) * v;
        rhob[i] = std::clamp((1.0 - phi) * rho_matrix + phi * cfg.rho_fluid +
                                 cfg.noise_rhob * rhob_rng.normal(),
                             1.05, 3.45);

        const double res_log = std::clamp(p.res_log_mean + res_walk.next() +
                                              cfg.res_shale_slope * v +
                                              cfg.noise_res_log * reslog_rng.normal(),
                                          -1.0, 3.5);
        res[i] = std::pow(10.0, res_log);
    }

    Rng miss_gr(derive_seed(cfg.seed, label + "/missing/gr"));
    Rng miss_nphi(derive_seed(cfg.seed, label + "/missing/nphi"));
    Rng miss_rhob(derive_seed(cfg.seed, label + "/missing/rhob"));
    Rng miss_dt(derive_seed(cfg.seed, label + "/missing/dt"));
    Rng miss_res(derive_seed(cfg.seed, label + "/missing/res"));
    inject_missing(gr, cfg.missing_fraction, miss_gr);
    inject_missing(nphi, cfg.missing_fraction, miss_nphi);
    inject_missing(rhob, cfg.missing_fraction, miss_rhob);
    inject_missing(dt, cfg.missing_fraction, miss_dt);
    inject_missing(res, cfg.missing_fraction, miss_res);

    WellLog log;
    log.well_name = "SYNTH-" + label;
    log.depth_unit = "M";
    log.depth = std::move(depth);
    log.curves = {
        {"GR", "GAPI", "Gamma ray", std::move(gr)},
        {"NPHI", "V/V", "Neutron porosity", std::move(nphi)},
        {"RHOB", "G/C3", "Bulk density", std::move(rhob)},
        {"DT", "US/F", "Compressional sonic slowness", std::move(dt)},
        {"RES", "OHMM", "Deep resistivity", std::move(res)},
    };
    return log;
}

}  // namespace

void validate_synth_config(const SynthConfig& cfg) {
    if (cfg.n_samples < 10) throw std::invalid_argument("n_samples must be at least 10");
    if (!(cfg.depth_step > 0.0)) throw std::invalid_argument("depth_step must be positive");
    if (!(cfg.layer_thickness_min > 0.0) || cfg.layer_thickness_max < cfg.layer_thickness_min) {
        throw std::invalid_argument("layer thickness range must be positive and ordered");
    }
    if (cfg.transition_half_width < 0.0 ||
        cfg.transition_half_width * 2.0 > cfg.layer_thickness_min) {
        throw std::invalid_argument(
            "transition_half_width must be non-negative and at most half the minimum "
            "layer thickness");
    }
    if (!(cfg.porosity_surface > 0.0 && cfg.porosity_surface <= 0.45)) {
        throw std::invalid_argument("porosity_surface must lie in (0, 0.45]");
    }
    if (!(cfg.porosity_decay > 0.0)) throw std::invalid_argument("porosity_decay must be positive");
    if (cfg.porosity_shale_factor < 0.0 || cfg.porosity_shale_factor > 1.0) {
        throw std::invalid_argument("porosity_shale_factor must lie in [0, 1]");
    }
    if (cfg.gr_shale <= cfg.gr_sand) {
        throw std::invalid_argument("gr_shale must exceed gr_sand");
    }
    for (double sd : {cfg.porosity_noise, cfg.noise_gr, cfg.noise_nphi, cfg.noise_rhob,
                      cfg.noise_dt, cfg.noise_res_log, cfg.res_log_sd}) {
        if (sd < 0.0) throw std::invalid_argument("noise standard deviations must be non-negative");
    }
    if (cfg.missing_fraction < 0.0 || cfg.missing_fraction > 1.0) {
        throw std::invalid_argument("missing_fraction must lie in [0, 1]");
    }
    if (cfg.well_drift < 0.0 || cfg.well_drift > 1.0) {
        throw std::invalid_argument("well_drift must lie in [0, 1]");
    }
}

std::pair<WellLog, WellLog> generate_field(const SynthConfig& cfg) {
    validate_synth_config(cfg);
    WellLog a = generate_well(cfg, base_params(cfg), "A");
    WellLog b = generate_well(cfg, drifted_params(cfg), "B");
    return {std::move(a), std::move(b)};
}

}  // namespace swv
