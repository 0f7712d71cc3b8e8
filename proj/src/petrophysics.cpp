#include "swv/petrophysics.hpp"

#include <algorithm>
#include <cmath>

namespace swv {

double vp_from_dt(double dt_us_per_ft) {
    if (dt_us_per_ft <= 0.0) throw std::domain_error("vp_from_dt: DT must be positive");
    return kFtPerUsToKmPerS / dt_us_per_ft;
}

double castagna_vs(double vp_km_s, const CastagnaCoefficients& c) {
    return c.slope * vp_km_s - c.intercept;
}

double castagna_vp_floor(const CastagnaCoefficients& c) {
    return c.intercept / c.slope;
}

ElasticModuli moduli_from_velocities(double vp_ftus, double vs_ftus, double rho_g_cm3) {
    if (rho_g_cm3 <= 0.0) throw std::domain_error("moduli_from_velocities: density must be positive");
    if (vs_ftus < 0.0) throw std::domain_error("moduli_from_velocities: Vs must be >= 0");
    if (vp_ftus == vs_ftus) {
        throw std::domain_error("moduli_from_velocities: Vp == Vs (Young's modulus pole)");
    }
    const double vp2 = vp_ftus * vp_ftus;
    const double vs2 = vs_ftus * vs_ftus;
    if (3.0 * vp2 - 4.0 * vs2 <= 0.0) {
        throw std::domain_error("moduli_from_velocities: non-positive bulk modulus, need Vp > Vs*sqrt(4/3)");
    }

    ElasticModuli m;
    m.young = kModulusUnitFactor * rho_g_cm3 * vs2 * (3.0 * vp2 - 4.0 * vs2) / (vp2 - vs2);
    m.bulk = kModulusUnitFactor * rho_g_cm3 * (3.0 * vp2 - 4.0 * vs2) / 3.0;
    m.shear = kModulusUnitFactor * rho_g_cm3 * vs2;
    m.compressibility = 1.0 / m.bulk;
    m.poisson = (vp2 - 2.0 * vs2) / (2.0 * vp2 - 2.0 * vs2);
    m.constrained = m.bulk + 4.0 * m.shear / 3.0;
    m.lame_lambda = m.bulk - 2.0 * m.shear / 3.0;
    return m;
}

VelocityPair velocities_from_moduli(const ElasticModuli& m, double rho_g_cm3,
                                    double unit_factor) {
    if (rho_g_cm3 <= 0.0) throw std::domain_error("velocities_from_moduli: density must be positive");
    if (unit_factor <= 0.0) throw std::domain_error("velocities_from_moduli: unit factor must be positive");
    if (m.shear < 0.0 || m.constrained <= 0.0) {
        throw std::domain_error("velocities_from_moduli: need G >= 0 and M > 0");
    }
    const double denom = unit_factor * rho_g_cm3;
    return {std::sqrt(m.constrained / denom), std::sqrt(m.shear / denom)};
}

double vp_vs_ratio_from_poisson(double nu) {
    if (nu < 0.0 || nu >= 0.5) {
        throw std::domain_error("vp_vs_ratio_from_poisson: need 0 <= nu < 0.5");
    }
    return std::sqrt((1.0 - nu) / (0.5 - nu));
}

double gamma_ray_index(double gr_log, double gr_min, double gr_max) {
    if (!(gr_max > gr_min)) throw std::domain_error("gamma_ray_index: need gr_max > gr_min");
    const double igr = (gr_log - gr_min) / (gr_max - gr_min);
    return std::clamp(igr, 0.0, 1.0);
}

double wyllie_porosity(double dt, double dt_matrix, double dt_fluid) {
    if (!(dt_fluid > dt_matrix)) {
        throw std::domain_error("wyllie_porosity: need dt_fluid > dt_matrix");
    }
    return (dt - dt_matrix) / (dt_fluid - dt_matrix);
}

double density_porosity(double rho_bulk, double rho_matrix, double rho_fluid) {
    if (!(rho_matrix > rho_fluid)) {
        throw std::domain_error("density_porosity: need rho_matrix > rho_fluid");
    }
    return (rho_matrix - rho_bulk) / (rho_matrix - rho_fluid);
}

double neutron_response(double phi, double sxo, double vsh, double phi_nmf, double phi_nhc,
                        double phi_sh, double phi_nma) {
    for (double f : {phi, sxo, vsh, phi_nmf, phi_nhc, phi_sh, phi_nma}) {
        if (f < 0.0 || f > 1.0) {
            throw std::domain_error("neutron_response: fractions must lie in [0, 1]");
        }
    }
    if (phi + vsh > 1.0) throw std::domain_error("neutron_response: phi + vsh must be <= 1");
    return phi * sxo * phi_nmf + phi * (1.0 - sxo) * phi_nhc + vsh * phi_sh +
           (1.0 - phi - vsh) * phi_nma;
}

double gr_response(std::span<const GrComponent> components, double rho_bulk) {
    if (rho_bulk <= 0.0) throw std::domain_error("gr_response: bulk density must be positive");
    double sum = 0.0;
    for (const GrComponent& c : components) {
        if (c.volume < 0.0) throw std::domain_error("gr_response: volume fractions must be >= 0");
        sum += c.density * c.volume * c.radioactivity;
    }
    return sum / rho_bulk;
}

double pe_index(std::span<const PeComponent> components) {
    if (components.empty()) throw std::domain_error("pe_index: component list is empty");
    double num = 0.0, den = 0.0;
    for (const PeComponent& c : components) {
        const double z2 = c.atomic_number * c.atomic_number;
        num += c.atomic_fraction * z2 * z2 * c.proportion;
        den += c.atomic_fraction * c.proportion;
    }
    if (den <= 0.0) throw std::domain_error("pe_index: zero denominator");
    return num / den;
}

}  // namespace swv
