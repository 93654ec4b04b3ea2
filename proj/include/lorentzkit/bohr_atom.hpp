#pragma once

// Bohr Z-atom in SI units: orbital speeds and radii, line energies, ionization,
// the scale chain a0 -> lambda_e -> r0, and the impedance-based mass estimates.

#include <cmath>
#include <numbers>
#include <string>

#include "lorentzkit/error.hpp"

namespace lorentzkit::bohr {

struct PhysicalConstants {
    double h = 6.62607015e-34;       // J s
    double e = 1.602176634e-19;      // C
    double eps0 = 8.8541878128e-12;  // F/m
    double c = 299792458.0;          // m/s
    double m_e = 9.1093837015e-31;   // kg

    static PhysicalConstants codata2018() { return {}; }

    void validate() const {
        for (double v : {h, e, eps0, c, m_e}) {
            if (!(v > 0.0) || !std::isfinite(v)) fail(ErrorKind::Input, "physical constants must be positive");
        }
    }
};

namespace detail {
inline void require_quantum(int Z, int n) {
    if (Z < 1) fail(ErrorKind::Domain, "Z must be >= 1");
    if (n < 1) fail(ErrorKind::Domain, "n must be >= 1");
}
} // namespace detail

/// e^2 / (2 c h eps0), about 1/137.036
inline double beta_hat_physical(const PhysicalConstants& k) { return k.e * k.e / (2.0 * k.c * k.h * k.eps0); }

/// The rounded 1/137 used for the mass arithmetic.
inline constexpr double beta_hat_rational() { return 1.0 / 137.0; }

/// v(Z,n)/c = beta_hat Z / n
inline double orbital_speed_beta(const PhysicalConstants& k, int Z, int n) {
    detail::require_quantum(Z, n);
    return beta_hat_physical(k) * static_cast<double>(Z) / static_cast<double>(n);
}

/// Speeds at or above light for n = 1 once Z >= 1/beta_hat. Reported, not refused.
inline bool superluminal(const PhysicalConstants& k, int Z, int n = 1) { return orbital_speed_beta(k, Z, n) >= 1.0; }

struct OrbitRadius {
    double mr = 0.0;      // kg m, h^2 eps0 n^2 / (pi Z e^2)
    double radius = 0.0;  // m, mr / m_e
};

inline OrbitRadius bohr_radius_and_mr(const PhysicalConstants& k, int Z, int n) {
    detail::require_quantum(Z, n);
    const double nn = static_cast<double>(n);
    const double mr = k.h * k.h * k.eps0 * nn * nn / (std::numbers::pi * static_cast<double>(Z) * k.e * k.e);
    return {mr, mr / k.m_e};
}

inline double bohr_radius(const PhysicalConstants& k) { return bohr_radius_and_mr(k, 1, 1).radius; }

/// m e^4 / (8 h^2 eps0^2), about 2.18e-18 J
inline double rydberg_energy(const PhysicalConstants& k) {
    const double e2 = k.e * k.e;
    return k.m_e * e2 * e2 / (8.0 * k.h * k.h * k.eps0 * k.eps0);
}

struct SpectrumLine {
    int Z = 1;
    int n_from = 1;
    int n_to = 2;
    double energy = 0.0;      // J
    double frequency = 0.0;   // Hz
    double wavelength = 0.0;  // m
};

/// The n -> n+1 line: Z^2 Ry (1/n^2 - 1/(n+1)^2).
inline SpectrumLine transition_energy(const PhysicalConstants& k, int Z, int n) {
    detail::require_quantum(Z, n);
    const double a = static_cast<double>(n);
    const double b = a + 1.0;
    SpectrumLine line;
    line.Z = Z;
    line.n_from = n;
    line.n_to = n + 1;
    line.energy = static_cast<double>(Z) * static_cast<double>(Z) * rydberg_energy(k) * (1.0 / (a * a) - 1.0 / (b * b));
    line.frequency = line.energy / k.h;
    line.wavelength = k.c / line.frequency;
    return line;
}

/// Z^2 m e^4 / (8 h^2 eps0^2)
inline double ionization_energy(const PhysicalConstants& k, int Z) {
    detail::require_quantum(Z, 1);
    return static_cast<double>(Z) * static_cast<double>(Z) * rydberg_energy(k);
}

/// Same quantity through the Bohr radius: Z^2 e^2 / (8 pi eps0 a0).
inline double ionization_energy_via_radius(const PhysicalConstants& k, int Z) {
    detail::require_quantum(Z, 1);
    return static_cast<double>(Z) * static_cast<double>(Z) * k.e * k.e /
           (8.0 * std::numbers::pi * k.eps0 * bohr_radius(k));
}

/// Partial sum of the lines n = 1..N (summed from the small end for accuracy).
inline double telescoping_sum(const PhysicalConstants& k, int Z, int N) {
    detail::require_quantum(Z, N);
    double s = 0.0;
    for (int n = N; n >= 1; --n) s += transition_energy(k, Z, n).energy;
    return s;
}

struct OrbitEnergies {
    double kinetic = 0.0;    // m v^2 / 2
    double potential = 0.0;  // -Z e^2 / (4 pi eps0 r)
    double total = 0.0;
};

inline OrbitEnergies orbit_energies(const PhysicalConstants& k, int Z, int n) {
    const double v = k.c * orbital_speed_beta(k, Z, n);
    const double r = bohr_radius_and_mr(k, Z, n).radius;
    OrbitEnergies o;
    o.kinetic = 0.5 * k.m_e * v * v;
    o.potential = -static_cast<double>(Z) * k.e * k.e / (4.0 * std::numbers::pi * k.eps0 * r);
    o.total = o.kinetic + o.potential;
    return o;
}

struct ScaleRelations {
    double beta_hat = 0.0;
    double a0 = 0.0;          // Bohr radius
    double r0 = 0.0;          // e^2 / (4 pi eps0 m c^2) = a0 beta_hat^2
    double lambda_e = 0.0;    // h / (m c) = 2 pi a0 beta_hat
    double lambda_inf = 0.0;  // h c / ionization energy
    double delta_m = 0.0;     // ionization energy / c^2 = (m/2) beta_hat^2
    double max_relative_residual = 0.0;
};

/// Builds every quantity from its defining formula, then measures how far the stated
/// identities are from holding.
inline ScaleRelations scale_relations(const PhysicalConstants& k) {
    ScaleRelations s;
    s.beta_hat = beta_hat_physical(k);
    s.a0 = bohr_radius(k);
    s.r0 = k.e * k.e / (4.0 * std::numbers::pi * k.eps0 * k.m_e * k.c * k.c);
    s.lambda_e = k.h / (k.m_e * k.c);
    const double e_inf = ionization_energy(k, 1);
    s.lambda_inf = k.h * k.c / e_inf;
    s.delta_m = e_inf / (k.c * k.c);

    auto rel = [](double got, double want) { return std::abs(got - want) / std::abs(want); };
    const double b = s.beta_hat;
    const double checks[] = {
        rel(s.r0, s.a0 * b * b),
        rel(s.lambda_e, 2.0 * std::numbers::pi * s.a0 * b),
        rel(s.lambda_e / (2.0 * std::numbers::pi * s.r0), 1.0 / b),
        rel(2.0 * std::numbers::pi * s.a0 / s.lambda_e, 1.0 / b),
        rel(s.lambda_e, s.lambda_inf * b * b / 2.0),
        rel(s.delta_m, k.m_e * b * b / 2.0),
    };
    for (double c : checks) s.max_relative_residual = std::max(s.max_relative_residual, c);
    return s;
}

struct MassEstimates {
    double phi_I = 2.0 / 27.0;          // maximum radial impedance
    double beta_hat = 0.0;              // rational 1/137
    double M_check_over_me = 0.0;       // (1/beta_hat) / phi_I
    double M_proton_over_me = 0.0;      // (136/137) M_check
    double M_check_kg = 0.0;
    double neutron_ratio_rounded = 0.0;  // 1675 / 1684, rounded masses
    double neutron_ratio_computed = 0.0;
    double b2_fit = 0.0;                // sqrt(1836.1 / 1849.5)
    double b2_fit_gap = 0.0;            // sqrt(136/137) - b2_fit
};

inline constexpr double kNeutronMassKg = 1.67492749804e-27;

inline MassEstimates mass_estimates(const PhysicalConstants& k) {
    MassEstimates m;
    m.beta_hat = beta_hat_rational();
    m.M_check_over_me = (1.0 / m.beta_hat) / m.phi_I;
    m.M_proton_over_me = (136.0 / 137.0) * m.M_check_over_me;
    m.M_check_kg = m.M_check_over_me * k.m_e;
    m.neutron_ratio_rounded = 1675.0 / 1684.0;
    m.neutron_ratio_computed = kNeutronMassKg / m.M_check_kg;
    m.b2_fit = std::sqrt(1836.1 / 1849.5);
    m.b2_fit_gap = std::sqrt(136.0 / 137.0) - m.b2_fit;
    return m;
}

} // namespace lorentzkit::bohr
