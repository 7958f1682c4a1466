#pragma once

// Physical constants (CODATA 2018, pinned for deterministic tests), Planck
// units, and the parametric description of a computer.

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gravbound/errors.hpp"
#include "gravbound/log_scalar.hpp"

namespace gravbound {

struct PhysConstants {
    double c;    // speed of light, m/s
    double hbar; // reduced Planck constant, J s
    double G;    // gravitational constant, m^3 kg^-1 s^-2
    double t_p;  // Planck time, s
    double l_p;  // Planck length, m
    double m_p;  // Planck mass, kg

    static PhysConstants codata2018() {
        return {2.99792458e8, 1.054571817e-34, 6.67430e-11,
                5.391247e-44, 1.616255e-35, 2.176434e-8};
    }

    /// Derive the Planck quantities from base constants (used when constants
    /// are overridden externally).
    static PhysConstants from_base(double c, double hbar, double G) {
        if (c <= 0 || hbar <= 0 || G <= 0) {
            throw DomainError("PhysConstants: base constants must be positive");
        }
        PhysConstants k{};
        k.c = c;
        k.hbar = hbar;
        k.G = G;
        k.t_p = std::sqrt(hbar * G / std::pow(c, 5));
        k.l_p = c * k.t_p;
        k.m_p = std::sqrt(hbar * c / G);
        return k;
    }
};

/// A computer described by its gross physical resources. Bit counts and
/// parallelism are reals: every use is an order-of-magnitude estimate.
struct ComputerSpec {
    double mass_kg = 0.0;
    double radius_m = 0.0;             // characteristic size R
    double bits = 0.0;                 // stored bits L
    double parallelism = 1.0;          // degree of parallelization d_p
    std::optional<double> energy_j{};  // explicit budget E; defaults to m c^2

    void validate() const {
        if (!(mass_kg > 0.0)) throw ValidationError("ComputerSpec: mass_kg must be > 0");
        if (!(radius_m > 0.0)) throw ValidationError("ComputerSpec: radius_m must be > 0");
        if (!(bits > 0.0)) throw ValidationError("ComputerSpec: bits must be > 0");
        if (!(parallelism >= 1.0)) throw ValidationError("ComputerSpec: parallelism must be >= 1");
        if (parallelism > bits) throw ValidationError("ComputerSpec: parallelism must be <= bits");
        if (energy_j && !(*energy_j > 0.0)) throw ValidationError("ComputerSpec: energy_j must be > 0");
    }

    /// Energy budget: explicit value if given, otherwise the full mass-energy.
    [[nodiscard]] double energy(const PhysConstants& k) const {
        return energy_j ? *energy_j : mass_kg * k.c * k.c;
    }
};

/// omega = E / hbar, returned in log scale (E may correspond to frequencies
/// around 10^50 s^-1).
inline LogScalar energy_to_angular_frequency(double energy_j, const PhysConstants& k) {
    if (energy_j < 0.0) throw DomainError("energy_to_angular_frequency: negative energy");
    if (energy_j == 0.0) return LogScalar::zero();
    return log_div(LogScalar::from_real(energy_j), LogScalar::from_real(k.hbar));
}

struct Preset {
    ComputerSpec spec;
    std::vector<std::string> notes;
};

/// Built-in computer descriptions: "ultimate-laptop", "avogadro",
/// "black-hole-1kg".
inline Preset preset(std::string_view name, const PhysConstants& k) {
    if (name == "ultimate-laptop") {
        return {{1.0, 0.1, 1e31, 1e10, std::nullopt}, {}};
    }
    if (name == "avogadro") {
        // Nuclear-qubit computer; only the bit count is pinned, the radius is
        // an assumption carried into the notes.
        return {{1.0, 0.1, 1e25, 1.0, std::nullopt},
                {"avogadro preset: radius 0.1 m is an assumption, not a quoted figure"}};
    }
    if (name == "black-hole-1kg") {
        const double mass = 1.0;
        const double radius = 2.0 * k.G * mass / (k.c * k.c); // Schwarzschild
        const double bits = (mass / k.m_p) * (mass / k.m_p);  // Bekenstein
        return {{mass, radius, bits, 1.0, std::nullopt},
                {"black-hole preset: radius includes the Schwarzschild factor 2"}};
    }
    throw LookupError("unknown preset: " + std::string(name));
}

} // namespace gravbound
