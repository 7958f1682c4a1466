#pragma once

// Closed-form bounds on computation rates: the Margolus-Levitin rate, the
// fundamental clock-accuracy limit, the error-correction bandwidth bound,
// the serial decoherence error, the gravitational operations bound and its
// black-hole specialization. All outputs are order-of-magnitude bounds with
// O(1) numerical prefactors dropped, exactly as the printed formulas state
// them; everything is carried in log scale.

#include <cmath>
#include <string>
#include <vector>

#include "gravbound/errors.hpp"
#include "gravbound/log_scalar.hpp"
#include "gravbound/physics.hpp"

namespace gravbound {

/// Minimum clock uncertainty after measuring an interval t.
struct ClockLimit {
    double t_s = 0.0;        // elapsed time, s
    LogScalar delta_t_min{}; // minimum uncertainty, s
};

/// Maximum logical operation rate 2E/(pi hbar) for mean energy E.
inline LogScalar margolus_levitin_ops(double energy_j, const PhysConstants& k) {
    if (!(energy_j > 0.0)) throw DomainError("margolus_levitin_ops: energy must be > 0");
    return LogScalar::from_real(2.0 * energy_j / (std::numbers::pi * k.hbar));
}

/// delta_t >= t_P^{2/3} t^{1/3}: no clock resolves an interval t better.
inline ClockLimit clock_limit(double t_s, const PhysConstants& k) {
    if (!(t_s > 0.0)) throw DomainError("clock_limit: t must be > 0");
    const LogScalar dt = log_pow(LogScalar::from_real(k.t_p), {2, 3}) *
                         log_pow(LogScalar::from_real(t_s), {1, 3});
    return {t_s, dt};
}

/// eps_max ~ L c / (n R): the bandwidth ceiling on error correction for a
/// computer of L bits and size R running n op/s.
inline LogScalar max_error_rate(double bits, double radius_m, const LogScalar& ops_per_s,
                                const PhysConstants& k) {
    if (!(bits > 0.0) || !(radius_m > 0.0) || ops_per_s.sign <= 0) {
        throw DomainError("max_error_rate: all arguments must be > 0");
    }
    return log_div(LogScalar::from_real(bits * k.c / radius_m), ops_per_s);
}

/// d_p ~ 1/eps_max = n R / (L c).
inline LogScalar degree_of_parallelization(double bits, double radius_m,
                                           const LogScalar& ops_per_s, const PhysConstants& k) {
    return log_div(LogScalar::one(), max_error_rate(bits, radius_m, ops_per_s, k));
}

/// Decoherence error per serial operation, t_P^{4/3} (E/hbar)^{4/3}
/// (gate time t = hbar/E, bare combination without the O(1) prefactor).
inline LogScalar serial_decoherence_error(double energy_j, const PhysConstants& k) {
    if (!(energy_j > 0.0)) throw DomainError("serial_decoherence_error: energy must be > 0");
    const LogScalar e_nat = energy_to_angular_frequency(energy_j, k);
    return log_pow(log_mul(LogScalar::from_real(k.t_p), e_nat), {4, 3});
}

/// n <= (1/t_P)^{4/7} (c L / R)^{3/7} d_p^{4/7}: the gravitational bound on
/// the operation rate of an error-corrected computer.
inline LogScalar gravitational_ops_bound(double bits, double radius_m, double parallelism,
                                         const PhysConstants& k) {
    if (!(bits > 0.0) || !(radius_m > 0.0)) {
        throw DomainError("gravitational_ops_bound: bits and radius must be > 0");
    }
    if (!(parallelism >= 1.0)) {
        throw DomainError("gravitational_ops_bound: parallelism must be >= 1");
    }
    const LogScalar inv_tp = log_div(LogScalar::one(), LogScalar::from_real(k.t_p));
    return log_pow(inv_tp, {4, 7}) *
           log_pow(LogScalar::from_real(k.c * bits / radius_m), {3, 7}) *
           log_pow(LogScalar::from_real(parallelism), {4, 7});
}

/// n <= (M/M_P)^{3/7} / t_P for the most compact computer of mass M (a black
/// hole, with the Bekenstein bit count).
inline LogScalar black_hole_ops_bound(double mass_kg, const PhysConstants& k) {
    if (!(mass_kg > 0.0)) throw DomainError("black_hole_ops_bound: mass must be > 0");
    return log_pow(LogScalar::from_real(mass_kg / k.m_p), {3, 7}) /
           LogScalar::from_real(k.t_p);
}

struct BoundReport {
    ComputerSpec spec;
    LogScalar ml_ops_per_s;    // Margolus-Levitin rate for the energy budget
    LogScalar grav_ops_per_s;  // gravitational bound for (L, R, d_p)
    LogScalar serial_error;    // decoherence error per serial op at full energy
    LogScalar eps_max;         // bandwidth error ceiling at the ML rate
    LogScalar implied_dp;      // 1 / eps_max
    std::string binding_bound; // "gravitational" or "margolus-levitin"
    std::vector<std::string> notes;
};

inline BoundReport bound_report(const ComputerSpec& spec, const PhysConstants& k,
                                std::vector<std::string> extra_notes = {}) {
    spec.validate();
    BoundReport r;
    r.spec = spec;
    const double energy = spec.energy(k);
    r.ml_ops_per_s = margolus_levitin_ops(energy, k);
    r.grav_ops_per_s = gravitational_ops_bound(spec.bits, spec.radius_m, spec.parallelism, k);
    r.serial_error = serial_decoherence_error(energy, k);
    r.eps_max = max_error_rate(spec.bits, spec.radius_m, r.ml_ops_per_s, k);
    r.implied_dp = degree_of_parallelization(spec.bits, spec.radius_m, r.ml_ops_per_s, k);
    // ties go to the gravitational bound
    r.binding_bound = (compare(r.grav_ops_per_s, r.ml_ops_per_s) <= 0) ? "gravitational"
                                                                       : "margolus-levitin";
    r.notes.emplace_back("order-of-magnitude bounds; O(1) numerical prefactors dropped");
    r.notes.emplace_back("serial_error is the bare combination t_P^{4/3} (E/hbar)^{4/3}");
    for (auto& n : extra_notes) r.notes.emplace_back(std::move(n));
    return r;
}

} // namespace gravbound
