#pragma once

// JSON wire formats: LogScalar, ComputerSpec, BoundReport, spectrum/state
// input and the external constants override.

#include <complex>
#include <cstdlib>
#include <fstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "gravbound/decoherence.hpp"
#include "gravbound/errors.hpp"
#include "gravbound/limits.hpp"
#include "gravbound/log_scalar.hpp"
#include "gravbound/physics.hpp"

namespace gravbound {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const LogScalar& x) {
    return {{"sign", x.sign}, {"log10", x.sign == 0 ? 0.0 : x.log10_mag}};
}

inline LogScalar log_scalar_from_json(const nlohmann::json& j) {
    const int sign = j.at("sign").get<int>();
    if (sign == 0) return LogScalar::zero();
    return LogScalar::from_log10(sign, j.at("log10").get<double>());
}

inline ordered_json to_json(const ComputerSpec& s) {
    ordered_json j{{"mass_kg", s.mass_kg},
                   {"radius_m", s.radius_m},
                   {"bits", s.bits},
                   {"parallelism", s.parallelism}};
    if (s.energy_j) {
        j["energy_j"] = *s.energy_j;
    } else {
        j["energy_j"] = nullptr;
    }
    return j;
}

inline ComputerSpec spec_from_json(const nlohmann::json& j) {
    ComputerSpec s;
    s.mass_kg = j.at("mass_kg").get<double>();
    s.radius_m = j.at("radius_m").get<double>();
    s.bits = j.at("bits").get<double>();
    s.parallelism = j.value("parallelism", 1.0);
    if (j.contains("energy_j") && !j.at("energy_j").is_null()) {
        s.energy_j = j.at("energy_j").get<double>();
    }
    s.validate();
    return s;
}

inline ordered_json to_json(const BoundReport& r) {
    return {{"spec", to_json(r.spec)},
            {"ml_ops_per_s", to_json(r.ml_ops_per_s)},
            {"grav_ops_per_s", to_json(r.grav_ops_per_s)},
            {"serial_error", to_json(r.serial_error)},
            {"eps_max", to_json(r.eps_max)},
            {"implied_dp", to_json(r.implied_dp)},
            {"binding_bound", r.binding_bound},
            {"notes", r.notes}};
}

/// Input format {"omegas": [w...], "amplitudes": [[re, im]...]}.
inline std::pair<Spectrum, PureState> system_from_json(const nlohmann::json& j) {
    Spectrum spectrum;
    if (!j.contains("omegas")) throw ValidationError("input: missing field 'omegas'");
    if (!j.contains("amplitudes")) throw ValidationError("input: missing field 'amplitudes'");
    for (const auto& w : j.at("omegas")) {
        if (!w.is_number()) throw ValidationError("input: 'omegas' entries must be numbers");
        spectrum.omegas.push_back(w.get<double>());
    }
    const auto& amps = j.at("amplitudes");
    PureState state;
    state.amplitudes.resize(static_cast<Eigen::Index>(amps.size()));
    Eigen::Index i = 0;
    for (const auto& a : amps) {
        if (!a.is_array() || a.size() != 2) {
            throw ValidationError("input: 'amplitudes' entries must be [re, im] pairs");
        }
        state.amplitudes(i++) = Complex(a[0].get<double>(), a[1].get<double>());
    }
    spectrum.validate();
    state.validate();
    if (spectrum.dim() != state.dim()) {
        throw ValidationError("input: 'omegas' and 'amplitudes' lengths differ");
    }
    return {std::move(spectrum), std::move(state)};
}

/// Constants override {"c": ..., "hbar": ..., "G": ...}; Planck quantities
/// are rederived.
inline PhysConstants constants_from_json(const nlohmann::json& j) {
    return PhysConstants::from_base(j.at("c").get<double>(), j.at("hbar").get<double>(),
                                    j.at("G").get<double>());
}

/// CODATA constants, or the file named by GRAVBOUND_CONSTANTS when set.
inline PhysConstants constants_from_env() {
    const char* path = std::getenv("GRAVBOUND_CONSTANTS");
    if (path == nullptr || *path == '\0') return PhysConstants::codata2018();
    std::ifstream in(path);
    if (!in) throw ValidationError(std::string("cannot open constants file: ") + path);
    nlohmann::json j;
    in >> j;
    return constants_from_json(j);
}

} // namespace gravbound
