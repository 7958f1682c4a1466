#pragma once

// Quantum-state evolution under clock-induced dephasing:
//
//   d rho / dt = i [rho, H] - sigma(t) [[rho, H], H],      H = diag(omega_n)
//
// with the clock-noise schedule sigma(t) = (t_p/36) (t_p/(T_max - t))^{1/3}.
// Provides the analytic off-diagonal propagator, an independent RK4
// integrator used as a cross-check, the survival overlap and the NOT-gate
// error model. Evolution runs in dimensionless rescaled units; physical-scale
// magnitudes route through LogScalar.

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gravbound/errors.hpp"
#include "gravbound/log_scalar.hpp"
#include "gravbound/physics.hpp"

namespace gravbound {

using Complex = std::complex<double>;

// Dense complex evolution is meant for few-level systems.
inline constexpr int kMaxEvolveDim = 64;

/// Energy eigenfrequencies omega_n (natural units, hbar = 1), nondecreasing,
/// ground state >= 0.
struct Spectrum {
    std::vector<double> omegas;

    [[nodiscard]] int dim() const { return static_cast<int>(omegas.size()); }

    void validate() const {
        if (omegas.empty()) throw ValidationError("Spectrum: empty");
        if (omegas.front() < 0.0) throw ValidationError("Spectrum: omegas[0] must be >= 0");
        for (std::size_t i = 1; i < omegas.size(); ++i) {
            if (omegas[i] < omegas[i - 1]) throw ValidationError("Spectrum: omegas must be nondecreasing");
        }
    }
};

/// Normalized amplitudes c_n in the energy eigenbasis.
struct PureState {
    Eigen::VectorXcd amplitudes;

    [[nodiscard]] int dim() const { return static_cast<int>(amplitudes.size()); }

    void validate() const {
        if (amplitudes.size() == 0) throw ValidationError("PureState: empty");
        const double norm2 = amplitudes.squaredNorm();
        if (std::fabs(norm2 - 1.0) > 1e-10) {
            throw ValidationError("PureState: amplitudes not normalized");
        }
    }
};

/// Hermitian, unit-trace, positive-semidefinite matrix in the energy
/// eigenbasis of the accompanying Spectrum.
struct DensityMatrix {
    Eigen::MatrixXcd m;

    [[nodiscard]] int dim() const { return static_cast<int>(m.rows()); }

    static DensityMatrix pure(const PureState& psi) {
        psi.validate();
        return {psi.amplitudes * psi.amplitudes.adjoint()};
    }

    void validate() const {
        if (m.rows() == 0 || m.rows() != m.cols()) throw ValidationError("DensityMatrix: not square");
        if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
            throw ValidationError("DensityMatrix: not Hermitian");
        }
        if (std::fabs(m.trace().real() - 1.0) > 1e-10) {
            throw ValidationError("DensityMatrix: trace != 1");
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-8) {
            throw ValidationError("DensityMatrix: not positive semidefinite");
        }
    }
};

enum class ExponentMode {
    PaperExponent,   // Gamma = dw^2 t_p^{4/3} t^{2/3}, unit coefficient
    IntegratedSigma  // Gamma = dw^2 (t_p^{4/3}/24)(T_max^{2/3} - (T_max-t)^{2/3})
};

struct DecoherenceParams {
    double tp_eff = 0.0;  // effective Planck time in simulation units; 0 = unitary
    ExponentMode mode = ExponentMode::PaperExponent;
    double t_max = 1.0;   // horizon T_max

    void validate() const {
        if (!(tp_eff >= 0.0)) throw ValidationError("DecoherenceParams: tp_eff must be >= 0");
        if (!(t_max > 0.0)) throw ValidationError("DecoherenceParams: t_max must be > 0");
    }
};

/// Clock-noise diffusion rate sigma(t). Diverges at the horizon t = T_max.
inline double sigma_of_t(double t, const DecoherenceParams& p) {
    p.validate();
    if (t < 0.0) throw DomainError("sigma_of_t: t must be >= 0");
    if (t >= p.t_max) throw HorizonError("sigma_of_t: t must be < t_max");
    return (p.tp_eff / 36.0) * std::cbrt(p.tp_eff / (p.t_max - t));
}

/// Off-diagonal damping exponent Gamma(dw, t) >= 0, in log scale so that
/// physical-scale magnitudes (Gamma ~ 10^9) survive.
inline LogScalar decoherence_exponent(double delta_omega, double t, const DecoherenceParams& p) {
    p.validate();
    if (t < 0.0) throw DomainError("decoherence_exponent: t must be >= 0");
    if (delta_omega == 0.0 || t == 0.0 || p.tp_eff == 0.0) return LogScalar::zero();

    const LogScalar dw2 = log_pow(LogScalar::from_real(delta_omega), {2});
    const LogScalar tp43 = log_pow(LogScalar::from_real(p.tp_eff), {4, 3});
    if (p.mode == ExponentMode::PaperExponent) {
        const LogScalar t23 = log_pow(LogScalar::from_real(t), {2, 3});
        return dw2 * tp43 * t23;
    }
    if (t > p.t_max) throw DomainError("decoherence_exponent: t must be <= t_max in integrated-sigma mode");
    const double bracket = std::pow(p.t_max, 2.0 / 3.0) - std::pow(p.t_max - t, 2.0 / 3.0);
    if (bracket <= 0.0) return LogScalar::zero();
    return dw2 * tp43 * LogScalar::from_real(bracket / 24.0);
}

namespace detail {
/// exp(-Gamma) at native precision; extreme exponents clamp to 0.
inline double damping_factor(const LogScalar& gamma) {
    const RealValue g = to_real(gamma);
    if (g.flag == RangeFlag::OverflowToInf) return 0.0;
    return std::exp(-g.value);
}
} // namespace detail

/// Closed-form decohered state: rho_mn(t) = c_m c*_n e^{-i(w_m - w_n) t}
/// e^{-Gamma(w_m - w_n, t)}. Diagonal entries equal |c_m|^2 exactly.
inline DensityMatrix propagate_analytic(const PureState& state, const Spectrum& spectrum,
                                        double t, const DecoherenceParams& p) {
    state.validate();
    spectrum.validate();
    p.validate();
    if (state.dim() != spectrum.dim()) {
        throw ShapeError("propagate_analytic: state and spectrum dimensions differ");
    }
    if (t < 0.0) throw DomainError("propagate_analytic: t must be >= 0");

    const int n = state.dim();
    Eigen::MatrixXcd rho(n, n);
    for (int a = 0; a < n; ++a) {
        rho(a, a) = std::norm(state.amplitudes(a));
        for (int b = a + 1; b < n; ++b) {
            const double dw = spectrum.omegas[a] - spectrum.omegas[b];
            const double damp = detail::damping_factor(decoherence_exponent(dw, t, p));
            const Complex phase = std::exp(Complex(0.0, -dw * t));
            const Complex v = state.amplitudes(a) * std::conj(state.amplitudes(b)) * phase * damp;
            rho(a, b) = v;
            rho(b, a) = std::conj(v);
        }
    }
    return {rho};
}

using Trajectory = std::vector<std::pair<double, DensityMatrix>>;

namespace detail {

inline Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return a * b - b * a;
}

template <typename Rhs>
inline void rk4_step(Eigen::MatrixXcd& rho, double x, double h, const Rhs& rhs) {
    const Eigen::MatrixXcd k1 = rhs(x, rho);
    const Eigen::MatrixXcd k2 = rhs(x + h / 2, rho + (h / 2) * k1);
    const Eigen::MatrixXcd k3 = rhs(x + h / 2, rho + (h / 2) * k2);
    const Eigen::MatrixXcd k4 = rhs(x + h, rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

} // namespace detail

/// Fixed-step RK4 integration of the master equation, sampled at steps+1
/// points including both endpoints.
///
/// Paper-exponent mode is integrated in the substituted variable s = t^{1/3},
/// where the right-hand side
///   d rho / ds = 3 s^2 i [rho, H] - 2 t_p^{4/3} s [[rho, H], H]
/// is polynomial in s. The effective rate in t, (2/3) t_p^{4/3} t^{-1/3},
/// is singular at t = 0 and costs RK4 its fourth order on a uniform t grid;
/// the substitution removes the singularity without touching the equation
/// being solved. Sample times are the images (j h_s)^3.
inline Trajectory evolve_numeric(const DensityMatrix& rho0, const Spectrum& spectrum,
                                 double t_end, int steps, const DecoherenceParams& p) {
    rho0.validate();
    spectrum.validate();
    p.validate();
    if (rho0.dim() != spectrum.dim()) {
        throw ShapeError("evolve_numeric: rho0 and spectrum dimensions differ");
    }
    if (rho0.dim() > kMaxEvolveDim) {
        throw DomainError("evolve_numeric: dimension exceeds dense-evolution cap");
    }
    if (t_end < 0.0) throw DomainError("evolve_numeric: t_end must be >= 0");
    if (steps < 1) throw DomainError("evolve_numeric: steps must be >= 1");
    if (p.mode == ExponentMode::IntegratedSigma && t_end >= p.t_max) {
        throw HorizonError("evolve_numeric: t_end must be < t_max");
    }

    const int n = spectrum.dim();
    Eigen::MatrixXcd h_op = Eigen::MatrixXcd::Zero(n, n);
    for (int a = 0; a < n; ++a) h_op(a, a) = spectrum.omegas[a];

    Trajectory out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    out.emplace_back(0.0, rho0);
    if (t_end == 0.0) return out;

    Eigen::MatrixXcd rho = rho0.m;
    const Complex iunit(0.0, 1.0);

    if (p.mode == ExponentMode::PaperExponent) {
        const double tp43 = std::pow(p.tp_eff, 4.0 / 3.0);
        const auto rhs = [&](double s, const Eigen::MatrixXcd& r) -> Eigen::MatrixXcd {
            const Eigen::MatrixXcd comm = detail::commutator(r, h_op);
            return (3.0 * s * s * iunit) * comm -
                   (2.0 * tp43 * s) * detail::commutator(comm, h_op);
        };
        const double s_end = std::cbrt(t_end);
        const double h = s_end / steps;
        for (int j = 1; j <= steps; ++j) {
            detail::rk4_step(rho, (j - 1) * h, h, rhs);
            if (!rho.allFinite()) {
                throw InstabilityError("evolve_numeric: non-finite entries", static_cast<std::size_t>(j));
            }
            const double s = j * h;
            out.emplace_back(j == steps ? t_end : s * s * s, DensityMatrix{rho});
        }
    } else {
        const auto rhs = [&](double t, const Eigen::MatrixXcd& r) -> Eigen::MatrixXcd {
            const Eigen::MatrixXcd comm = detail::commutator(r, h_op);
            return iunit * comm - sigma_of_t(t, p) * detail::commutator(comm, h_op);
        };
        const double h = t_end / steps;
        for (int j = 1; j <= steps; ++j) {
            detail::rk4_step(rho, (j - 1) * h, h, rhs);
            if (!rho.allFinite()) {
                throw InstabilityError("evolve_numeric: non-finite entries", static_cast<std::size_t>(j));
            }
            out.emplace_back(j == steps ? t_end : j * h, DensityMatrix{rho});
        }
    }
    return out;
}

/// Survival overlap Tr(rho_t rho_0). The trace is real up to roundoff by
/// hermiticity; the imaginary part is discarded after that check.
inline double overlap(const DensityMatrix& rho_t, const DensityMatrix& rho_0) {
    if (rho_t.dim() != rho_0.dim()) throw ShapeError("overlap: dimension mismatch");
    const Complex tr = (rho_t.m * rho_0.m).trace();
    return tr.real();
}

/// Tr(rho^2), in [1/N, 1]; decreases under dephasing.
inline double purity(const DensityMatrix& rho) {
    return (rho.m * rho.m).trace().real();
}

enum class GateErrorVariant {
    PaperLinearized, // 4 t_P^{4/3} t^{2/3} (E/hbar)^2, the printed formula
    ExactOneMinusD,  // 1 - e^{-Gamma}
    FidelityError    // (1 - e^{-Gamma}) / 2 = 1 - <psi1| rho(t) |psi1>
};

struct GateErrorAnalysis {
    double op_time_s;      // Margolus-Levitin gate time pi hbar / (2E)
    LogScalar delta_omega; // level splitting 2E/hbar, s^-1
    LogScalar gamma;       // dephasing exponent at the gate time
    LogScalar damping;     // D = e^{-Gamma}
    LogScalar epsilon_paper_linearized;
    LogScalar epsilon_exact_one_minus_d;
    LogScalar epsilon_fidelity;
};

/// Error probability of a NOT gate between |E_0> = 0 and |E_1> = 2E run at
/// the Margolus-Levitin speed limit, under physical-scale decoherence.
inline GateErrorAnalysis analyze_not_gate(double energy_j, const PhysConstants& k) {
    if (!(energy_j > 0.0)) throw DomainError("not_gate_error: energy must be > 0");

    // All pieces assembled in log scale: Gamma reaches ~10^9 for kg-scale
    // energies and e^{-Gamma} is far below native range.
    const LogScalar e_nat = energy_to_angular_frequency(energy_j, k); // E/hbar
    const LogScalar t_op = log_div(LogScalar::from_real(std::numbers::pi / 2.0), e_nat);
    const LogScalar dw = log_mul(LogScalar::from_real(2.0), e_nat);
    const LogScalar tp43 = log_pow(LogScalar::from_real(k.t_p), {4, 3});
    const LogScalar gamma = log_pow(dw, {2}) * tp43 * log_pow(t_op, {2, 3});

    GateErrorAnalysis out{};
    out.op_time_s = to_real(t_op).value;
    out.delta_omega = dw;
    out.gamma = gamma;
    // With dw = 2 E/hbar, Gamma equals the printed linearized error exactly.
    out.epsilon_paper_linearized = gamma;

    const RealValue g = to_real(gamma);
    if (g.flag == RangeFlag::OverflowToInf) {
        out.damping = LogScalar::zero();
        out.epsilon_exact_one_minus_d = LogScalar::one();
    } else if (g.value < 1e-300) {
        // below native resolution 1 - e^{-g} == g; keep the log-scale value
        out.damping = LogScalar::one();
        out.epsilon_exact_one_minus_d = gamma;
    } else {
        out.damping = LogScalar::from_log10(+1, -g.value / std::numbers::ln10);
        out.epsilon_exact_one_minus_d = LogScalar::from_real(-std::expm1(-g.value));
    }
    out.epsilon_fidelity = out.epsilon_exact_one_minus_d * LogScalar::from_real(0.5);
    return out;
}

inline LogScalar not_gate_error(double energy_j, GateErrorVariant variant, const PhysConstants& k) {
    const GateErrorAnalysis a = analyze_not_gate(energy_j, k);
    switch (variant) {
        case GateErrorVariant::PaperLinearized: return a.epsilon_paper_linearized;
        case GateErrorVariant::ExactOneMinusD: return a.epsilon_exact_one_minus_d;
        case GateErrorVariant::FidelityError: return a.epsilon_fidelity;
    }
    throw DomainError("not_gate_error: unknown variant");
}

} // namespace gravbound
