// gravbound: bounds on computation rates from clock-induced decoherence.
//
// Subcommands: bounds | evolve | gate | sweep | report
// Exit codes: 0 success, 1 domain/validation error, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gravbound/decoherence.hpp"
#include "gravbound/errors.hpp"
#include "gravbound/json_io.hpp"
#include "gravbound/limits.hpp"
#include "gravbound/log_scalar.hpp"
#include "gravbound/physics.hpp"

namespace {

using namespace gravbound;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

template <typename... Args>
std::string strf(const char* fmt, Args... args) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), fmt, args...);
    return buf;
}

// "5.43 x10^50" with 3 significant digits; avoids implying false precision.
std::string sci(const LogScalar& x) {
    if (x.sign == 0) return "0";
    const double k = std::floor(x.log10_mag);
    double mant = std::pow(10.0, x.log10_mag - k);
    double kk = k;
    if (mant >= 9.995) { mant /= 10.0; kk += 1.0; } // rounding spill
    return strf("%s%.2f x10^%.0f", x.sign < 0 ? "-" : "", mant, kk);
}

// log10 with full precision; CSV/JSON carry only this.
std::string fmt_log10(const LogScalar& x) {
    if (x.sign == 0) return "-inf";
    return strf("%s%.15g", x.sign < 0 ? "(negative) " : "", x.log10_mag);
}

std::string fmt_double(double v) { return strf("%.15g", v); }

struct OutputTarget {
    std::ofstream file;
    std::ostream* os = &std::cout;

    int open(const std::string& path) {
        if (path.empty()) return kExitOk;
        file.open(path);
        if (!file) {
            std::cerr << "error: cannot open output file: " << path << "\n";
            return kExitDomain;
        }
        os = &file;
        return kExitOk;
    }
};

// ---------------------------------------------------------------------------
// computer-spec sources shared by `bounds` and `sweep`

struct SpecFlags {
    std::string preset_name;
    std::string spec_file;
    double mass = 0.0, radius = 0.0, bits = 0.0, parallelism = 1.0;
    bool has_mass = false, has_radius = false, has_bits = false;
    std::optional<double> energy;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
    auto* preset_opt = cmd->add_option("--preset", f.preset_name,
                                       "Preset name: ultimate-laptop | avogadro | black-hole-1kg");
    auto* file_opt = cmd->add_option("--spec", f.spec_file, "Computer spec JSON file");
    auto* mass_opt = cmd->add_option("--mass", f.mass, "Mass, kg");
    auto* radius_opt = cmd->add_option("--radius", f.radius, "Characteristic size R, m");
    auto* bits_opt = cmd->add_option("--bits", f.bits, "Stored bits L");
    auto* par_opt = cmd->add_option("--parallelism", f.parallelism, "Degree of parallelization d_p");
    auto* energy_opt = cmd->add_option_function<double>(
        "--energy", [&f](double e) { f.energy = e; }, "Explicit energy budget, J");
    preset_opt->excludes(file_opt)->excludes(mass_opt)->excludes(radius_opt)
        ->excludes(bits_opt)->excludes(par_opt)->excludes(energy_opt);
    file_opt->excludes(mass_opt)->excludes(radius_opt)->excludes(bits_opt)
        ->excludes(par_opt)->excludes(energy_opt);
    cmd->callback([&f, mass_opt, radius_opt, bits_opt]() {
        f.has_mass = mass_opt->count() > 0;
        f.has_radius = radius_opt->count() > 0;
        f.has_bits = bits_opt->count() > 0;
    });
}

// Returns exit code; on success fills spec/notes.
int resolve_spec(const SpecFlags& f, const PhysConstants& k, ComputerSpec& spec,
                 std::vector<std::string>& notes) {
    const bool inline_given = f.has_mass || f.has_radius || f.has_bits;
    const int sources = (!f.preset_name.empty() ? 1 : 0) + (!f.spec_file.empty() ? 1 : 0) +
                        (inline_given ? 1 : 0);
    if (sources != 1) {
        std::cerr << "error: provide exactly one spec source "
                     "(--preset, --spec, or --mass/--radius/--bits)\n";
        return kExitUsage;
    }
    try {
        if (!f.preset_name.empty()) {
            Preset p = preset(f.preset_name, k);
            spec = p.spec;
            notes = p.notes;
        } else if (!f.spec_file.empty()) {
            std::ifstream in(f.spec_file);
            if (!in) {
                std::cerr << "error: cannot open spec file: " << f.spec_file << "\n";
                return kExitDomain;
            }
            nlohmann::json j;
            in >> j;
            spec = spec_from_json(j);
        } else {
            if (!(f.has_mass && f.has_radius && f.has_bits)) {
                std::cerr << "error: inline spec needs --mass, --radius and --bits\n";
                return kExitUsage;
            }
            spec = ComputerSpec{f.mass, f.radius, f.bits, f.parallelism, f.energy};
            spec.validate();
        }
    } catch (const LookupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// bounds

void render_report_table(const BoundReport& r, std::ostream& os) {
    os << strf("%-16s %-14s %s\n", "quantity", "value", "log10");
    const auto row = [&](const char* name, const LogScalar& v) {
        os << strf("%-16s %-14s %s\n", name, sci(v).c_str(), fmt_log10(v).c_str());
    };
    row("ml_ops_per_s", r.ml_ops_per_s);
    row("grav_ops_per_s", r.grav_ops_per_s);
    row("serial_error", r.serial_error);
    row("eps_max", r.eps_max);
    row("implied_dp", r.implied_dp);
    os << strf("%-16s %s\n", "binding_bound", r.binding_bound.c_str());
    for (const auto& n : r.notes) os << "note: " << n << "\n";
}

void render_report_csv(const BoundReport& r, std::ostream& os) {
    os << "mass_kg,radius_m,bits,parallelism,energy_j,"
          "ml_log10,grav_log10,serial_error_log10,eps_max_log10,implied_dp_log10,binding\n";
    os << fmt_double(r.spec.mass_kg) << ',' << fmt_double(r.spec.radius_m) << ','
       << fmt_double(r.spec.bits) << ',' << fmt_double(r.spec.parallelism) << ','
       << (r.spec.energy_j ? fmt_double(*r.spec.energy_j) : std::string()) << ','
       << fmt_log10(r.ml_ops_per_s) << ',' << fmt_log10(r.grav_ops_per_s) << ','
       << fmt_log10(r.serial_error) << ',' << fmt_log10(r.eps_max) << ','
       << fmt_log10(r.implied_dp) << ',' << r.binding_bound << "\n";
}

int run_bounds(const SpecFlags& flags, const std::string& format, OutputTarget& out,
               const PhysConstants& k) {
    ComputerSpec spec;
    std::vector<std::string> notes;
    if (int rc = resolve_spec(flags, k, spec, notes); rc != kExitOk) return rc;
    BoundReport report;
    try {
        report = bound_report(spec, k, std::move(notes));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    if (format == "json") {
        *out.os << to_json(report).dump(2) << "\n";
    } else if (format == "csv") {
        render_report_csv(report, *out.os);
    } else {
        render_report_table(report, *out.os);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// evolve

struct EvolveArgs {
    std::string input;
    double t_end = 0.0;
    int steps = 1000;
    std::string mode = "paper-exponent";
    double tp_eff = 0.0;
    std::optional<double> t_max;
    std::string engine = "both";
};

int run_evolve(const EvolveArgs& a, OutputTarget& out) {
    DecoherenceParams params;
    params.tp_eff = a.tp_eff;
    params.mode = (a.mode == "integrated-sigma") ? ExponentMode::IntegratedSigma
                                                 : ExponentMode::PaperExponent;
    if (params.mode == ExponentMode::IntegratedSigma && !a.t_max) {
        std::cerr << "error: --t-max is required for integrated-sigma mode\n";
        return kExitUsage;
    }
    params.t_max = a.t_max.value_or(a.t_end + 1.0);
    if (params.mode == ExponentMode::IntegratedSigma && a.t_end >= *a.t_max) {
        std::cerr << "error: t_end must be < t_max\n";
        return kExitDomain;
    }

    Spectrum spectrum;
    PureState state;
    try {
        std::ifstream in(a.input);
        if (!in) {
            std::cerr << "error: cannot open input file: " << a.input << "\n";
            return kExitDomain;
        }
        nlohmann::json j;
        in >> j;
        std::tie(spectrum, state) = system_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed input JSON: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }

    const int n = spectrum.dim();
    const DensityMatrix rho0 = DensityMatrix::pure(state);
    const bool analytic = (a.engine != "numeric");
    const bool numeric = (a.engine != "analytic");

    try {
        // sample times: the integrator's grid when it runs, else uniform
        std::vector<double> times;
        Trajectory traj;
        if (numeric) {
            traj = evolve_numeric(rho0, spectrum, a.t_end, a.steps, params);
            times.reserve(traj.size());
            for (const auto& [t, rho] : traj) times.push_back(t);
        } else if (a.t_end == 0.0) {
            times.push_back(0.0);
        } else {
            for (int j = 0; j <= a.steps; ++j) times.push_back(a.t_end * j / a.steps);
        }

        std::ostream& os = *out.os;
        os << "t,purity,overlap";
        for (int m = 0; m < n; ++m) {
            for (int q = m + 1; q < n; ++q) {
                os << ",rho_" << m << "_" << q << "_re,rho_" << m << "_" << q << "_im";
            }
        }
        if (analytic && numeric) os << ",max_discrepancy";
        os << "\n";

        for (std::size_t row = 0; row < times.size(); ++row) {
            const double t = times[row];
            DensityMatrix rho =
                analytic ? propagate_analytic(state, spectrum, t, params) : traj[row].second;
            os << fmt_double(t) << ',' << fmt_double(purity(rho)) << ','
               << fmt_double(overlap(rho, rho0));
            for (int m = 0; m < n; ++m) {
                for (int q = m + 1; q < n; ++q) {
                    os << ',' << fmt_double(rho.m(m, q).real()) << ','
                       << fmt_double(rho.m(m, q).imag());
                }
            }
            if (analytic && numeric) {
                const double disc = (rho.m - traj[row].second.m).cwiseAbs().maxCoeff();
                os << ',' << fmt_double(disc);
            }
            os << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// gate

int run_gate(double energy_j, const std::string& variant, const std::string& format,
             OutputTarget& out, const PhysConstants& k) {
    if (!(energy_j > 0.0)) {
        std::cerr << "error: --energy must be > 0\n";
        return kExitDomain;
    }
    GateErrorAnalysis a;
    LogScalar serial;
    try {
        a = analyze_not_gate(energy_j, k);
        serial = serial_decoherence_error(energy_j, k);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    const LogScalar eps = variant == "exact-one-minus-d" ? a.epsilon_exact_one_minus_d
                          : variant == "fidelity-error"  ? a.epsilon_fidelity
                                                         : a.epsilon_paper_linearized;
    if (format == "json") {
        ordered_json j{{"energy_j", energy_j},
                       {"t_op_s", a.op_time_s},
                       {"delta_omega", to_json(a.delta_omega)},
                       {"gamma", to_json(a.gamma)},
                       {"damping_d", to_json(a.damping)},
                       {"variant", variant},
                       {"epsilon", to_json(eps)},
                       {"epsilon_paper_linearized", to_json(a.epsilon_paper_linearized)},
                       {"epsilon_exact_one_minus_d", to_json(a.epsilon_exact_one_minus_d)},
                       {"epsilon_fidelity", to_json(a.epsilon_fidelity)},
                       {"serial_error_combination", to_json(serial)}};
        *out.os << j.dump(2) << "\n";
    } else if (format == "csv") {
        *out.os << "energy_j,t_op_s,delta_omega_log10,gamma_log10,damping_log10,variant,"
                   "epsilon_log10,serial_error_log10\n"
                << fmt_double(energy_j) << ',' << fmt_double(a.op_time_s) << ','
                << fmt_log10(a.delta_omega) << ',' << fmt_log10(a.gamma) << ','
                << fmt_log10(a.damping) << ',' << variant << ',' << fmt_log10(eps) << ','
                << fmt_log10(serial) << "\n";
    } else {
        std::ostream& os = *out.os;
        os << strf("%-28s %-14s %s\n", "quantity", "value", "log10");
        const auto row = [&](const char* name, const LogScalar& v) {
            os << strf("%-28s %-14s %s\n", name, sci(v).c_str(), fmt_log10(v).c_str());
        };
        os << strf("%-28s %.6g s\n", "t_op", a.op_time_s);
        row("delta_omega", a.delta_omega);
        row("gamma", a.gamma);
        row("damping_D", a.damping);
        row("epsilon_paper_linearized", a.epsilon_paper_linearized);
        row("epsilon_exact_one_minus_d", a.epsilon_exact_one_minus_d);
        row("epsilon_fidelity", a.epsilon_fidelity);
        os << strf("%-28s %s\n", "selected_variant", variant.c_str());
        row("epsilon", eps);
        row("serial_error_combination", serial);
        os << "note: serial_error_combination is the bare t_P^{4/3}(E/hbar)^{4/3}\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
    std::string param;
    double from = 0.0, to = 0.0;
    int points = 0;
    std::string scale = "log";
};

int run_sweep(const SpecFlags& flags, const SweepArgs& s, OutputTarget& out,
              const PhysConstants& k) {
    ComputerSpec base;
    std::vector<std::string> notes;
    if (int rc = resolve_spec(flags, k, base, notes); rc != kExitOk) return rc;
    if (!(s.from < s.to)) {
        std::cerr << "error: sweep requires --from < --to\n";
        return kExitUsage;
    }
    if (s.scale == "log" && !(s.from > 0.0)) {
        std::cerr << "error: log scale requires --from > 0\n";
        return kExitUsage;
    }

    std::ostream& os = *out.os;
    os << "value,ml_log10,grav_log10,serial_error_log10,eps_max_log10,implied_dp_log10,binding\n";
    for (int i = 0; i < s.points; ++i) {
        const double f = static_cast<double>(i) / (s.points - 1);
        const double value = s.scale == "log"
                                 ? std::pow(10.0, std::log10(s.from) +
                                                      f * (std::log10(s.to) - std::log10(s.from)))
                                 : s.from + f * (s.to - s.from);
        ComputerSpec spec = base;
        if (s.param == "bits") spec.bits = value;
        else if (s.param == "radius_m") spec.radius_m = value;
        else if (s.param == "parallelism") spec.parallelism = value;
        else if (s.param == "mass_kg") spec.mass_kg = value;
        else spec.energy_j = value;
        BoundReport r;
        try {
            r = bound_report(spec, k);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitDomain;
        }
        os << fmt_double(value) << ',' << fmt_log10(r.ml_ops_per_s) << ','
           << fmt_log10(r.grav_ops_per_s) << ',' << fmt_log10(r.serial_error) << ','
           << fmt_log10(r.eps_max) << ',' << fmt_log10(r.implied_dp) << ',' << r.binding_bound
           << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// report

struct ReportRow {
    std::string name;
    double reference_log10;
    LogScalar computed;
};

std::vector<ReportRow> headline_rows(const PhysConstants& k) {
    const double mc2 = 1.0 * k.c * k.c;
    return {
        {"ultimate-laptop margolus-levitin ops/s", 51.0, margolus_levitin_ops(mc2, k)},
        {"serial decoherence error (E=1e16 J)", 9.0, serial_decoherence_error(1e16, k)},
        {"ultimate-laptop gravitational ops/s", 47.0, gravitational_ops_bound(1e31, 0.1, 1e10, k)},
        {"1 kg serial gravitational ops/s", 42.0, gravitational_ops_bound(1e31, 0.1, 1.0, k)},
        {"avogadro serial gravitational ops/s", 39.0, gravitational_ops_bound(1e25, 0.1, 1.0, k)},
        {"black-hole 1 kg ops/s", 47.0, black_hole_ops_bound(1.0, k)},
        {"implied parallelization at 1e51 op/s", 10.0,
         degree_of_parallelization(1e31, 0.1, LogScalar::from_log10(+1, 51.0), k)},
    };
}

constexpr double kReportToleranceDecades = 1.0;

int run_report(bool check, const std::string& format, OutputTarget& out, const PhysConstants& k) {
    const std::vector<ReportRow> rows = headline_rows(k);
    bool all_pass = true;
    std::ostream& os = *out.os;
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            const double delta = std::fabs(r.computed.log10_mag - r.reference_log10);
            const bool pass = delta <= kReportToleranceDecades;
            all_pass = all_pass && pass;
            arr.push_back({{"quantity", r.name},
                           {"reference_log10", r.reference_log10},
                           {"computed_log10", r.computed.log10_mag},
                           {"delta_decades", delta},
                           {"pass", pass}});
        }
        os << arr.dump(2) << "\n";
    } else if (format == "csv") {
        os << "quantity,reference_log10,computed_log10,delta_decades,status\n";
        for (const auto& r : rows) {
            const double delta = std::fabs(r.computed.log10_mag - r.reference_log10);
            const bool pass = delta <= kReportToleranceDecades;
            all_pass = all_pass && pass;
            os << r.name << ',' << fmt_double(r.reference_log10) << ','
               << fmt_double(r.computed.log10_mag) << ',' << fmt_double(delta) << ','
               << (pass ? "pass" : "FAIL") << "\n";
        }
    } else {
        os << strf("%-40s %-10s %-10s %-8s %s\n", "quantity", "reference", "computed", "|delta|",
                   "status");
        for (const auto& r : rows) {
            const double delta = std::fabs(r.computed.log10_mag - r.reference_log10);
            const bool pass = delta <= kReportToleranceDecades;
            all_pass = all_pass && pass;
            os << strf("%-40s 10^%-7.0f 10^%-7.2f %-8.2f %s\n", r.name.c_str(), r.reference_log10,
                       r.computed.log10_mag, delta, pass ? "pass" : "FAIL");
        }
        os << "tolerance: " << kReportToleranceDecades << " decade(s)\n";
    }
    if (check && !all_pass) return kExitDomain;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decoherence-driven bounds on quantum computation"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string out_path;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--out", out_path, "Output path (default stdout)");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Bound report for a computer spec");
    SpecFlags bounds_flags;
    add_spec_flags(bounds_cmd, bounds_flags);

    // evolve
    auto* evolve_cmd = app.add_subcommand("evolve", "Evolve a state and emit a trajectory CSV");
    EvolveArgs evolve_args;
    evolve_cmd->add_option("--input", evolve_args.input, "Spectrum/state JSON file")->required();
    evolve_cmd->add_option("--t-end", evolve_args.t_end, "End time")
        ->required()
        ->check(CLI::NonNegativeNumber);
    evolve_cmd->add_option("--steps", evolve_args.steps, "RK4 step count")
        ->required()
        ->check(CLI::PositiveNumber);
    evolve_cmd->add_option("--mode", evolve_args.mode, "Exponent mode")
        ->check(CLI::IsMember({"paper-exponent", "integrated-sigma"}));
    evolve_cmd->add_option("--tp-eff", evolve_args.tp_eff, "Effective Planck time")
        ->required()
        ->check(CLI::NonNegativeNumber);
    evolve_cmd->add_option_function<double>(
        "--t-max", [&evolve_args](double v) { evolve_args.t_max = v; }, "Horizon T_max");
    evolve_cmd->add_option("--engine", evolve_args.engine, "analytic | numeric | both")
        ->check(CLI::IsMember({"analytic", "numeric", "both"}));

    // gate
    auto* gate_cmd = app.add_subcommand("gate", "NOT-gate error analysis at the speed limit");
    double gate_energy = 0.0;
    std::string gate_variant = "paper-linearized";
    gate_cmd->add_option("--energy", gate_energy, "Gate energy, J")->required();
    gate_cmd->add_option("--variant", gate_variant, "Error definition")
        ->check(CLI::IsMember({"paper-linearized", "exact-one-minus-d", "fidelity-error"}));

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Bound reports over a parameter range (CSV)");
    SpecFlags sweep_flags;
    add_spec_flags(sweep_cmd, sweep_flags);
    SweepArgs sweep_args;
    sweep_cmd->add_option("--param", sweep_args.param, "Swept parameter")
        ->required()
        ->check(CLI::IsMember({"bits", "radius_m", "parallelism", "mass_kg", "energy_j"}));
    sweep_cmd->add_option("--from", sweep_args.from, "Range start")->required();
    sweep_cmd->add_option("--to", sweep_args.to, "Range end")->required();
    sweep_cmd->add_option("--points", sweep_args.points, "Number of points")
        ->required()
        ->check(CLI::Range(2, 1000000));
    sweep_cmd->add_option("--scale", sweep_args.scale, "log | linear")
        ->check(CLI::IsMember({"log", "linear"}));

    // report
    auto* report_cmd = app.add_subcommand("report", "Reproduce the headline bounds");
    bool report_check = false;
    report_cmd->add_flag("--check", report_check, "Exit nonzero unless every row passes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    PhysConstants constants;
    try {
        constants = constants_from_env();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }

    OutputTarget out;
    if (int rc = out.open(out_path); rc != kExitOk) return rc;

    if (bounds_cmd->parsed()) return run_bounds(bounds_flags, format, out, constants);
    if (evolve_cmd->parsed()) return run_evolve(evolve_args, out);
    if (gate_cmd->parsed()) return run_gate(gate_energy, gate_variant, format, out, constants);
    if (sweep_cmd->parsed()) return run_sweep(sweep_flags, sweep_args, out, constants);
    if (report_cmd->parsed()) return run_report(report_check, format, out, constants);
    return kExitUsage;
}
