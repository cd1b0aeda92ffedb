// runner.cpp — CLI commands: parameter chains, figure data, checks.
#include "fluxbus/runner.hpp"

#include "fluxbus/config.hpp"
#include "fluxbus/dynamics.hpp"
#include "fluxbus/errors.hpp"
#include "fluxbus/fntransform.hpp"
#include "fluxbus/hammodels.hpp"
#include "fluxbus/physpar.hpp"
#include "fluxbus/qalgebra.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace fluxbus {

namespace {

namespace fs = std::filesystem;

struct CommandContext {
    Config config;
    fs::path out;
    bool quiet = false;

    std::string path(const std::string& name) const { return (out / name).string(); }

    void say(const std::string& line) const {
        if (!quiet) std::cout << line << "\n";
    }
};

void write_run_manifest(const CommandContext& ctx, const std::string& command) {
    std::map<std::string, std::string> entries = ctx.config.entries();
    entries["run.command"] = command;
    write_manifest(ctx.path("manifest.txt"), entries);
}

void write_report(const std::string& path, const std::vector<std::pair<std::string, std::string>>& lines) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot write '" + path + "'");
    for (const auto& [key, value] : lines)
        out << key << " = " << value << "\n";
    if (!out) throw config_error("write failed for '" + path + "'");
}

SystemParams params_from(const Config& c) {
    SystemParams p;
    p.omega_q = c.get_double("params.omega_q");
    p.omega_r = c.get_double("params.omega_r");
    p.omega_s = c.get_double("params.omega_s");
    p.g_qr = c.get_double("params.g_qr");
    p.g_qs = c.get_double("params.g_qs");
    p.unit = c.get_string("params.unit");
    return p;
}

Cutoffs cutoffs_from(const Config& c) {
    return Cutoffs{c.get_int("cutoffs.n_photon"), c.get_int("cutoffs.n_spinmode")};
}

TransferConfig transfer_from(const Config& c) {
    TransferConfig cfg;
    cfg.hamiltonian_kind = hamiltonian_kind_from_string(c.get_string("transfer.kind"));
    cfg.params = params_from(c);
    cfg.cut = cutoffs_from(c);
    cfg.t_max = c.get_double("transfer.t_max");
    cfg.n_steps = c.get_int("transfer.n_steps");
    cfg.n_spins = c.get_int("transfer.n_spins");
    if (c.has_value("transfer.initial")) cfg.initial.occupations = c.get_int_list("transfer.initial");
    if (c.has_value("transfer.target")) cfg.target.occupations = c.get_int_list("transfer.target");
    return cfg;
}

void write_trajectory_csv(const std::string& path, const TransferResult& res) {
    std::vector<std::vector<double>> rows;
    rows.reserve(res.times.size());
    for (size_t i = 0; i < res.times.size(); ++i)
        rows.push_back({res.times[i], res.fidelity[i]});
    write_csv(path, {"gamma_t", "fidelity"}, rows);
}

std::string summary_line(const std::string& label, const TransferResult& res) {
    std::ostringstream os;
    os << label << ": peak_fidelity=" << format_value(res.peak_fidelity)
       << " at gamma_t=" << format_value(res.peak_time)
       << " cutoffs=(" << res.cutoffs_used.n_photon << "," << res.cutoffs_used.n_spinmode << ")"
       << " converged=" << (res.converged ? "yes" : "no");
    return os.str();
}

// ---- commands ----

int cmd_couplings(const CommandContext& ctx) {
    const Config& c = ctx.config;
    LoopGeometry geom;
    geom.area = c.get_double("couplings.area_um2") * 1e-12;
    geom.aspect = c.get_double("couplings.aspect");
    geom.thickness = c.get_double("couplings.thickness_um") * 1e-6;
    geom.persistent_current = c.get_double("couplings.current_na") * 1e-9;
    geom.density = c.get_double("couplings.density_per_um3") * 1e18;

    double b = loop_center_field(geom);
    double g_s = single_spin_coupling(b);
    double n = geom.density * geom.area * geom.thickness;
    double g_qs = ensemble_coupling_from_density(geom);

    double i_r0 = zero_point_current(c.get_double("couplings.resonator_ghz") * 1e9,
                                     c.get_double("couplings.inductance_nh") * 1e-9);
    double g_qr_mutual = qubit_resonator_coupling(c.get_double("couplings.mutual_ph") * 1e-12,
                                                  geom.persistent_current, i_r0);

    // Working point: qubit coupled equally to both modes, detuning a fixed
    // multiple of the coupling.
    double delta = c.get_double("couplings.delta_over_g") * g_qs;
    SystemParams p;
    p.omega_r = 2870.0;
    p.omega_s = 2870.0;
    p.omega_q = 2870.0 + delta;
    p.g_qr = g_qs;
    p.g_qs = g_qs;
    EffectiveParams eff = effective_rwa(p);

    std::vector<std::pair<std::string, std::string>> lines = {
        {"loop_center_field_t", format_value(b)},
        {"single_spin_coupling_mhz", format_value(g_s)},
        {"n_spins", format_value(n)},
        {"g_qs_mhz", format_value(g_qs)},
        {"zero_point_current_na", format_value(i_r0 * 1e9)},
        {"g_qr_from_mutual_mhz", format_value(g_qr_mutual)},
        {"working_point_delta_mhz", format_value(delta)},
        {"g_eff_mhz", format_value(eff.g_eff)},
        {"g_eff_abs_mhz", format_value(std::abs(eff.g_eff))},
    };
    write_report(ctx.path("couplings.txt"), lines);
    for (const auto& [key, value] : lines) ctx.say(key + " = " + value);
    write_run_manifest(ctx, "couplings");
    return 0;
}

int cmd_fig4(const CommandContext& ctx) {
    const Config& c = ctx.config;
    std::vector<double> grid;
    for (int k = 6; k <= 13; ++k)
        for (double m : {1.0, 2.0, 5.0})
            grid.push_back(m * std::pow(10.0, k));
    std::vector<EnsembleSweepRow> rows =
        sweep_ensemble_size(grid, c.get_double("fig4.g_single_hybrid_mhz"),
                            c.get_double("fig4.g_single_direct_mhz"),
                            c.get_double("fig4.g_qr_mhz"), c.get_double("fig4.delta_mhz"));
    std::vector<std::vector<double>> csv;
    csv.reserve(rows.size());
    for (const auto& row : rows)
        csv.push_back({row.n_spins, row.g_eff_hybrid, row.g_rs_direct});
    write_csv(ctx.path("fig4.csv"), {"n_spins", "g_eff_hybrid_mhz", "g_rs_direct_mhz"}, csv);
    ctx.say("fig4: " + std::to_string(csv.size()) + " rows");
    write_run_manifest(ctx, "fig4");
    return 0;
}

int cmd_transfer(const CommandContext& ctx) {
    TransferConfig cfg = transfer_from(ctx.config);
    TransferResult res = transfer_experiment(cfg);
    write_trajectory_csv(ctx.path("transfer.csv"), res);
    ctx.say(summary_line("transfer", res));
    write_run_manifest(ctx, "transfer");
    if (!res.converged) {
        std::cerr << "transfer: cutoff convergence not reached below the dimension cap\n";
        return 2;
    }
    return 0;
}

int cmd_fig5(const CommandContext& ctx) {
    TransferConfig strong;
    strong.hamiltonian_kind = HamiltonianKind::rabi_full;
    strong.params = SystemParams{2.0, 1.0, 1.0, 0.05, 0.05};
    strong.cut = Cutoffs{6, 6};

    // The ultrastrong curve uses the non-RWA effective model; starting at 16
    // lets the doubling certificate complete below the dimension cap.
    TransferConfig ultra;
    ultra.hamiltonian_kind = HamiltonianKind::eff_ultra;
    ultra.params = SystemParams{9.0, 1.0, 1.0, 1.0, 1.0};
    ultra.cut = Cutoffs{16, 16};

    TransferResult res_strong = transfer_experiment(strong);
    TransferResult res_ultra = transfer_experiment(ultra);
    write_trajectory_csv(ctx.path("fig5_strong.csv"), res_strong);
    write_trajectory_csv(ctx.path("fig5_ultra.csv"), res_ultra);
    ctx.say(summary_line("fig5 strong", res_strong));
    ctx.say(summary_line("fig5 ultra", res_ultra));
    write_run_manifest(ctx, "fig5");
    if (!res_strong.converged || !res_ultra.converged) {
        std::cerr << "fig5: cutoff convergence not reached below the dimension cap\n";
        return 2;
    }
    return 0;
}

int cmd_fig6(const CommandContext& ctx) {
    TransferConfig base;
    base.hamiltonian_kind = HamiltonianKind::rabi_full;
    base.params = SystemParams{2.0, 1.0, 1.0, 0.05, 0.05};

    bool all_converged = true;
    const std::vector<std::pair<std::string, double>> panels = {
        {"fig6_a.csv", 0.025}, {"fig6_b.csv", 0.15}, {"fig6_c.csv", 0.3}};
    for (const auto& [name, g] : panels) {
        TransferConfig cfg = base;
        cfg.params.g_qr = g * cfg.params.omega_r;
        cfg.params.g_qs = cfg.params.g_qr;
        cfg.cut = default_cutoffs(cfg.params);
        TransferResult res = transfer_experiment(cfg);
        write_trajectory_csv(ctx.path(name), res);
        ctx.say(summary_line(name, res));
        all_converged = all_converged && res.converged;
    }

    std::vector<double> g_values = ctx.config.get_double_list("fig6.g_values");
    std::vector<CouplingSweepRow> rows = sweep_coupling(base, g_values);
    std::vector<std::vector<double>> csv;
    csv.reserve(rows.size());
    for (const auto& row : rows) {
        csv.push_back({row.g, row.peak_fidelity});
        all_converged = all_converged && row.converged;
    }
    write_csv(ctx.path("fig6_d.csv"), {"g_over_omega_r", "peak_fidelity"}, csv);
    ctx.say("fig6 sweep: " + std::to_string(csv.size()) + " points");
    write_run_manifest(ctx, "fig6");
    if (!all_converged) {
        std::cerr << "fig6: cutoff convergence not reached below the dimension cap\n";
        return 2;
    }
    return 0;
}

int cmd_fncheck(const CommandContext& ctx) {
    const Config& c = ctx.config;
    std::string regime_name = c.get_string("fncheck.regime");
    FnRegime regime;
    if (regime_name == "rwa") regime = FnRegime::rwa;
    else if (regime_name == "nonrwa") regime = FnRegime::nonrwa;
    else if (regime_name == "mixed") regime = FnRegime::mixed;
    else throw config_error("fncheck.regime must be rwa, nonrwa or mixed, got '" + regime_name + "'");

    SystemParams p = params_from(c);
    Cutoffs cut = cutoffs_from(c);
    int excluded = c.get_int("fncheck.excluded_levels");
    double tolerance = c.get_double("fncheck.tolerance");

    HamiltonianParts parts = build_parts(p, cut, regime);
    Generator gen = build_generator(p, cut, regime);
    double residual_full = generator_residual(parts.h0, parts.hi, gen, 0);
    double residual_interior = generator_residual(parts.h0, parts.hi, gen, excluded);

    Operator total{parts.h0.space, parts.h0.matrix + parts.hi.matrix};
    ExactEffective exact = exact_unitary_effective(total, gen);

    std::vector<std::pair<std::string, std::string>> lines = {
        {"regime", regime_name},
        {"residual_full", format_value(residual_full)},
        {"residual_interior", format_value(residual_interior)},
        {"dropped_block_norm", format_value(exact.dropped_block_norm)},
    };

    if (regime != FnRegime::mixed) {
        Operator numeric = numeric_effective(parts.h0, parts.hi, gen, tolerance);
        Operator closed = (regime == FnRegime::rwa) ? build_eff_strong(p, cut)
                                                    : build_eff_ultra(p, cut);
        Operator diff{numeric.space, numeric.matrix - closed.matrix};
        lines.emplace_back("closed_form_deviation_interior",
                           format_value(interior_max_abs(diff, excluded)));
    }

    write_report(ctx.path("fncheck.txt"), lines);
    for (const auto& [key, value] : lines) ctx.say(key + " = " + value);
    write_run_manifest(ctx, "fncheck");
    return 0;
}

int cmd_oracle(const CommandContext& ctx) {
    const Config& c = ctx.config;
    int n_spins = c.get_int("oracle.n_spins");
    TransferConfig exact_cfg = transfer_from(c);
    exact_cfg.hamiltonian_kind = HamiltonianKind::exact_spins;
    exact_cfg.n_spins = n_spins;
    exact_cfg.initial = StateSpec{};
    exact_cfg.target = StateSpec{};

    // Shared gamma*t grid; both models propagated at the configured cutoffs
    // (the bosonized reference reuses the photon cutoff for the spin mode).
    double gamma = transfer_rate(exact_cfg.params);
    std::vector<double> phys(exact_cfg.n_steps);
    for (int i = 0; i < exact_cfg.n_steps; ++i)
        phys[i] = exact_cfg.t_max * static_cast<double>(i) /
                  static_cast<double>(exact_cfg.n_steps - 1) / gamma;

    Operator h_exact = build_exact_spins(exact_cfg.params, n_spins, exact_cfg.cut);
    StateVector psi0_x = resolve_state(StateSpec{}, HamiltonianKind::exact_spins, exact_cfg.cut,
                                       n_spins, true);
    StateVector targ_x = resolve_state(StateSpec{}, HamiltonianKind::exact_spins, exact_cfg.cut,
                                       n_spins, false);
    std::vector<double> f_exact =
        fidelity_series_parallel(eigensystem(h_exact), psi0_x, targ_x, phys);

    Operator h_boson = build_rabi_full(exact_cfg.params, exact_cfg.cut);
    StateVector psi0_b = resolve_state(StateSpec{}, HamiltonianKind::rabi_full, exact_cfg.cut,
                                       n_spins, true);
    StateVector targ_b = resolve_state(StateSpec{}, HamiltonianKind::rabi_full, exact_cfg.cut,
                                       n_spins, false);
    std::vector<double> f_boson =
        fidelity_series_parallel(eigensystem(h_boson), psi0_b, targ_b, phys);

    double dev = 0.0;
    std::vector<std::vector<double>> rows;
    rows.reserve(phys.size());
    for (size_t i = 0; i < phys.size(); ++i) {
        dev = std::max(dev, std::abs(f_exact[i] - f_boson[i]));
        rows.push_back({phys[i] * gamma, f_exact[i], f_boson[i]});
    }
    write_csv(ctx.path("oracle.csv"), {"gamma_t", "fidelity_exact", "fidelity_bosonized"}, rows);
    ctx.say("oracle: n_spins=" + std::to_string(n_spins) + " max_deviation=" + format_value(dev));
    write_run_manifest(ctx, "oracle");
    return 0;
}

} // namespace

int run(const RunConfig& rc) {
    try {
        CommandContext ctx;
        if (!rc.config_path.empty()) ctx.config.load_file(rc.config_path);
        for (const std::string& assignment : rc.overrides)
            ctx.config.set_override(assignment);
        ctx.out = rc.output_dir.empty() ? fs::path(".") : fs::path(rc.output_dir);
        fs::create_directories(ctx.out);
        ctx.quiet = rc.quiet;

        if (rc.command == "couplings") return cmd_couplings(ctx);
        if (rc.command == "fig4") return cmd_fig4(ctx);
        if (rc.command == "transfer") return cmd_transfer(ctx);
        if (rc.command == "fig5") return cmd_fig5(ctx);
        if (rc.command == "fig6") return cmd_fig6(ctx);
        if (rc.command == "fncheck") return cmd_fncheck(ctx);
        if (rc.command == "oracle") return cmd_oracle(ctx);
        throw config_error("unknown command '" + rc.command + "'");
    } catch (const numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Hybrid flux-qubit circuit: coupling calculators and state-transfer experiments"};
    RunConfig rc;
    app.add_option("command", rc.command,
                   "one of: couplings, fig4, transfer, fig5, fig6, fncheck, oracle")
        ->required();
    app.add_option("--config", rc.config_path, "config file (key = value lines)");
    app.add_option("--out", rc.output_dir, "output directory (default .)");
    app.add_option("--set", rc.overrides, "override, key=value (repeatable)");
    app.add_flag("--quiet", rc.quiet, "suppress stdout summaries");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    return run(rc);
}

} // namespace fluxbus
