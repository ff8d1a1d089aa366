// flexvar: numerical cross-checks for the first variation of total mean
// curvature of surface patches under infinitesimal flexes.
//
// Subcommands: curvature | flex-check | variation | sweep | construct-flex
// Exit codes: 0 pass, 1 numerical disagreement, 2 validation error,
//             3 numerical-domain error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "flexvar/report_io.hpp"

namespace {

using namespace flexvar;

struct CommonArgs {
    std::string scenario_path;
    ScenarioOverrides overrides;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--scenario", args.scenario_path, "scenario file (key = value lines, or JSON)");
    auto opt = [cmd](const char* flag, auto& slot, const char* help) {
        using T = typename std::decay_t<decltype(slot)>::value_type;
        cmd->add_option_function<T>(flag, [&slot](const T& v) { slot = v; }, help);
    };
    opt("--surface", args.overrides.surface, "catalog name (plane, paraboloid, saddle, cap-R-r) or f(u,v)");
    opt("--domain", args.overrides.domain, "rect:u0,u1,v0,v1 or disk:cu,cv,r");
    opt("--flex", args.overrides.flex, "'xi,eta,zeta' expressions, rigid:a;b, bump, or construct:NUxNV");
    opt("--nodes", args.overrides.nodes, "area quadrature nodes per axis");
    opt("--boundary-nodes", args.overrides.boundary_nodes, "boundary quadrature nodes per segment");
    opt("--fd-step", args.overrides.fd_step, "finite-difference step h");
    opt("--samples", args.overrides.samples, "residual scan samples per axis");
    opt("--t-list", args.overrides.t_list, "comma-separated deformation parameters");
    opt("--format", args.overrides.format, "text | json | csv");
    opt("--out", args.overrides.out, "write the report to this path instead of stdout");
    opt("--grid", args.overrides.grid, "construction grid NUxNV");
    cmd->add_flag_function("--erratum-probe",
                           [&args](std::int64_t) { args.overrides.erratum_probe = true; },
                           "also evaluate the sign-suspect alternative boundary integrand");
    cmd->add_flag_function("--no-richardson",
                           [&args](std::int64_t) { args.overrides.richardson = false; },
                           "plain central difference without the Richardson step");
}

Scenario load_scenario(const CommonArgs& args) {
    Scenario s;
    if (!args.scenario_path.empty()) s = parse_scenario_file(args.scenario_path);
    apply_overrides(s, args.overrides);
    return s;
}

// Writes to --out when set, stdout otherwise.
int with_output(const Scenario& s, const std::function<void(std::ostream&)>& write) {
    if (s.out.empty()) {
        write(std::cout);
        return 0;
    }
    std::ofstream file(s.out);
    if (!file) throw ValidationError("cannot open output file '" + s.out + "'");
    write(file);
    return 0;
}

int run_curvature(const CommonArgs& args) {
    const Scenario s = load_scenario(args);
    const ResolvedScenario r = resolve(s);
    CurvatureReport report;
    report.total_mean_curvature = total_mean_curvature(r.patch, r.variation.quad);
    report.area = surface_area(as_param(r.patch), r.variation.quad);
    for (const auto& [u, v] : r.patch.domain.sample_grid(3)) {
        const auto [k1, k2] = principal_curvatures(r.patch, u, v);
        report.samples.push_back({u, v, mean_curvature(r.patch, u, v), k1, k2});
    }
    with_output(s, [&](std::ostream& out) { emit_curvature(report, s, out); });
    return 0;
}

int run_flex_check(const CommonArgs& args) {
    const Scenario s = load_scenario(args);
    const ResolvedScenario r = resolve(s);
    if (!r.flex && !r.construct_grid) throw ValidationError("flex-check needs a flex (set 'flex')");

    FlexCheckReport report;
    FlexField flex;
    if (r.construct_grid) {
        const auto [nu, nv] = *r.construct_grid;
        const DiscreteFlex d = construct_flex_numeric(r.patch, nu, nv);
        report.triviality_score = d.triviality_score;
        report.residual_norm = d.residual_norm;
        report.kernel_dim = d.kernel_dim;
        flex = interpolate_bicubic(d);
    } else {
        flex = *r.flex;
    }
    const ResidualScan scan = scan_flex_residuals(r.patch, flex, r.samples);
    report.max_residual_first_order = scan.max_first_order;
    report.max_residual_second_order = scan.max_second_order;
    report.worst_u = scan.worst_u;
    report.worst_v = scan.worst_v;
    report.pass = scan.max_first_order <= report.tol;
    with_output(s, [&](std::ostream& out) { emit_flex_check(report, s, out); });
    return report.pass ? 0 : 1;
}

int run_variation(const CommonArgs& args) {
    const Scenario s = load_scenario(args);
    const ResolvedScenario r = resolve(s);
    if (!r.flex) throw ValidationError("variation needs an explicit flex (set 'flex')");
    const VariationReport report = variation_report(r.patch, *r.flex, r.variation);
    with_output(s, [&](std::ostream& out) { emit_variation(report, s, out); });
    return report.pass ? 0 : 1;
}

int run_sweep(const CommonArgs& args) {
    const Scenario s = load_scenario(args);
    const ResolvedScenario r = resolve(s);
    if (!r.flex) throw ValidationError("sweep needs an explicit flex (set 'flex')");
    if (r.t_list.empty()) throw ValidationError("sweep needs a non-empty t_list");
    const auto rows = invariant_sweep(r.patch, *r.flex, r.t_list, r.variation.quad);
    with_output(s, [&](std::ostream& out) { emit_sweep(rows, s, out); });
    return 0;
}

int run_construct(const CommonArgs& args) {
    Scenario s = load_scenario(args);
    if (s.flex.empty()) s.flex = "construct";
    const ResolvedScenario r = resolve(s);
    if (!r.construct_grid) throw ValidationError("construct-flex needs flex = construct[:NUxNV]");
    const auto [nu, nv] = *r.construct_grid;
    const DiscreteFlex d = construct_flex_numeric(r.patch, nu, nv);
    with_output(s, [&](std::ostream& out) { emit_discrete_flex(d, s, out); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification of the total-mean-curvature variation under infinitesimal flexes"};
    app.require_subcommand(1);

    CommonArgs curvature_args, flex_args, variation_args, sweep_args, construct_args;
    add_common_options(app.add_subcommand("curvature", "total mean curvature and pointwise samples"),
                       curvature_args);
    add_common_options(app.add_subcommand("flex-check", "first/second order flex residual scan"),
                       flex_args);
    add_common_options(app.add_subcommand("variation", "three-route variation report"), variation_args);
    add_common_options(app.add_subcommand("sweep", "invariants of the deformed patch over a t list"),
                       sweep_args);
    add_common_options(app.add_subcommand("construct-flex", "discrete flex from the nullspace solver"),
                       construct_args);

    try {
        app.parse(argc, argv);
        if (app.got_subcommand("curvature")) return run_curvature(curvature_args);
        if (app.got_subcommand("flex-check")) return run_flex_check(flex_args);
        if (app.got_subcommand("variation")) return run_variation(variation_args);
        if (app.got_subcommand("sweep")) return run_sweep(sweep_args);
        if (app.got_subcommand("construct-flex")) return run_construct(construct_args);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const flexvar::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const flexvar::DomainError& e) {
        std::cerr << "numerical domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
