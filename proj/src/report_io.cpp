#include "flexvar/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace flexvar {

namespace {

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

nlohmann::json variation_to_json(const VariationReport& r) {
    nlohmann::json j;
    j["h_surface"] = r.h_surface;
    j["h_line"] = r.h_line;
    j["h_fd"] = r.h_fd;
    j["disc_sl"] = r.disc_sl;
    j["disc_sf"] = r.disc_sf;
    j["disc_lf"] = r.disc_lf;
    j["pass"] = r.pass;
    j["tol_analytic"] = r.tol_analytic;
    j["tol_fd"] = r.tol_fd;
    if (r.h_line_alt) j["h_line_alt"] = *r.h_line_alt;
    return j;
}

void emit_variation(const VariationReport& r, const Scenario& s, std::ostream& out) {
    if (s.format == "json") {
        nlohmann::json j = variation_to_json(r);
        j["command"] = "variation";
        j["scenario"] = scenario_to_json(s);
        out << j.dump(2) << "\n";
        return;
    }
    if (s.format == "csv") {
        out << "h_surface,h_line,h_fd,disc_sl,disc_sf,disc_lf,pass";
        if (r.h_line_alt) out << ",h_line_alt";
        out << "\n"
            << num(r.h_surface) << "," << num(r.h_line) << "," << num(r.h_fd) << "," << num(r.disc_sl)
            << "," << num(r.disc_sf) << "," << num(r.disc_lf) << "," << (r.pass ? "true" : "false");
        if (r.h_line_alt) out << "," << num(*r.h_line_alt);
        out << "\n";
        return;
    }
    out << "variation of total mean curvature\n"
        << "  surface integral : " << num(r.h_surface) << "\n"
        << "  line integral    : " << num(r.h_line) << "\n"
        << "  finite difference: " << num(r.h_fd) << "\n"
        << "  |surface-line|   : " << num(r.disc_sl) << "  (tol " << num(r.tol_analytic) << ")\n"
        << "  |surface-fd|     : " << num(r.disc_sf) << "  (tol " << num(r.tol_fd) << ")\n"
        << "  |line-fd|        : " << num(r.disc_lf) << "\n";
    if (r.h_line_alt) {
        out << "  alt-expansion line integral: " << num(*r.h_line_alt) << "  (difference from fd: "
            << num(std::abs(*r.h_line_alt - r.h_fd)) << ")\n";
    }
    out << "  result: " << (r.pass ? "PASS" : "FAIL") << "\n";
}

void emit_curvature(const CurvatureReport& r, const Scenario& s, std::ostream& out) {
    if (s.format == "json") {
        nlohmann::json j;
        j["command"] = "curvature";
        j["scenario"] = scenario_to_json(s);
        j["total_mean_curvature"] = r.total_mean_curvature;
        j["area"] = r.area;
        auto& samples = j["samples"] = nlohmann::json::array();
        for (const auto& p : r.samples)
            samples.push_back({{"u", p.u}, {"v", p.v}, {"mean", p.mean}, {"k1", p.k1}, {"k2", p.k2}});
        out << j.dump(2) << "\n";
        return;
    }
    if (s.format == "csv") {
        out << "total_mean_curvature,area\n" << num(r.total_mean_curvature) << "," << num(r.area) << "\n";
        return;
    }
    out << "total mean curvature: " << num(r.total_mean_curvature) << "\n"
        << "area                : " << num(r.area) << "\n"
        << "pointwise samples (u, v, H, k1, k2):\n";
    for (const auto& p : r.samples)
        out << "  " << num(p.u) << "  " << num(p.v) << "  " << num(p.mean) << "  " << num(p.k1) << "  "
            << num(p.k2) << "\n";
}

void emit_flex_check(const FlexCheckReport& r, const Scenario& s, std::ostream& out) {
    if (s.format == "json") {
        nlohmann::json j;
        j["command"] = "flex-check";
        j["scenario"] = scenario_to_json(s);
        j["max_residual_first_order"] = r.max_residual_first_order;
        j["max_residual_second_order"] = r.max_residual_second_order;
        j["worst_u"] = r.worst_u;
        j["worst_v"] = r.worst_v;
        j["tol"] = r.tol;
        j["pass"] = r.pass;
        if (r.triviality_score) j["triviality_score"] = *r.triviality_score;
        if (r.residual_norm) j["residual_norm"] = *r.residual_norm;
        if (r.kernel_dim) j["kernel_dim"] = *r.kernel_dim;
        out << j.dump(2) << "\n";
        return;
    }
    if (s.format == "csv") {
        out << "max_residual_first_order,max_residual_second_order,pass";
        if (r.triviality_score) out << ",triviality_score";
        out << "\n" << num(r.max_residual_first_order) << "," << num(r.max_residual_second_order) << ","
            << (r.pass ? "true" : "false");
        if (r.triviality_score) out << "," << num(*r.triviality_score);
        out << "\n";
        return;
    }
    out << "flex residual check (tol " << num(r.tol) << ")\n"
        << "  max first-order residual : " << num(r.max_residual_first_order) << "  at (u,v)=("
        << num(r.worst_u) << ", " << num(r.worst_v) << ")\n"
        << "  max second-order residual: " << num(r.max_residual_second_order) << "\n";
    if (r.triviality_score) out << "  triviality score         : " << num(*r.triviality_score) << "\n";
    if (r.residual_norm) out << "  discrete residual norm   : " << num(*r.residual_norm) << "\n";
    if (r.kernel_dim) out << "  kernel dimension         : " << *r.kernel_dim << "\n";
    out << "  result: " << (r.pass ? "PASS" : "FAIL") << "\n";
}

void emit_sweep(const std::vector<SweepRow>& rows, const Scenario& s, std::ostream& out) {
    if (s.format == "json") {
        nlohmann::json j;
        j["command"] = "sweep";
        j["scenario"] = scenario_to_json(s);
        auto& arr = j["rows"] = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json rj;
            rj["t"] = row.t;
            rj["regular"] = row.regular;
            if (row.regular) {
                rj["total_mean_curvature"] = row.total_mean_curvature;
                rj["area"] = row.area;
                rj["volume"] = row.volume;
                rj["total_gauss"] = row.total_gauss;
            } else {
                rj["error"] = row.error;
            }
            arr.push_back(std::move(rj));
        }
        out << j.dump(2) << "\n";
        return;
    }
    if (s.format == "csv") {
        out << "t,total_mean_curvature,area,volume,total_gauss,regular\n";
        for (const auto& row : rows)
            out << num(row.t) << "," << num(row.total_mean_curvature) << "," << num(row.area) << ","
                << num(row.volume) << "," << num(row.total_gauss) << ","
                << (row.regular ? "true" : "false") << "\n";
        return;
    }
    // gnuplot-friendly whitespace table
    out << "# t  total_mean_curvature  area  volume  total_gauss\n";
    for (const auto& row : rows) {
        if (row.regular)
            out << num(row.t) << "  " << num(row.total_mean_curvature) << "  " << num(row.area) << "  "
                << num(row.volume) << "  " << num(row.total_gauss) << "\n";
        else
            out << "# t=" << num(row.t) << " irregular: " << row.error << "\n";
    }
}

nlohmann::json discrete_flex_to_json(const DiscreteFlex& d) {
    nlohmann::json j;
    j["n_u"] = d.n_u;
    j["n_v"] = d.n_v;
    j["domain"] = {{"u0", d.u0}, {"u1", d.u1}, {"v0", d.v0}, {"v1", d.v1}};
    j["residual_norm"] = d.residual_norm;
    j["triviality_score"] = d.triviality_score;
    j["kernel_dim"] = d.kernel_dim;
    j["numerically_rigid"] = d.numerically_rigid;
    const int N = d.nodes();
    auto block = [&](int b) {
        std::vector<double> vals(N);
        for (int k = 0; k < N; ++k) vals[k] = d.values[b * N + k];
        return vals;
    };
    j["values"] = {{"xi", block(0)}, {"eta", block(1)}, {"zeta", block(2)}};
    return j;
}

void emit_discrete_flex(const DiscreteFlex& d, const Scenario& s, std::ostream& out) {
    if (s.format == "json") {
        nlohmann::json j = discrete_flex_to_json(d);
        j["command"] = "construct-flex";
        j["scenario"] = scenario_to_json(s);
        out << j.dump(2) << "\n";
        return;
    }
    if (s.format == "csv") {
        write_csv(d, out);
        return;
    }
    out << "discrete flex on " << d.n_u << "x" << d.n_v << " grid\n"
        << "  residual norm (rms): " << num(d.residual_norm) << "\n"
        << "  triviality score   : " << num(d.triviality_score) << "\n"
        << "  kernel dimension   : " << d.kernel_dim << "\n"
        << "  outcome            : "
        << (d.numerically_rigid ? "numerically rigid at this resolution" : "nontrivial flex") << "\n";
}

}  // namespace flexvar
