#pragma once

#include <iosfwd>
#include <string>

#include "flexvar/discrete_flex.hpp"
#include "flexvar/scenario.hpp"
#include "flexvar/variation.hpp"

namespace flexvar {

struct CurvatureSample {
    double u, v, mean, k1, k2;
};

struct CurvatureReport {
    double total_mean_curvature = 0.0;
    double area = 0.0;
    std::vector<CurvatureSample> samples;
};

struct FlexCheckReport {
    double max_residual_first_order = 0.0;
    double max_residual_second_order = 0.0;
    double worst_u = 0.0, worst_v = 0.0;
    bool pass = false;
    double tol = 1e-8;
    std::optional<double> triviality_score;  // present for constructed flexes
    std::optional<double> residual_norm;
    std::optional<int> kernel_dim;
};

// Every report embeds the full resolved scenario so a run can be
// reproduced from its own output.
void emit_curvature(const CurvatureReport& r, const Scenario& s, std::ostream& out);
void emit_flex_check(const FlexCheckReport& r, const Scenario& s, std::ostream& out);
void emit_variation(const VariationReport& r, const Scenario& s, std::ostream& out);
void emit_sweep(const std::vector<SweepRow>& rows, const Scenario& s, std::ostream& out);
void emit_discrete_flex(const DiscreteFlex& d, const Scenario& s, std::ostream& out);

nlohmann::json variation_to_json(const VariationReport& r);
nlohmann::json discrete_flex_to_json(const DiscreteFlex& d);

}  // namespace flexvar
