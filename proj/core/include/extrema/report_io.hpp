#pragma once

#include <ostream>
#include <vector>

#include "extrema/hunter.hpp"
#include "extrema/resonator.hpp"

namespace extrema {

/// `method,sigma,T,best_t,measured,predicted,delta_big,verdict` plus one row per report.
void write_report_csv(std::ostream& out, const std::vector<HuntReport>& reports);

/// Diagnostics as key=value lines, in insertion order.
void write_diagnostics(std::ostream& out, const HuntReport& report);

/// `n,re_r,im_r`, ascending n.
void write_plan_csv(std::ostream& out, const ResonatorPlan& plan);

/// All derived recipe constants as key=value lines.
void write_recipe(std::ostream& out, const WeightRecipe& recipe, const ResonanceConstant& k);

}  // namespace extrema
