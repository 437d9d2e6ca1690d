#include "extrema/report_io.hpp"

#include "extrema/numeric.hpp"

namespace extrema {

void write_report_csv(std::ostream& out, const std::vector<HuntReport>& reports) {
  out << "method,sigma,T,best_t,measured,predicted,delta_big,verdict\n";
  for (const HuntReport& r : reports) {
    out << to_string(r.method) << ',' << format_double(r.sigma) << ',' << format_double(r.T) << ','
        << format_double(r.best_t) << ',' << format_double(r.measured) << ','
        << format_double(r.predicted) << ',' << format_double(r.delta_big) << ',' << r.verdict
        << '\n';
  }
}

void write_diagnostics(std::ostream& out, const HuntReport& report) {
  out << "method=" << to_string(report.method) << '\n';
  for (const auto& [key, value] : report.diagnostics) out << key << '=' << format_double(value) << '\n';
}

void write_plan_csv(std::ostream& out, const ResonatorPlan& plan) {
  out << "n,re_r,im_r\n";
  for (const ResonatorTerm& t : plan.terms()) {
    out << t.n << ',' << format_double(t.r.real()) << ',' << format_double(t.r.imag()) << '\n';
  }
}

void write_recipe(std::ostream& out, const WeightRecipe& recipe, const ResonanceConstant& k) {
  out << "sigma=" << format_double(recipe.sigma) << '\n'
      << "kappa=" << format_double(recipe.kappa) << '\n'
      << "m=" << recipe.m << '\n'
      << "N=" << recipe.N << '\n'
      << "ell=" << format_double(recipe.ell) << '\n';
  if (recipe.c) out << "c=" << format_double(*recipe.c) << '\n';
  out << "support_lo=" << format_double(recipe.support_lo) << '\n'
      << "support_hi=" << format_double(recipe.support_hi) << '\n'
      << "M_res=" << format_double(recipe.M_res) << '\n'
      << "rankin_alpha=" << format_double(recipe.rankin_alpha) << '\n'
      << "wide_window=" << (recipe.wide_window() ? 1 : 0) << '\n'
      << "C_L=" << format_double(k.C_L) << '\n'
      << "theta=" << format_double(k.theta) << '\n';
}

}  // namespace extrema
