#ifndef WCO_REPORT_HPP
#define WCO_REPORT_HPP

#include <string>
#include <vector>

#include "wco/criteria.hpp"

namespace wco {

// Deterministic shortest-faithful formatting used by every report writer.
std::string format_double(double v);

// CSV with columns quantity,j,m,r,value,slope; one row per trace sample.
std::string criterion_csv(const CriterionReport& rep);

// Human-readable verdict block carrying the thresholds used.
std::string criterion_summary(const CriterionReport& rep);

std::string scenario_csv(const struct ScenarioResult& res);

// Log-scale polyline plot of trace value against -log2(1-r).
std::string trace_svg(const RadialTrace& trace, const std::string& title);

}  // namespace wco

#endif  // WCO_REPORT_HPP
