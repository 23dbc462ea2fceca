#include "wco/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "wco/scenarios.hpp"

namespace wco {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string criterion_csv(const CriterionReport& rep) {
  std::ostringstream out;
  out << "quantity,j,m,r,value,slope\n";
  for (std::size_t j = 0; j < rep.traces.size(); ++j) {
    const auto& t = rep.traces[j];
    const std::string slope = format_double(t.slope());
    for (std::size_t i = 0; i < t.radii.size(); ++i) {
      out << t.name << ',' << j << ',' << i << ','
          << format_double(t.radii[i]) << ',' << format_double(t.values[i])
          << ',' << slope << '\n';
    }
  }
  return out.str();
}

std::string criterion_summary(const CriterionReport& rep) {
  std::ostringstream out;
  out << "criterion " << rep.id << ": " << to_string(rep.verdict) << '\n';
  out << "  thresholds: slope_bounded=" << format_double(rep.thresholds.slope_bounded)
      << " slope_divergent=" << format_double(rep.thresholds.slope_divergent)
      << " eps_plus=" << format_double(rep.thresholds.eps_plus)
      << " eps_zero=" << format_double(rep.thresholds.eps_zero) << '\n';
  if (rep.n0) out << "  n0=" << *rep.n0 << '\n';
  if (!rep.hypothesis_note.empty())
    out << "  hypotheses: " << rep.hypothesis_note << '\n';
  out << "  norm_representative=" << format_double(rep.norm_estimate) << '\n';
  for (std::size_t j = 0; j < rep.traces.size(); ++j) {
    const auto& t = rep.traces[j];
    out << "  " << t.name << ": class=" << to_string(rep.classes[j])
        << " last=" << format_double(t.last())
        << " max=" << format_double(t.max_value())
        << " slope=" << format_double(t.slope()) << '\n';
  }
  return out.str();
}

std::string scenario_csv(const ScenarioResult& res) {
  std::ostringstream out;
  out << "scenario,check,expected,actual,pass,detail\n";
  for (const auto& c : res.checks) {
    std::string detail = c.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    out << res.id << ',' << c.name << ',' << c.expected << ',' << c.actual
        << ',' << (c.pass ? "1" : "0") << ',' << detail << '\n';
  }
  return out.str();
}

std::string trace_svg(const RadialTrace& trace, const std::string& title) {
  const int W = 640, H = 420, ML = 70, MR = 20, MT = 40, MB = 50;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\">\n";
  out << "<rect width=\"" << W << "\" height=\"" << H
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-size=\"15\">" << title << "</text>\n";

  std::vector<double> xs, ys;
  double ymin = 1e300, ymax = -1e300, xmin = 1e300, xmax = -1e300;
  for (std::size_t i = 0; i < trace.radii.size(); ++i) {
    if (trace.values[i] <= 0.0) continue;
    const double x = -std::log2(1.0 - trace.radii[i]);
    const double y = std::log10(trace.values[i]);
    xs.push_back(x);
    ys.push_back(y);
    xmin = std::min(xmin, x); xmax = std::max(xmax, x);
    ymin = std::min(ymin, y); ymax = std::max(ymax, y);
  }
  if (xs.empty()) {
    out << "<text x=\"" << W / 2 << "\" y=\"" << H / 2
        << "\" text-anchor=\"middle\" font-size=\"13\">all values zero"
        << "</text>\n</svg>\n";
    return out.str();
  }
  if (xmax - xmin < 1e-12) xmax = xmin + 1.0;
  if (ymax - ymin < 1e-12) ymax = ymin + 1.0;

  auto px = [&](double x) {
    return ML + (x - xmin) / (xmax - xmin) * (W - ML - MR);
  };
  auto py = [&](double y) {
    return H - MB - (y - ymin) / (ymax - ymin) * (H - MT - MB);
  };

  out << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR
      << "\" y2=\"" << H - MB << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML
      << "\" y2=\"" << H - MB << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << (ML + W - MR) / 2 << "\" y=\"" << H - 12
      << "\" text-anchor=\"middle\" font-size=\"12\">-log2(1-r)</text>\n";
  out << "<text x=\"16\" y=\"" << (MT + H - MB) / 2
      << "\" font-size=\"12\" transform=\"rotate(-90 16 "
      << (MT + H - MB) / 2 << ")\">log10(value)</text>\n";

  for (int i = 0; i <= 4; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 4.0;
    const double yv = ymin + (ymax - ymin) * i / 4.0;
    char bx[32], by[32];
    std::snprintf(bx, sizeof bx, "%.3g", xv);
    std::snprintf(by, sizeof by, "%.3g", yv);
    out << "<text x=\"" << px(xv) << "\" y=\"" << H - MB + 16
        << "\" text-anchor=\"middle\" font-size=\"10\">" << bx << "</text>\n";
    out << "<text x=\"" << ML - 6 << "\" y=\"" << py(yv) + 4
        << "\" text-anchor=\"end\" font-size=\"10\">" << by << "</text>\n";
  }

  out << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" "
         "points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(xs[i]), py(ys[i]));
    out << buf;
  }
  out << "\"/>\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.5\" fill=\"#1f6fb2\"/>\n",
                  px(xs[i]), py(ys[i]));
    out << buf;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace wco
