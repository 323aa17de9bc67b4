#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "spinholo/reports.hpp"

namespace spinholo::reports {

using nlohmann::json;

namespace {

json number_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

json metrics_json(const GateMetrics& g) {
  return {{"g1", {g.g1.real(), g.g1.imag()}},
          {"g2", g.g2},
          {"weyl", {g.weyl.c1, g.weyl.c2, g.weyl.c3}},
          {"ep", g.ep},
          {"class", to_string(g.entangler_class)}};
}

std::string complex_text(Complex z) {
  std::ostringstream s;
  s << format_number(z.real()) << (std::signbit(z.imag()) ? "-" : "+")
    << format_number(std::abs(z.imag())) << "j";
  return s.str();
}

void matrix_text(std::ostringstream& s, const CMatrix& m) {
  char buf[64];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    s << " ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof buf, " %+.6f%+.6fj", m(r, c).real(), m(r, c).imag());
      s << buf;
    }
    s << "\n";
  }
}

void metrics_text(std::ostringstream& s, const GateMetrics& g) {
  s << "G1        " << complex_text(g.g1) << "\n"
    << "G2        " << format_number(g.g2) << "\n"
    << "weyl      (" << format_number(g.weyl.c1) << ", " << format_number(g.weyl.c2) << ", "
    << format_number(g.weyl.c3) << ")\n"
    << "ep        " << format_number(g.ep) << "\n"
    << "class     " << to_string(g.entangler_class) << "\n";
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string theta_csv(const std::vector<ThetaRow>& rows) {
  std::string out = "theta,ep,g1_re,g1_im,g2,c1,c2,c3,class\n";
  for (const auto& r : rows) {
    const GateMetrics& g = r.metrics;
    for (double v : {r.theta, g.ep, g.g1.real(), g.g1.imag(), g.g2, g.weyl.c1, g.weyl.c2, g.weyl.c3}) {
      out += format_number(v);
      out += ',';
    }
    out += to_string(g.entangler_class);
    out += '\n';
  }
  return out;
}

std::string sweep_csv(const SweepTable& t) {
  std::string out;
  for (const auto& name : t.axis_names) out += name + ",";
  out += "fidelity\n";
  // Row-major over the axes, last axis fastest.
  std::vector<std::size_t> idx(t.axes.size(), 0);
  for (std::size_t row = 0; row < t.rows(); ++row) {
    for (std::size_t a = 0; a < t.axes.size(); ++a) {
      out += format_number(t.axes[a][idx[a]]);
      out += ',';
    }
    out += format_number(t.fidelity[row]);
    out += '\n';
    for (std::size_t a = t.axes.size(); a-- > 0;) {
      if (++idx[a] < t.axes[a].size()) break;
      idx[a] = 0;
    }
  }
  return out;
}

std::string sweep_json(const SweepTable& t) {
  json doc;
  doc["kind"] = t.kind;
  doc["axis_names"] = t.axis_names;
  json axes = json::array();
  for (const auto& axis : t.axes) {
    json a = json::array();
    for (double v : axis) a.push_back(number_json(v));
    axes.push_back(a);
  }
  doc["axes"] = axes;
  doc["fidelity"] = t.fidelity;
  json params = json::object();
  for (const auto& [k, v] : t.parameters) params[k] = number_json(v);
  doc["parameters"] = params;
  return doc.dump(2) + "\n";
}

std::string theta_json(const std::vector<ThetaRow>& rows) {
  json doc = json::array();
  for (const auto& r : rows) {
    json item = metrics_json(r.metrics);
    item["theta"] = r.theta;
    doc.push_back(item);
  }
  return doc.dump(2) + "\n";
}

std::string gate_text(const GateReport& r) {
  std::ostringstream s;
  s << "couplings j1=" << format_number(r.couplings.j1) << " j2=" << format_number(r.couplings.j2)
    << " d1=" << format_number(r.couplings.d1) << " d2=" << format_number(r.couplings.d2) << "\n"
    << "omega     " << format_number(r.polar.omega) << "\n"
    << "theta     " << format_number(r.polar.theta) << "\n"
    << "phi1      " << format_number(r.polar.phi1) << "\n"
    << "phi2      " << format_number(r.polar.phi2) << "\n"
    << "pulse     " << to_string(r.pulse.shape) << " duration=" << format_number(r.pulse.duration)
    << " area=" << format_number(total_area(r.pulse)) << " winding=" << r.pulse.winding << "\n"
    << "gate (register block, ancilla |0>):\n";
  matrix_text(s, r.simulated.matrix);
  metrics_text(s, r.metrics);
  s << "leakage   " << format_number(r.simulated.leakage) << "\n"
    << "deviation " << format_number(r.deviation) << "\n";
  return s.str();
}

std::string gate_json(const GateReport& r) {
  json doc;
  doc["couplings"] = {{"j1", r.couplings.j1}, {"j2", r.couplings.j2},
                      {"d1", r.couplings.d1}, {"d2", r.couplings.d2}};
  doc["omega"] = r.polar.omega;
  doc["theta"] = r.polar.theta;
  doc["phi1"] = r.polar.phi1;
  doc["phi2"] = r.polar.phi2;
  doc["pulse"] = {{"shape", to_string(r.pulse.shape)},
                  {"duration", r.pulse.duration},
                  {"area", total_area(r.pulse)},
                  {"winding", r.pulse.winding}};
  doc["gate"] = matrix_json(r.simulated.matrix);
  doc["metrics"] = metrics_json(r.metrics);
  doc["leakage"] = r.simulated.leakage;
  doc["deviation"] = r.deviation;
  return doc.dump(2) + "\n";
}

std::string classify_text(const ClassifyReport& r) {
  std::ostringstream s;
  s << "gate:\n";
  matrix_text(s, r.matrix);
  metrics_text(s, r.metrics);
  return s.str();
}

std::string classify_json(const ClassifyReport& r) {
  json doc;
  doc["gate"] = matrix_json(r.matrix);
  doc["metrics"] = metrics_json(r.metrics);
  return doc.dump(2) + "\n";
}

}  // namespace spinholo::reports
