#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "spinholo/reports.hpp"

namespace spinholo::reports {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 600;
constexpr double kLeft = 90.0;
constexpr double kRight = 140.0;  // room for the colour bar
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

std::string fmt(double v, const char* spec = "%.4g") {
  char buf[32];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string tick_label(double v) { return std::isinf(v) ? "∞" : fmt(v); }

std::string axis_label(const std::string& name) {
  if (name == "theta") return "θ";
  if (name == "ep") return "eₚ";
  if (name == "d1") return "d₁";
  if (name == "d2") return "d₂";
  if (name == "ratio1") return "Ω/δ₁";
  if (name == "ratio2") return "Ω/δ₂";
  if (name == "lambda") return "λ";
  if (name == "fidelity") return "F";
  return name;
}

struct Frame {
  double x0, x1, y0, y1;
  double px(double x) const { return kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight); }
  double py(double y) const {
    return kHeight - kBottom - (y - y0) / (y1 - y0) * (kHeight - kTop - kBottom);
  }
};

void header(std::ostringstream& s, const std::string& title) {
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << kWidth / 2 << "\" y=\"30\" text-anchor=\"middle\" font-size=\"18\">"
    << title << "</text>\n";
}

void axes(std::ostringstream& s, const std::string& xname, const std::string& yname) {
  const double right = kWidth - kRight;
  const double bottom = kHeight - kBottom;
  s << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << right - kLeft
    << "\" height=\"" << bottom - kTop << "\" fill=\"none\" stroke=\"black\"/>\n";
  s << "<text x=\"" << (kLeft + right) / 2 << "\" y=\"" << kHeight - 20
    << "\" text-anchor=\"middle\" font-size=\"16\">" << axis_label(xname) << "</text>\n";
  s << "<text x=\"25\" y=\"" << (kTop + bottom) / 2 << "\" text-anchor=\"middle\" font-size=\"16\""
    << " transform=\"rotate(-90 25 " << (kTop + bottom) / 2 << ")\">" << axis_label(yname)
    << "</text>\n";
}

void linear_ticks(std::ostringstream& s, const Frame& f, bool x_axis) {
  for (int k = 0; k <= 5; ++k) {
    if (x_axis) {
      const double v = f.x0 + (f.x1 - f.x0) * k / 5;
      const double x = f.px(v);
      s << "<line x1=\"" << x << "\" y1=\"" << kHeight - kBottom << "\" x2=\"" << x << "\" y2=\""
        << kHeight - kBottom + 5 << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << x << "\" y=\"" << kHeight - kBottom + 20
        << "\" text-anchor=\"middle\" font-size=\"12\">" << fmt(v) << "</text>\n";
    } else {
      const double v = f.y0 + (f.y1 - f.y0) * k / 5;
      const double y = f.py(v);
      s << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << y << "\" x2=\"" << kLeft << "\" y2=\"" << y
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\" font-size=\"12\">" << fmt(v) << "</text>\n";
    }
  }
}

std::string polyline(const std::vector<double>& xs, const std::vector<double>& ys, const Frame& f) {
  std::ostringstream s;
  s << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    s << fmt(f.px(xs[k]), "%.2f") << ',' << fmt(f.py(ys[k]), "%.2f") << ' ';
  }
  s << "\"/>\n";
  return s.str();
}

Frame span_of(const std::vector<double>& xs, const std::vector<double>& ys) {
  auto [xlo, xhi] = std::minmax_element(xs.begin(), xs.end());
  auto [ylo, yhi] = std::minmax_element(ys.begin(), ys.end());
  Frame f{*xlo, *xhi, *ylo, *yhi};
  if (f.x1 <= f.x0) f.x1 = f.x0 + 1.0;
  if (f.y1 - f.y0 < 1e-12) {
    f.y0 -= 0.5e-3;
    f.y1 += 0.5e-3;
  }
  const double pad = 0.05 * (f.y1 - f.y0);
  f.y0 -= pad;
  f.y1 += pad;
  return f;
}

std::string line_plot(const std::string& title, const std::string& xname, const std::string& yname,
                      const std::vector<double>& xs, const std::vector<double>& ys) {
  std::ostringstream s;
  header(s, title);
  if (!xs.empty()) {
    const Frame f = span_of(xs, ys);
    axes(s, xname, yname);
    linear_ticks(s, f, true);
    linear_ticks(s, f, false);
    s << polyline(xs, ys, f);
  }
  s << "</svg>\n";
  return s.str();
}

// Blue (low) to yellow (high).
std::string colour(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(40 + 215 * t));
  const int g = static_cast<int>(std::lround(40 + 190 * t));
  const int b = static_cast<int>(std::lround(150 - 110 * t));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

// Cells are laid out by index so the infinite endpoint gets a column of its own.
std::string heatmap(const SweepTable& t) {
  std::ostringstream s;
  header(s, t.kind);
  const auto& xs = t.axes[0];
  const auto& ys = t.axes[1];
  const double right = kWidth - kRight;
  const double bottom = kHeight - kBottom;
  const double cw = (right - kLeft) / static_cast<double>(xs.size());
  const double ch = (bottom - kTop) / static_cast<double>(ys.size());
  const auto [lo_it, hi_it] = std::minmax_element(t.fidelity.begin(), t.fidelity.end());
  const double lo = *lo_it;
  const double hi = *hi_it > lo ? *hi_it : lo + 1e-12;

  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const double v = t.fidelity[i * ys.size() + j];
      s << "<rect x=\"" << fmt(kLeft + cw * static_cast<double>(i), "%.2f") << "\" y=\""
        << fmt(bottom - ch * static_cast<double>(j + 1), "%.2f") << "\" width=\""
        << fmt(cw, "%.2f") << "\" height=\"" << fmt(ch, "%.2f") << "\" fill=\""
        << colour((v - lo) / (hi - lo)) << "\"><title>" << format_number(v) << "</title></rect>\n";
    }
  }
  axes(s, t.axis_names[0], t.axis_names[1]);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s << "<text x=\"" << fmt(kLeft + cw * (static_cast<double>(i) + 0.5), "%.2f") << "\" y=\""
      << bottom + 20 << "\" text-anchor=\"middle\" font-size=\"11\">" << tick_label(xs[i])
      << "</text>\n";
  }
  for (std::size_t j = 0; j < ys.size(); ++j) {
    s << "<text x=\"" << kLeft - 8 << "\" y=\""
      << fmt(bottom - ch * (static_cast<double>(j) + 0.5) + 4, "%.2f")
      << "\" text-anchor=\"end\" font-size=\"11\">" << tick_label(ys[j]) << "</text>\n";
  }

  const double bx = right + 30;
  const int bands = 50;
  const double bh = (bottom - kTop) / bands;
  for (int k = 0; k < bands; ++k) {
    s << "<rect x=\"" << bx << "\" y=\"" << fmt(bottom - bh * (k + 1), "%.2f")
      << "\" width=\"20\" height=\"" << fmt(bh + 0.5, "%.2f") << "\" fill=\""
      << colour((k + 0.5) / bands) << "\"/>\n";
  }
  s << "<text x=\"" << bx + 25 << "\" y=\"" << bottom << "\" font-size=\"11\">" << fmt(lo)
    << "</text>\n"
    << "<text x=\"" << bx + 25 << "\" y=\"" << kTop + 10 << "\" font-size=\"11\">" << fmt(hi)
    << "</text>\n"
    << "<text x=\"" << bx + 10 << "\" y=\"" << kTop - 10
    << "\" text-anchor=\"middle\" font-size=\"14\">F</text>\n";
  s << "</svg>\n";
  return s.str();
}

}  // namespace

std::string theta_svg(const std::vector<ThetaRow>& rows) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : rows) {
    xs.push_back(r.theta);
    ys.push_back(r.metrics.ep);
  }
  return line_plot("entangling power", "theta", "ep", xs, ys);
}

std::string sweep_svg(const SweepTable& t) {
  if (t.axes.size() == 2) return heatmap(t);
  return line_plot(t.kind, t.axis_names.empty() ? "x" : t.axis_names[0], "fidelity",
                   t.axes.empty() ? std::vector<double>{} : t.axes[0], t.fidelity);
}

}  // namespace spinholo::reports
