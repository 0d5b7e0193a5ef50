#include "hgraphon/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace hgraphon {

namespace {

constexpr double kWidth = 760, kHeight = 480;
constexpr double kLeft = 64, kRight = 600, kTop = 24, kBottom = 420;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_phat_chart(
    const std::vector<std::pair<std::string, std::vector<ExperimentRow>>>& series) {
  std::set<int> ns;
  for (const auto& [name, rows] : series)
    for (const auto& r : rows) ns.insert(r.n);
  double lo = ns.empty() ? 1.0 : std::log10(static_cast<double>(*ns.begin()));
  double hi = ns.empty() ? 2.0 : std::log10(static_cast<double>(*ns.rbegin()));
  if (hi - lo < 1e-9) {
    lo -= 0.5;
    hi += 0.5;
  }

  auto sx = [&](int n) { return kLeft + (std::log10(static_cast<double>(n)) - lo) / (hi - lo) * (kRight - kLeft); };
  auto sy = [&](double p) { return kBottom - p * (kBottom - kTop); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
         "\" fill=\"white\"/>\n";

  // gridlines and y labels
  for (int k = 0; k <= 4; ++k) {
    double p = k / 4.0;
    double y = sy(p);
    out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kRight) +
           "\" y2=\"" + num(y) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(y + 4) +
           "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">" +
           format_sig6(p) + "</text>\n";
  }
  // x ticks at each sampled n
  for (int n : ns) {
    double x = sx(n);
    out += "<line x1=\"" + num(x) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(x) + "\" y2=\"" +
           num(kBottom + 5) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + num(x) + "\" y=\"" + num(kBottom + 20) +
           "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">" +
           std::to_string(n) + "</text>\n";
  }
  // axes
  out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
         "\" y2=\"" + num(kBottom) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(kRight) +
         "\" y2=\"" + num(kBottom) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "<text x=\"" + num((kLeft + kRight) / 2) + "\" y=\"" + num(kHeight - 16) +
         "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">n (log scale)"
         "</text>\n";
  out += "<text x=\"16\" y=\"" + num((kTop + kBottom) / 2) +
         "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
         "transform=\"rotate(-90 16 " +
         num((kTop + kBottom) / 2) + ")\">P_H</text>\n";

  // series: whiskers, polyline, markers, legend entry
  for (size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof kPalette / sizeof kPalette[0])];
    const auto& rows = series[s].second;
    for (const auto& r : rows) {
      double x = sx(r.n);
      out += "<line x1=\"" + num(x) + "\" y1=\"" + num(sy(r.ci_low)) + "\" x2=\"" + num(x) +
             "\" y2=\"" + num(sy(r.ci_high)) + "\" stroke=\"" + color +
             "\" stroke-width=\"1\"/>\n";
      out += "<line x1=\"" + num(x - 3) + "\" y1=\"" + num(sy(r.ci_low)) + "\" x2=\"" +
             num(x + 3) + "\" y2=\"" + num(sy(r.ci_low)) + "\" stroke=\"" + color +
             "\" stroke-width=\"1\"/>\n";
      out += "<line x1=\"" + num(x - 3) + "\" y1=\"" + num(sy(r.ci_high)) + "\" x2=\"" +
             num(x + 3) + "\" y2=\"" + num(sy(r.ci_high)) + "\" stroke=\"" + color +
             "\" stroke-width=\"1\"/>\n";
    }
    if (!rows.empty()) {
      out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
             "\" stroke-width=\"2\" points=\"";
      for (const auto& r : rows) out += num(sx(r.n)) + "," + num(sy(r.p_hat)) + " ";
      out += "\"/>\n";
      for (const auto& r : rows)
        out += "<circle cx=\"" + num(sx(r.n)) + "\" cy=\"" + num(sy(r.p_hat)) +
               "\" r=\"3\" fill=\"" + color + "\"/>\n";
    }
    double ly = kTop + 16 + 18 * static_cast<double>(s);
    out += "<line x1=\"" + num(kRight + 12) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
           num(kRight + 36) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + num(kRight + 42) + "\" y=\"" + num(ly) +
           "\" font-size=\"12\" font-family=\"sans-serif\">" + series[s].first + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hgraphon
