#include "svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>

#include "bubble/errors.hpp"

namespace bubble::cli {

namespace {

constexpr double kSize = 480.0;

std::string polyline(const std::vector<double>& theta, const std::vector<double>& R, double scale, double side,
                     const char* style) {
  std::string pts;
  char buf[64];
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double x = kSize / 2 + side * scale * R[i] * std::sin(theta[i]);
    const double y = kSize / 2 - scale * R[i] * std::cos(theta[i]);
    std::snprintf(buf, sizeof buf, "%.2f,%.2f ", x, y);
    pts += buf;
  }
  return "<polyline fill=\"none\" " + std::string(style) + " points=\"" + pts + "\"/>\n";
}

}  // namespace

void write_polar_svg(const std::filesystem::path& path, const RadialProfile& learned, double C) {
  std::vector<double> theta(learned.theta().begin(), learned.theta().end());
  std::vector<double> R(learned.R().begin(), learned.R().end());
  std::vector<double> exact(theta.size());
  double rmax = C;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    exact[i] = C * std::sin(theta[i]);
    rmax = std::max(rmax, R[i]);
  }
  const double scale = 0.42 * kSize / rmax;

  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"" << kSize / 2 << "\" y1=\"10\" x2=\"" << kSize / 2 << "\" y2=\"" << kSize - 10
      << "\" stroke=\"#bbb\" stroke-dasharray=\"4 4\"/>\n";
  const char* exact_style = "stroke=\"#1f77b4\" stroke-width=\"2\"";
  const char* learned_style = "stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"";
  for (double side : {1.0, -1.0}) {
    out << polyline(theta, exact, scale, side, exact_style);
    out << polyline(theta, R, scale, side, learned_style);
  }
  out << "<text x=\"12\" y=\"22\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#1f77b4\">C sin(theta)</text>\n"
      << "<text x=\"12\" y=\"40\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#d62728\">network</text>\n"
      << "</svg>\n";
}

}  // namespace bubble::cli
