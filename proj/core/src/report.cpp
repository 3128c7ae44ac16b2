#include "bubble/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace bubble::verification {

ResidualReport make_report(std::string name, double max_abs, std::size_t grid_size, double tolerance,
                           std::string note) {
  ResidualReport r;
  r.name = std::move(name);
  r.max_abs = max_abs;
  r.grid_size = grid_size;
  r.tolerance = tolerance;
  r.pass = max_abs <= tolerance;
  r.note = std::move(note);
  return r;
}

bool all_pass(const std::vector<ResidualReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const ResidualReport& r) { return r.pass; });
}

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_report_table(std::ostream& out, const std::vector<ResidualReport>& reports) {
  std::size_t width = 4;
  for (const auto& r : reports) width = std::max(width, r.name.size());
  char line[256];
  std::snprintf(line, sizeof line, "%-*s  %10s  %10s  %9s  %s\n", static_cast<int>(width), "name", "max_abs",
                "tolerance", "grid", "pass");
  out << line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-*s  %10s  %10s  %9zu  %s\n", static_cast<int>(width), r.name.c_str(),
                  sci(r.max_abs).c_str(), sci(r.tolerance).c_str(), r.grid_size, r.pass ? "PASS" : "FAIL");
    out << line;
  }
  bool header = false;
  for (const auto& r : reports) {
    if (r.note.empty()) continue;
    if (!header) out << "\nnotes:\n";
    header = true;
    out << "  " << r.name << ": " << r.note << '\n';
  }
  const auto failed = std::count_if(reports.begin(), reports.end(), [](const ResidualReport& r) { return !r.pass; });
  out << '\n' << (reports.size() - static_cast<std::size_t>(failed)) << '/' << reports.size() << " checks passed\n";
}

void write_report_csv(std::ostream& out, const std::vector<ResidualReport>& reports) {
  out << "name,max_abs,grid_size,tolerance,pass,note\n";
  char num[64];
  for (const auto& r : reports) {
    out << quoted(r.name) << ',';
    std::snprintf(num, sizeof num, "%.17g", r.max_abs);
    out << num << ',' << r.grid_size << ',';
    std::snprintf(num, sizeof num, "%.17g", r.tolerance);
    out << num << ',' << (r.pass ? "true" : "false") << ',' << quoted(r.note) << '\n';
  }
}

}  // namespace bubble::verification
