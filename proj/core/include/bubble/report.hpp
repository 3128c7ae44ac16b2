#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace bubble::verification {

/// One verified quantity. pass is exactly (max_abs <= tolerance); NaN fails.
struct ResidualReport {
  std::string name;
  double max_abs = 0.0;
  std::size_t grid_size = 0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

ResidualReport make_report(std::string name, double max_abs, std::size_t grid_size, double tolerance,
                           std::string note = {});

bool all_pass(const std::vector<ResidualReport>& reports);

/// Aligned plain-text table: name, max_abs, tolerance, grid, pass, with
/// notes listed underneath.
void write_report_table(std::ostream& out, const std::vector<ResidualReport>& reports);

/// name,max_abs,grid_size,tolerance,pass,note
void write_report_csv(std::ostream& out, const std::vector<ResidualReport>& reports);

}  // namespace bubble::verification
