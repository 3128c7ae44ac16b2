#include "bubble/profile_io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "bubble/errors.hpp"

namespace bubble {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_field(const std::string& text, std::size_t line) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw InputError("profile line " + std::to_string(line) + ": cannot parse '" + t + "'");
  return value;
}

}  // namespace

void write_profile(std::ostream& out, const RadialProfile& profile) {
  out << "theta,R,dR,d2R\n" << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t i = 0; i < profile.size(); ++i)
    out << profile.theta()[i] << ',' << profile.R()[i] << ',' << profile.dR()[i] << ','
        << profile.d2R()[i] << '\n';
}

void write_profile(const std::filesystem::path& path, const RadialProfile& profile) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  write_profile(out, profile);
}

RadialProfile read_profile(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("profile file is empty");
  std::string header;
  for (char ch : line)
    if (ch != ' ' && ch != '\t' && ch != '\r') header.push_back(ch);
  if (header != "theta,R,dR,d2R") throw InputError("profile header must be 'theta,R,dR,d2R'");

  std::vector<double> theta, R, dR, d2R;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 4)
      throw InputError("profile line " + std::to_string(lineno) + ": expected 4 fields");
    theta.push_back(parse_field(fields[0], lineno));
    R.push_back(parse_field(fields[1], lineno));
    dR.push_back(parse_field(fields[2], lineno));
    d2R.push_back(parse_field(fields[3], lineno));
  }
  try {
    return RadialProfile(std::move(theta), std::move(R), std::move(dR), std::move(d2R),
                         ProfileSource::file);
  } catch (const DomainError& e) {
    throw InputError(std::string("invalid profile: ") + e.what());
  }
}

RadialProfile read_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open profile " + path.string());
  return read_profile(in);
}

}  // namespace bubble
