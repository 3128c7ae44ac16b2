#include "bubble/checkpoint.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "bubble/errors.hpp"

namespace bubble::pinn {

namespace {
constexpr const char* kTag = "bubble-pinn-checkpoint v1";
}

void write_checkpoint(std::ostream& out, const Network& net) {
  out << kTag << "\nwidths";
  for (auto w : net.widths()) out << ' ' << w;
  out << '\n';
  char buf[32];
  for (std::size_t l = 0; l < net.layer_count(); ++l) {
    const auto W = net.weight(l);
    for (Eigen::Index i = 0; i < W.rows(); ++i) {
      for (Eigen::Index j = 0; j < W.cols(); ++j) {
        std::snprintf(buf, sizeof buf, "%.17g", W(i, j));
        out << (j ? " " : "") << buf;
      }
      out << '\n';
    }
    const auto b = net.bias(l);
    for (Eigen::Index i = 0; i < b.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", b[i]);
      out << (i ? " " : "") << buf;
    }
    out << '\n';
  }
}

void write_checkpoint(const std::filesystem::path& path, const Network& net) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write checkpoint " + path.string());
  write_checkpoint(out, net);
  if (!out) throw InputError("failed writing checkpoint " + path.string());
}

Network read_checkpoint(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTag) throw InputError("checkpoint: missing version tag");
  std::string word;
  if (!(in >> word) || word != "widths") throw InputError("checkpoint: missing widths line");
  std::getline(in, line);
  std::vector<std::size_t> widths;
  {
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
      while (p < end && *p == ' ') ++p;
      if (p == end) break;
      std::size_t w = 0;
      const auto [q, ec] = std::from_chars(p, end, w);
      if (ec != std::errc()) throw InputError("checkpoint: bad width");
      widths.push_back(w);
      p = q;
    }
  }
  Network net = [&] {
    try {
      return Network(widths);
    } catch (const DomainError& e) {
      throw InputError(std::string("checkpoint: ") + e.what());
    }
  }();
  auto& params = net.parameters();
  for (Eigen::Index k = 0; k < params.size(); ++k) {
    if (!(in >> word)) throw InputError("checkpoint: payload too short");
    double v = 0.0;
    const auto [q, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || q != word.data() + word.size() || !std::isfinite(v))
      throw InputError("checkpoint: bad value '" + word + "'");
    params[k] = v;
  }
  if (in >> word) throw InputError("checkpoint: trailing data");
  return net;
}

Network read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read checkpoint " + path.string());
  return read_checkpoint(in);
}

}  // namespace bubble::pinn
