#include "phasespace/phase_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace phasespace {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_pairs(std::ostream& os, const Eigen::MatrixXcd& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      os << g17(m(r, c).real()) << ',' << g17(m(r, c).imag()) << '\n';
}

struct AxisTok {
  std::string name;
  long count;
  double step;
};

AxisTok parse_axis(const std::string& tok) {
  const auto a = tok.find(':'), b = tok.rfind(':');
  if (a == std::string::npos || a == b) throw std::runtime_error("malformed axis token: " + tok);
  AxisTok t;
  t.name = tok.substr(0, a);
  t.count = std::stol(tok.substr(a + 1, b - a - 1));
  t.step = std::stod(tok.substr(b + 1));
  return t;
}

std::pair<AxisTok, AxisTok> read_header(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("empty CSV");
  std::istringstream hs(line);
  std::string hash, word, t1, t2;
  hs >> hash >> word >> t1 >> t2;
  if (hash != "#" || word != "axes") throw std::runtime_error("CSV header must start with '# axes'");
  return {parse_axis(t1), parse_axis(t2)};
}

Eigen::MatrixXcd read_pairs(std::istream& is, long rows, long cols) {
  Eigen::MatrixXcd m(rows, cols);
  std::string line;
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) {
      if (!std::getline(is, line)) throw std::runtime_error("CSV truncated");
      const auto comma = line.find(',');
      if (comma == std::string::npos) throw std::runtime_error("CSV line without comma: " + line);
      m(r, c) = {std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))};
    }
  return m;
}

nlohmann::json axis_json(long count, double start, double step) {
  return {{"count", count}, {"start", start}, {"step", step}};
}

nlohmann::json grid_json(const GridSpec& g) { return {{"n", g.n}, {"dx", g.dx}, {"dp", g.dp}}; }

nlohmann::json matrix_part(const Eigen::MatrixXcd& m, bool imag) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(imag ? m(r, c).imag() : m(r, c).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from(const nlohmann::json& re, const nlohmann::json& im, long rows,
                             long cols) {
  if ((long)re.size() != rows || (long)im.size() != rows)
    throw std::runtime_error("JSON array shape does not match grid");
  Eigen::MatrixXcd m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    if ((long)re[r].size() != cols || (long)im[r].size() != cols)
      throw std::runtime_error("JSON array shape does not match grid");
    for (long c = 0; c < cols; ++c) m(r, c) = {re[r][c].get<double>(), im[r][c].get<double>()};
  }
  return m;
}

}  // namespace

void write_csv(std::ostream& os, const PhaseFunction& A) {
  const GridSpec& g = A.grid;
  os << "# axes q:" << g.nq() << ':' << g17(g.dq()) << " p:" << g.n << ':' << g17(g.dp) << '\n';
  write_pairs(os, A.values);
}

void write_csv(std::ostream& os, const KernelMatrix& K) {
  const GridSpec& g = K.grid;
  os << "# axes x:" << g.n << ':' << g17(g.dx) << " y:" << g.n << ':' << g17(g.dx) << '\n';
  write_pairs(os, K.entries);
}

PhaseFunction read_phase_csv(std::istream& is) {
  auto [qa, pa] = read_header(is);
  if (qa.name != "q" || pa.name != "p" || qa.count != 2 * pa.count)
    throw std::runtime_error("CSV header does not describe a phase-space array");
  PhaseFunction A = PhaseFunction::zeros(make_grid(int(pa.count), 2.0 * qa.step));
  A.values = read_pairs(is, qa.count, pa.count);
  return A;
}

KernelMatrix read_kernel_csv(std::istream& is) {
  auto [xa, ya] = read_header(is);
  if (xa.name != "x" || ya.name != "y" || xa.count != ya.count)
    throw std::runtime_error("CSV header does not describe a kernel array");
  KernelMatrix K = KernelMatrix::zeros(make_grid(int(xa.count), xa.step));
  K.entries = read_pairs(is, xa.count, ya.count);
  return K;
}

nlohmann::json to_json(const PhaseFunction& A) {
  const GridSpec& g = A.grid;
  return {{"kind", "phase"},
          {"grid", grid_json(g)},
          {"axes", {{"q", axis_json(g.nq(), g.q(0), g.dq())}, {"p", axis_json(g.n, g.p(0), g.dp)}}},
          {"re", matrix_part(A.values, false)},
          {"im", matrix_part(A.values, true)}};
}

nlohmann::json to_json(const KernelMatrix& K) {
  const GridSpec& g = K.grid;
  return {{"kind", "kernel"},
          {"grid", grid_json(g)},
          {"axes", {{"x", axis_json(g.n, g.x(0), g.dx)}, {"y", axis_json(g.n, g.x(0), g.dx)}}},
          {"re", matrix_part(K.entries, false)},
          {"im", matrix_part(K.entries, true)}};
}

PhaseFunction phase_from_json(const nlohmann::json& j) {
  if (j.at("kind") != "phase") throw std::runtime_error("JSON document is not a phase array");
  PhaseFunction A =
      PhaseFunction::zeros(make_grid(j.at("grid").at("n").get<int>(), j.at("grid").at("dx").get<double>()));
  A.values = matrix_from(j.at("re"), j.at("im"), A.grid.nq(), A.grid.n);
  return A;
}

KernelMatrix kernel_from_json(const nlohmann::json& j) {
  if (j.at("kind") != "kernel") throw std::runtime_error("JSON document is not a kernel array");
  KernelMatrix K =
      KernelMatrix::zeros(make_grid(j.at("grid").at("n").get<int>(), j.at("grid").at("dx").get<double>()));
  K.entries = matrix_from(j.at("re"), j.at("im"), K.grid.n, K.grid.n);
  return K;
}

std::string save_phase(const PhaseFunction& A, const std::string& stem, const std::string& format) {
  std::string path;
  if (format == "csv") {
    path = stem + ".csv";
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    write_csv(f, A);
  } else if (format == "json") {
    path = stem + ".json";
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << to_json(A).dump() << '\n';
  } else {
    throw std::invalid_argument("unknown format " + format);
  }
  return path;
}

}  // namespace phasespace
