#include "ssdg/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ssdg {

namespace {

Real parse_double(const std::string& token, long line_no) {
  Real value{};
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::runtime_error("csv: bad float '" + token + "' on line " +
                             std::to_string(line_no));
  }
  return value;
}

}  // namespace

std::string format_double(Real value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_snapshot_csv(const std::string& path, const ArrayXr& x, const ArrayXc& values) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot open '" + path + "' for writing");
  out << "x,re,im,rho\n";
  for (Index i = 0; i < x.size(); ++i) {
    const Real re = values[i].real();
    const Real im = values[i].imag();
    out << format_double(x[i]) << ',' << format_double(re) << ','
        << format_double(im) << ',' << format_double(re * re + im * im) << '\n';
  }
}

void write_snapshot_csv(const std::string& path, const ComplexField& field) {
  write_snapshot_csv(path, field.grid.points(), field.values);
}

SnapshotCsv read_snapshot_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line.rfind("x,re,im", 0) != 0) {
    throw std::runtime_error("csv: missing 'x,re,im,rho' header in '" + path + "'");
  }
  std::vector<Real> xs, res, ims;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string token;
    std::vector<std::string> tokens;
    while (std::getline(ss, token, ',')) tokens.push_back(token);
    if (tokens.size() < 3) {
      throw std::runtime_error("csv: expected >= 3 columns on line " +
                               std::to_string(line_no));
    }
    xs.push_back(parse_double(tokens[0], line_no));
    res.push_back(parse_double(tokens[1], line_no));
    ims.push_back(parse_double(tokens[2], line_no));
  }
  const Index n = static_cast<Index>(xs.size());
  if (n < 2) throw std::runtime_error("csv: fewer than 2 rows in '" + path + "'");

  SnapshotCsv snap;
  snap.x = Eigen::Map<const ArrayXr>(xs.data(), n);
  const Real dx = xs[1] - xs[0];
  snap.field.grid.x_min = xs[0];
  snap.field.grid.dx = dx;
  snap.field.grid.n = n;
  snap.field.grid.x_max = xs[0] + dx * static_cast<Real>(n);
  snap.field.values.resize(n);
  for (Index i = 0; i < n; ++i) snap.field.values[i] = Complex(res[i], ims[i]);
  return snap;
}

void write_diagnostics_csv(const std::string& path, const TrajectoryRecord& record) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot open '" + path + "' for writing");
  out << "t,norm,centroid,width,l2_error_vs_analytic\n";
  for (std::size_t i = 0; i < record.times.size(); ++i) {
    const SnapshotDiagnostics& d = record.diagnostics[i];
    out << format_double(record.times[i]) << ',' << format_double(d.norm) << ','
        << format_double(d.centroid) << ',' << format_double(d.width) << ','
        << format_double(d.l2_error_vs_analytic) << '\n';
  }
}

}  // namespace ssdg
