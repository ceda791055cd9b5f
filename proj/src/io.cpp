#include "gtrans/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "gtrans/error.hpp"

namespace gtrans {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string signal_to_csv(const Eigen::VectorXcd& x) {
  std::ostringstream out;
  out << "index,re,im\n";
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out << i << ',' << format_double(x(i).real()) << ',' << format_double(x(i).imag()) << '\n';
  }
  return out.str();
}

Eigen::VectorXcd signal_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("signal CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "index,re,im") throw ValidationError("signal CSV header must be 'index,re,im'");
  std::vector<std::complex<double>> values;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    long index = -1;
    double re = 0.0;
    double im = 0.0;
    char tail = 0;
    if (std::sscanf(line.c_str(), "%ld,%lf,%lf%c", &index, &re, &im, &tail) != 3) {
      throw ValidationError("signal CSV row " + std::to_string(row) + " is malformed");
    }
    if (index != static_cast<long>(values.size())) {
      throw ValidationError("signal CSV row " + std::to_string(row) + ": indices must be 0,1,2,... in order");
    }
    values.emplace_back(re, im);
  }
  Eigen::VectorXcd x(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) x(static_cast<Eigen::Index>(i)) = values[i];
  return x;
}

std::string spectrum_to_csv(const SpectralBasis& basis) {
  const auto freq = frequencies(basis);
  std::ostringstream out;
  out << "l,eigenvalue,nu,theta\n";
  for (Eigen::Index l = 0; l < basis.eigenvalues.size(); ++l) {
    out << l << ',' << format_double(basis.eigenvalues(l)) << ',' << format_double(freq.nu(l)) << ','
        << format_double(freq.theta(l)) << '\n';
  }
  return out.str();
}

std::string matrix_to_csv(const Eigen::MatrixXcd& m) {
  std::ostringstream out;
  out << "i,j,re,im\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out << i << ',' << j << ',' << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag()) << '\n';
    }
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw ValidationError("write to '" + path.string() + "' failed");
}

}  // namespace gtrans
