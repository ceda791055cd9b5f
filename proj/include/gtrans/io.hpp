#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "gtrans/spectral.hpp"

namespace gtrans {

/// `%.17g`: 17 significant digits, round-trips every double.
std::string format_double(double v);

/// Signal CSV: header `index,re,im`, rows in index order.
std::string signal_to_csv(const Eigen::VectorXcd& x);
Eigen::VectorXcd signal_from_csv(std::string_view text);

/// Spectrum CSV: header `l,eigenvalue,nu,theta`.
std::string spectrum_to_csv(const SpectralBasis& basis);

/// Operator CSV: header `i,j,re,im`, row-major.
std::string matrix_to_csv(const Eigen::MatrixXcd& m);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace gtrans
