#pragma once

#include <ostream>
#include <string>

#include "hhbar/matrix.hpp"
#include "hhbar/scattering.hpp"
#include "hhbar/spectrum.hpp"

#include "json.hpp"

namespace hhbar::io {

// Full-precision decimal form (17 significant digits), so downstream
// comparisons are not rounded by the I/O layer.
std::string format_full(double v);

// Dense binary layout: two little-endian uint64 (rows, cols) followed by
// row-major 8-byte IEEE doubles.
void write_matrix_binary(const std::string& path, const Matrix& m);
Matrix read_matrix_binary(const std::string& path);

void write_matrix_csv(std::ostream& os, const Matrix& m);

nlohmann::json spectrum_to_json(const spectrum::SpectrumResult& result);
nlohmann::json tangent_to_json(const scattering::TangentEstimate& estimate);

}  // namespace hhbar::io
