#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsep/criteria.hpp"
#include "qsep/quantum.hpp"

namespace qsep {

// Shortest decimal string that round-trips to the same double;
// NaN prints as "nan".
std::string format_double(double x);

// On-disk state description:
//   { "dims": [d_a, d_b], "entries": [[re, im], ...] }
// with entries flattened row-major over the (d_a d_b) x (d_a d_b)
// matrix. Parsing checks shape only; density-matrix invariants are
// enforced when a DensityMatrix is constructed from it.
struct StateFile {
  int dim_a = 0;
  int dim_b = 0;
  Eigen::MatrixXcd matrix;
};

// `origin` names the source in error messages (file path or
// "<string>"). Syntax errors report origin:line:col.
StateFile parse_state_json(const std::string& text,
                           const std::string& origin = "<string>");

StateFile read_state_file(const std::string& path);

DensityMatrix to_density_matrix(const StateFile& sf);

std::string state_to_json(const DensityMatrix& rho);

void write_state_file(const std::string& path, const DensityMatrix& rho);

// Header "q,x_star,s_at_one_third", one row per point, LF line
// endings, exactly one trailing newline. NaN cells print as "nan".
void write_curve_csv(std::ostream& out, const std::vector<CurveRow>& rows);
void write_curve_csv(const std::string& path,
                     const std::vector<CurveRow>& rows);

}  // namespace qsep
