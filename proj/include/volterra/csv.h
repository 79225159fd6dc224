#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "volterra/process.h"

namespace volterra::csv {

/// Shortest decimal string that reads back to the same double.
std::string format(double x);

/// RFC 4180 field: quoted when it contains a comma, quote or line break.
std::string quote(const std::string& field);

void write_row(std::ostream& os, const std::vector<std::string>& fields);

/// Header `t,path_0,...`, then one row per grid point.
void write_paths(std::ostream& os, const Ensemble& e);

/// Row-major matrix with a header row of column names.
void write_matrix(std::ostream& os, const Eigen::MatrixXd& m, const std::vector<std::string>& header);

}  // namespace volterra::csv
