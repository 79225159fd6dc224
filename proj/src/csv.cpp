#include "volterra/csv.h"

#include <charconv>

#include "volterra/error.h"

namespace volterra::csv {

std::string format(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) os << ',';
    os << quote(fields[i]);
  }
  os << '\n';
}

void write_paths(std::ostream& os, const Ensemble& e) {
  std::vector<std::string> row{"t"};
  for (std::size_t p = 0; p < e.n_paths(); ++p) row.push_back("path_" + std::to_string(p));
  write_row(os, row);
  for (std::size_t i = 0; i < e.grid.size(); ++i) {
    row.assign(1, format(e.grid.time(i)));
    for (Eigen::Index p = 0; p < e.values.cols(); ++p)
      row.push_back(format(e.values(static_cast<Eigen::Index>(i), p)));
    write_row(os, row);
  }
}

void write_matrix(std::ostream& os, const Eigen::MatrixXd& m, const std::vector<std::string>& header) {
  if (static_cast<Eigen::Index>(header.size()) != m.cols())
    throw PreconditionError("csv: header must name every column");
  write_row(os, header);
  std::vector<std::string> row;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    row.clear();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(format(m(i, j)));
    write_row(os, row);
  }
}

}  // namespace volterra::csv
