#include "volterra/config.h"

#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>

#include "volterra/csv.h"
#include "volterra/error.h"

namespace volterra::config {

namespace {

template <class T>
T get(const Tree& t, const std::string& key) {
  try {
    return t.get<T>(key);
  } catch (const boost::property_tree::ptree_error& e) {
    throw ConfigurationError("config: " + key + ": " + e.what());
  }
}

template <class T>
T get(const Tree& t, const std::string& key, T fallback) {
  try {
    return t.get<T>(key, fallback);
  } catch (const boost::property_tree::ptree_error& e) {
    throw ConfigurationError("config: " + key + ": " + e.what());
  }
}

}  // namespace

Tree read_file(const std::string& path) {
  Tree t;
  try {
    boost::property_tree::read_ini(path, t);
  } catch (const boost::property_tree::ptree_error& e) {
    throw ConfigurationError(std::string("config: ") + e.what());
  }
  const int version = get<int>(t, "schema.version", kSchemaVersion);
  if (version != kSchemaVersion)
    throw ConfigurationError("config: unsupported schema version " + std::to_string(version));
  return t;
}

void write_file(const std::string& path, const Tree& tree) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigurationError("cannot write " + path);
  os << to_text(tree);
}

std::string to_text(const Tree& tree) {
  std::ostringstream os;
  boost::property_tree::write_ini(os, tree);
  return os.str();
}

std::vector<double> parse_list(const std::string& s) {
  std::string clean = s;
  for (char& c : clean)
    if (c == ',') c = ' ';
  std::istringstream is(clean);
  std::vector<double> out;
  std::string tok;
  while (is >> tok) {
    std::size_t pos = 0;
    double x = 0.0;
    try {
      x = std::stod(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size()) throw ConfigurationError("config: not a number: '" + tok + "'");
    out.push_back(x);
  }
  return out;
}

Eigen::MatrixXd parse_matrix(const std::string& s) {
  std::vector<std::vector<double>> rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, '|')) {
    auto r = parse_list(row);
    if (!r.empty()) rows.push_back(std::move(r));
  }
  if (rows.empty()) throw ConfigurationError("config: empty matrix");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw ConfigurationError("config: ragged matrix");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return m;
}

std::string format_list(const Eigen::VectorXd& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? " " : "") + csv::format(v[i]);
  return out;
}

std::string format_matrix(const Eigen::MatrixXd& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out += " | ";
    out += format_list(m.row(i).transpose());
  }
  return out;
}

EquationSpec equation_from(const Tree& t) {
  EquationSpec s;
  const auto lam = parse_list(get<std::string>(t, "equation.lambda"));
  s.lambda = Eigen::Map<const Eigen::VectorXd>(lam.data(), static_cast<Eigen::Index>(lam.size()));
  s.Phi = parse_matrix(get<std::string>(t, "equation.phi"));

  s.noise.H = get<double>(t, "noise.H");
  s.noise.families.clear();
  std::istringstream fam(get<std::string>(t, "noise.families", "fbm"));
  std::string f;
  try {
    while (fam >> f) s.noise.families.push_back(noise_family_from_string(f));
  } catch (const PreconditionError& e) {
    throw ConfigurationError(std::string("config: ") + e.what());
  }
  s.noise.cells_per_unit = get<int>(t, "noise.cells_per_unit", 512);
  s.noise.disc_tol = get<double>(t, "noise.disc_tol", 0.01);
  const auto method = get<std::string>(t, "noise.fbm_method", "circulant");
  if (method == "circulant")
    s.noise.fbm_method = FbmMethod::circulant;
  else if (method == "cholesky")
    s.noise.fbm_method = FbmMethod::cholesky;
  else
    throw ConfigurationError("config: noise.fbm_method must be circulant or cholesky");

  const auto kind = get<std::string>(t, "x0.kind", "deterministic");
  if (kind == "deterministic") {
    s.x0.kind = InitialKind::deterministic;
    if (auto x = t.get_optional<std::string>("x0.x")) {
      const auto v = parse_list(*x);
      s.x0.x = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
    }
  } else if (kind == "x-infinity") {
    s.x0.kind = InitialKind::x_infinity;
  } else {
    throw ConfigurationError("config: x0.kind must be deterministic or x-infinity");
  }
  s.x0.T_trunc = get<double>(t, "x0.T_trunc", 40.0);
  try {
    s.validate();
  } catch (const PreconditionError& e) {
    throw ConfigurationError(std::string("config: ") + e.what());
  }
  return s;
}

void equation_into(Tree& t, const EquationSpec& s) {
  t.put("schema.version", kSchemaVersion);
  t.put("equation.lambda", format_list(s.lambda));
  t.put("equation.phi", format_matrix(s.Phi));
  t.put("noise.H", csv::format(s.noise.H));
  std::string fam;
  for (auto f : s.noise.families) fam += (fam.empty() ? "" : " ") + to_string(f);
  t.put("noise.families", fam);
  t.put("noise.cells_per_unit", s.noise.cells_per_unit);
  t.put("noise.disc_tol", csv::format(s.noise.disc_tol));
  t.put("noise.fbm_method", s.noise.fbm_method == FbmMethod::circulant ? "circulant" : "cholesky");
  t.put("x0.kind", to_string(s.x0.kind));
  if (s.x0.kind == InitialKind::deterministic) {
    Eigen::VectorXd x = s.x0.x.size() ? s.x0.x : Eigen::VectorXd::Zero(s.lambda.size());
    t.put("x0.x", format_list(x));
  }
  t.put("x0.T_trunc", csv::format(s.x0.T_trunc));
}

}  // namespace volterra::config
