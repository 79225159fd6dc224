#pragma once

// Plain-text configuration and manifests: INI files with sections, read and
// written through boost::property_tree. Schema (version 1):
//
//   [schema]   version = 1
//   [equation] lambda = <N_V numbers>, per-mode decay rates in 1/time
//              phi = <row> | <row> | ..., N_V rows of N_U numbers
//   [noise]    H = 0.75
//              families = fbm rosenblatt ..., one per noise component
//              cells_per_unit = 512, Rosenblatt cells per unit time
//              disc_tol = 0.01, Rosenblatt relative variance bias cap
//              fbm_method = circulant or cholesky
//   [x0]       kind = deterministic or x-infinity
//              x = <N_V numbers>, deterministic only, default 0
//              T_trunc = 40, x-infinity only, time units
//
// Comments must sit on their own line, starting with ';' or '#'.
//
// Every field is written back when an equation is stored, defaults included.

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/property_tree/ptree.hpp>

#include "volterra/spde.h"

namespace volterra::config {

using Tree = boost::property_tree::ptree;

inline constexpr int kSchemaVersion = 1;

/// Throws ConfigurationError on unreadable or malformed files.
Tree read_file(const std::string& path);
void write_file(const std::string& path, const Tree& tree);
std::string to_text(const Tree& tree);

std::vector<double> parse_list(const std::string& s);
/// Rows separated by '|', entries by whitespace or commas.
Eigen::MatrixXd parse_matrix(const std::string& s);
std::string format_list(const Eigen::VectorXd& v);
std::string format_matrix(const Eigen::MatrixXd& m);

EquationSpec equation_from(const Tree& tree);
void equation_into(Tree& tree, const EquationSpec& spec);

}  // namespace volterra::config
