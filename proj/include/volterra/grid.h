#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace volterra {

/// Uniform time grid t_i = t_min + i dt. When the range contains 0 a grid
/// point must land on it (within 1e-9 dt); that point is then exactly 0.
class GridSpec {
 public:
  GridSpec(double t_min, double t_max, std::size_t n_points);

  double t_min() const { return t_min_; }
  double t_max() const { return t_max_; }
  std::size_t size() const { return n_; }
  std::size_t steps() const { return n_ - 1; }
  double dt() const { return dt_; }
  double time(std::size_t i) const;
  std::vector<double> times() const;

  /// Index of the grid point for t = 0, if the grid spans 0.
  std::optional<std::size_t> zero_index() const { return zero_; }
  /// Index of the grid point nearest t if within `tol`; nullopt otherwise.
  std::optional<std::size_t> locate(double t, double tol) const;
  /// locate() with tolerance dt/2; throws AlignmentError when t is off-grid.
  std::size_t snap(double t) const;

  bool operator==(const GridSpec& o) const {
    return t_min_ == o.t_min_ && t_max_ == o.t_max_ && n_ == o.n_;
  }

 private:
  double t_min_;
  double t_max_;
  std::size_t n_;
  double dt_;
  std::optional<std::size_t> zero_;
};

}  // namespace volterra
