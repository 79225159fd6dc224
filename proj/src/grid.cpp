#include "volterra/grid.h"

#include <cmath>
#include <string>

#include "volterra/error.h"

namespace volterra {

GridSpec::GridSpec(double t_min, double t_max, std::size_t n_points)
    : t_min_(t_min), t_max_(t_max), n_(n_points) {
  if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_min < t_max))
    throw PreconditionError("grid: need finite t_min < t_max");
  if (n_points < 2) throw PreconditionError("grid: need at least 2 points");
  dt_ = (t_max - t_min) / static_cast<double>(n_points - 1);
  if (t_min <= 0.0 && 0.0 <= t_max) {
    const double k = std::nearbyint(-t_min / dt_);
    if (std::abs(t_min + k * dt_) > 1e-9 * dt_)
      throw PreconditionError("grid: range spans 0 but no grid point lands on it");
    zero_ = static_cast<std::size_t>(k);
  }
}

double GridSpec::time(std::size_t i) const {
  if (zero_ && i == *zero_) return 0.0;
  if (i == n_ - 1) return t_max_;
  return t_min_ + static_cast<double>(i) * dt_;
}

std::vector<double> GridSpec::times() const {
  std::vector<double> t(n_);
  for (std::size_t i = 0; i < n_; ++i) t[i] = time(i);
  return t;
}

std::optional<std::size_t> GridSpec::locate(double t, double tol) const {
  const double k = std::nearbyint((t - t_min_) / dt_);
  if (k < 0.0 || k > static_cast<double>(n_ - 1)) return std::nullopt;
  const auto i = static_cast<std::size_t>(k);
  if (std::abs(time(i) - t) > tol) return std::nullopt;
  return i;
}

std::size_t GridSpec::snap(double t) const {
  if (auto i = locate(t, 0.5 * dt_)) return *i;
  throw AlignmentError("time " + std::to_string(t) + " is not on the grid [" +
                       std::to_string(t_min_) + ", " + std::to_string(t_max_) + "]");
}

}  // namespace volterra
