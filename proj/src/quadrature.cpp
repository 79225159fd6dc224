#include "volterra/quadrature.h"

#include <array>
#include <memory>

namespace volterra::quad {

namespace {

constexpr int kMaxDepth = 8;
thread_local int g_depth = 0;

}  // namespace

DepthGuard::DepthGuard() : depth_(g_depth++) {
  if (depth_ >= kMaxDepth) {
    --g_depth;
    throw NumericError("quadrature nesting deeper than supported");
  }
}

DepthGuard::~DepthGuard() { --g_depth; }

boost::math::quadrature::tanh_sinh<double>& tanh_sinh_at(int depth) {
  thread_local std::array<std::unique_ptr<boost::math::quadrature::tanh_sinh<double>>, kMaxDepth>
      pool;
  auto& slot = pool.at(static_cast<std::size_t>(depth));
  if (!slot) slot = std::make_unique<boost::math::quadrature::tanh_sinh<double>>(12);
  return *slot;
}

boost::math::quadrature::exp_sinh<double>& exp_sinh_at(int depth) {
  thread_local std::array<std::unique_ptr<boost::math::quadrature::exp_sinh<double>>, kMaxDepth>
      pool;
  auto& slot = pool.at(static_cast<std::size_t>(depth));
  if (!slot) slot = std::make_unique<boost::math::quadrature::exp_sinh<double>>(12);
  return *slot;
}

}  // namespace volterra::quad
