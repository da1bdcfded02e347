#include "gruss/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gruss {
namespace {

void require_pair(const Space& space, const ProbabilityVector& p, std::span<const Vector> xs,
                  std::span<const Vector> ys) {
  require_same_length(p.size(), xs.size(), "x sequence");
  require_same_length(p.size(), ys.size(), "y sequence");
  space.require(xs);
  space.require(ys);
}

double clamp_nonnegative(double value, double scale, const char* what) {
  if (value >= 0.0) return value;
  if (value >= -1e-12 * scale) return 0.0;
  throw InvalidInput(std::string(what) + " is negative (" + std::to_string(value) +
                     "); inputs are inconsistent");
}

}  // namespace

Scalar chebyshev(const Space& space, const ProbabilityVector& p, std::span<const Vector> xs,
                 std::span<const Vector> ys) {
  require_pair(space, p, xs, ys);
  Scalar acc{};
  for (std::size_t i = 0; i < xs.size(); ++i) acc += p[i] * space.inner(xs[i], ys[i]);
  return acc - space.inner(weighted_mean(space, p, xs), weighted_mean(space, p, ys));
}

Vector vector_gruss(const Space& space, const ProbabilityVector& p, std::span<const Scalar> alphas,
                    std::span<const Vector> xs) {
  require_same_length(p.size(), alphas.size(), "alpha sequence");
  require_same_length(p.size(), xs.size(), "x sequence");
  space.require(xs);
  Vector acc = Vector::zeros(space.dim());
  for (std::size_t i = 0; i < xs.size(); ++i) acc += (p[i] * alphas[i]) * xs[i];
  return acc - weighted_mean(p, alphas) * weighted_mean(space, p, xs);
}

double variance(const Space& space, const ProbabilityVector& p, std::span<const Vector> xs) {
  require_same_length(p.size(), xs.size(), "sequence");
  double second = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) second += p[i] * space.norm_squared(xs[i]);
  const double v = second - space.norm_squared(weighted_mean(space, p, xs));
  return clamp_nonnegative(v, std::max(1.0, second), "variance");
}

double mad(const Space& space, const ProbabilityVector& p, std::span<const Vector> xs) {
  const Vector mean = weighted_mean(space, p, xs);
  double acc = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) acc += p[i] * space.distance(xs[i], mean);
  return acc;
}

double scalar_variance(const ProbabilityVector& p, std::span<const Scalar> alphas) {
  require_same_length(p.size(), alphas.size(), "alpha sequence");
  double second = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) second += p[i] * std::norm(alphas[i]);
  const double v = second - std::norm(weighted_mean(p, alphas));
  return clamp_nonnegative(v, std::max(1.0, second), "scalar variance");
}

double scalar_mad(const ProbabilityVector& p, std::span<const Scalar> alphas) {
  const Scalar mean = weighted_mean(p, alphas);
  double acc = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) acc += p[i] * std::abs(alphas[i] - mean);
  return acc;
}

double tolerance_scale(const Space& space, const ProbabilityVector& p, std::span<const Vector> xs,
                       std::span<const Vector> ys) {
  require_pair(space, p, xs, ys);
  double acc = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) acc += p[i] * space.norm(xs[i]) * space.norm(ys[i]);
  return std::max(1.0, acc);
}

double tolerance_scale(const Space& space, const ProbabilityVector& p,
                       std::span<const Scalar> alphas, std::span<const Vector> xs) {
  require_same_length(p.size(), alphas.size(), "alpha sequence");
  require_same_length(p.size(), xs.size(), "x sequence");
  double acc = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) acc += p[i] * std::abs(alphas[i]) * space.norm(xs[i]);
  return std::max(1.0, acc);
}

double identity_residual_24(const Space& space, const Vector& anchor, const ProbabilityVector& p,
                            std::span<const Vector> xs, std::span<const Vector> ys) {
  const Scalar lhs = chebyshev(space, p, xs, ys);
  const Vector mean_y = weighted_mean(space, p, ys);
  Scalar rhs{};
  for (std::size_t i = 0; i < xs.size(); ++i) rhs += p[i] * space.inner(xs[i] - anchor, ys[i] - mean_y);
  return std::abs(lhs - rhs);
}

double identity_residual_210(const Space& space, const Vector& anchor,
                             const ProbabilityVector& p, std::span<const Scalar> alphas,
                             std::span<const Vector> xs) {
  const Vector lhs = vector_gruss(space, p, alphas, xs);
  const Scalar mean_alpha = weighted_mean(p, alphas);
  Vector rhs = Vector::zeros(space.dim());
  for (std::size_t i = 0; i < xs.size(); ++i) rhs += (p[i] * (alphas[i] - mean_alpha)) * (xs[i] - anchor);
  return space.norm(lhs - rhs);
}

}  // namespace gruss
