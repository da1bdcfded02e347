#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gruss/bounds.hpp"

namespace gruss {

/// A differentiable convex function on a real space together with its
/// gradient (taken with respect to the space's inner product). Both
/// callables must be pure and reentrant.
struct ConvexOracle {
  std::string name;
  std::function<double(const Vector&)> eval;
  std::function<Vector(const Vector&)> grad;
};

/// Built-in oracles, all relative to the inner product of `space`.
namespace oracles {
/// |z|^2, gradient 2z.
ConvexOracle squared_norm(const Space& space);
/// <Qz, z> for the diagonal operator Q = diag(coeffs), coeffs > 0.
ConvexOracle diagonal_quadratic(const Space& space, std::vector<double> coeffs);
/// log sum_k exp(z_k).
ConvexOracle log_sum_exp(const Space& space);
/// |z|^4, gradient 4|z|^2 z.
ConvexOracle norm_power4(const Space& space);
/// |z|^2 with its gradient deliberately scaled by 1.1. Fails gradient_check;
/// exists to exercise the rejection path.
ConvexOracle faulty_squared_norm(const Space& space);
}  // namespace oracles

/// Names accepted by make_oracle.
std::vector<std::string> oracle_names();

/// Look up a catalog oracle. The diagonal quadratic uses coefficients
/// 1, 2, ..., dim. Throws InvalidInput for unknown names or complex spaces.
ConvexOracle make_oracle(const std::string& name, const Space& space);

inline constexpr double kGradientCheckTolerance = 1e-6;
inline constexpr double kGradientCheckStep = 1e-5;

/// Maximum relative disagreement between fourth-order central differences of `eval` and
/// the directional derivative <grad, d>, over the samples and, per sample,
/// a few random unit directions plus the gradient direction itself.
double gradient_check(const Space& space, const ConvexOracle& oracle,
                      std::span<const Vector> samples, double step = kGradientCheckStep,
                      std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/// sum_i p_i F(z_i) - F(sum_i p_i z_i) with p_i = q_i / Q.
double jensen_gap(const Space& space, const ConvexOracle& oracle, std::span<const double> masses,
                  std::span<const Vector> zs);

/// sum_i p_i <grad F(z_i), z_i> - <sum_i p_i grad F(z_i), sum_i p_i z_i>.
double pairing_gap(const Space& space, const ConvexOracle& oracle, std::span<const double> masses,
                   std::span<const Vector> zs);

struct JensenOptions {
  /// Enclosure (m, M) of the gradients; fitted when absent.
  std::optional<Enclosure> gradient_enclosure;
  /// Enclosure (z, Z) of the points; fitted when absent and fit_points is set.
  std::optional<Enclosure> point_enclosure;
  bool fit_points = true;
};

struct JensenReport {
  double gap = 0.0;
  double pairing_gap = 0.0;
  /// gap <= links[0] <= links[1] (<= links[2] when a point enclosure exists).
  BoundChain chain;
  std::optional<Enclosure> gradient_enclosure;
  std::optional<Enclosure> point_enclosure;
  /// links[0] / links[2]: how much the mean-deviation bound improves on the
  /// quarter-diameter bound.
  std::optional<double> improvement_ratio;
};

/// Reverse Jensen bounds for `oracle` at the points `zs` with masses `q`.
/// Throws InvalidInput on complex spaces, HypothesisViolated when a supplied
/// enclosure does not contain its points.
JensenReport reverse_jensen(const Space& space, const ConvexOracle& oracle,
                            std::span<const double> masses, std::span<const Vector> zs,
                            const JensenOptions& options = {});

}  // namespace gruss
