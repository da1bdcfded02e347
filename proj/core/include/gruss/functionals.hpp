#pragma once

#include <span>
#include <vector>

#include "gruss/space.hpp"

namespace gruss {

/// Weights with the sequences they act on. Which sequences are required
/// depends on the functional; all present ones must have length p.size().
struct WeightedSequence {
  ProbabilityVector p;
  std::vector<Vector> xs;
  std::vector<Vector> ys;
  std::vector<Scalar> alphas;
};

/// sum_i p_i <x_i, y_i> - <sum_i p_i x_i, sum_i p_i y_i>.
Scalar chebyshev(const Space& space, const ProbabilityVector& p, std::span<const Vector> xs,
                 std::span<const Vector> ys);

/// sum_i p_i a_i x_i - (sum_i p_i a_i)(sum_i p_i x_i).
Vector vector_gruss(const Space& space, const ProbabilityVector& p, std::span<const Scalar> alphas,
                    std::span<const Vector> xs);

/// sum_i p_i |x_i|^2 - |sum_i p_i x_i|^2. Rounding noise below zero is
/// clamped; a clearly negative value raises InvalidInput.
double variance(const Space& space, const ProbabilityVector& p, std::span<const Vector> xs);

/// sum_i p_i |x_i - mean|.
double mad(const Space& space, const ProbabilityVector& p, std::span<const Vector> xs);

// Scalar counterparts used by the alpha-weighted chains.
double scalar_variance(const ProbabilityVector& p, std::span<const Scalar> alphas);
double scalar_mad(const ProbabilityVector& p, std::span<const Scalar> alphas);

/// max(1, sum_i p_i |x_i| |y_i|): the magnitude that absolute tolerances
/// are multiplied by.
double tolerance_scale(const Space& space, const ProbabilityVector& p, std::span<const Vector> xs,
                       std::span<const Vector> ys);
double tolerance_scale(const Space& space, const ProbabilityVector& p,
                       std::span<const Scalar> alphas, std::span<const Vector> xs);

/// |chebyshev - sum_i p_i <x_i - anchor, y_i - mean_y>|. The identity holds
/// for any anchor; the enclosure center is the customary choice.
double identity_residual_24(const Space& space, const Vector& anchor, const ProbabilityVector& p,
                            std::span<const Vector> xs, std::span<const Vector> ys);

/// |vector_gruss - sum_i p_i (a_i - mean_a)(x_i - anchor)|.
double identity_residual_210(const Space& space, const Vector& anchor,
                             const ProbabilityVector& p, std::span<const Scalar> alphas,
                             std::span<const Vector> xs);

}  // namespace gruss
