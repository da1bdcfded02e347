#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gruss/conditions.hpp"
#include "gruss/functionals.hpp"

namespace gruss {

/// One upper bound of a chain. `tag` names the displayed inequality the
/// value comes from ("2.3", "1.4", "R2.7", ...).
struct BoundLink {
  std::string label;
  double value = 0.0;
  std::string tag;
};

/// A functional value with the upper bounds that dominate it.
///
/// For ordinary chains the links are increasing:
///   functional <= links[0] <= links[1] <= ...
/// For the forward-difference families the links are parallel
/// alternatives (`parallel == true`); each must dominate the functional
/// on its own and `tightest` marks the smallest.
struct BoundChain {
  std::string name;
  double functional = 0.0;
  std::vector<BoundLink> links;
  std::vector<ConditionReport> hypotheses;
  bool parallel = false;
  std::optional<std::size_t> tightest;
  /// False when the chain was evaluated with HypothesisPolicy::Unchecked.
  bool hypotheses_verified = true;
  /// Magnitude used for the additive ordering tolerance.
  double scale = 1.0;

  double tolerance() const { return tol::kRelative * scale; }
  /// Index of the first link breaking the chain order, if any.
  std::optional<std::size_t> first_violation() const;
  bool ordered() const { return !first_violation().has_value(); }
};

enum class HypothesisPolicy { Enforce, Unchecked };

/// A scalar disc (a, A): the closed disc with diameter [a, A].
struct ScalarDisc {
  Scalar lo;
  Scalar hi;
};

BoundChain chain_thm23(const Space& space, const Enclosure& encl_x, const ProbabilityVector& p,
                       std::span<const Vector> xs, std::span<const Vector> ys,
                       HypothesisPolicy policy = HypothesisPolicy::Enforce);

BoundChain chain_rem24(const Space& space, const Enclosure& encl_x, const Enclosure& encl_y,
                       const ProbabilityVector& p, std::span<const Vector> xs,
                       std::span<const Vector> ys,
                       HypothesisPolicy policy = HypothesisPolicy::Enforce);

BoundChain chain_selfadjoint(const Space& space, const Enclosure& encl, const ProbabilityVector& p,
                             std::span<const Vector> xs,
                             HypothesisPolicy policy = HypothesisPolicy::Enforce);

BoundChain chain_thm25(const Space& space, const Enclosure& encl_x,
                       const std::optional<ScalarDisc>& disc, const ProbabilityVector& p,
                       std::span<const Scalar> alphas, std::span<const Vector> xs,
                       HypothesisPolicy policy = HypothesisPolicy::Enforce);

BoundChain chain_complex(const ScalarDisc& disc, const ProbabilityVector& p,
                         std::span<const Scalar> alphas,
                         HypothesisPolicy policy = HypothesisPolicy::Enforce);

/// Exponent of the Hoelder pair (p, q), 1/p + 1/q = 1. Infinity selects the
/// (max-norm, 1-norm) endpoint.
struct HolderExponent {
  double p = 2.0;

  static HolderExponent infinity() { return {std::numeric_limits<double>::infinity()}; }
  bool is_infinite() const { return p == std::numeric_limits<double>::infinity(); }
  double conjugate() const;
};

BoundChain chain_forward_difference(const Space& space, const ProbabilityVector& p,
                                    std::span<const Vector> xs, std::span<const Vector> ys,
                                    HolderExponent holder = {});

BoundChain chain_forward_difference_self(const Space& space, const ProbabilityVector& p,
                                         std::span<const Vector> xs, HolderExponent holder = {});

// Weight coefficients of the forward-difference bounds, indices 1..n.

/// sum_i i^2 p_i - (sum_i i p_i)^2.
double index_variance(const ProbabilityVector& p);
/// sum_{j<i} p_i p_j (i - j).
double index_spread(const ProbabilityVector& p);
/// (1/2) sum_i p_i (1 - p_i).
double half_gini(const ProbabilityVector& p);

/// True when every weight equals 1/n up to rounding.
bool is_uniform(const ProbabilityVector& p);

}  // namespace gruss
