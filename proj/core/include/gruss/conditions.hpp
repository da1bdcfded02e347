#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gruss/space.hpp"

namespace gruss {

/// A pair of antipodal points (lo, hi) describing the closed ball with
/// center (lo + hi) / 2 and radius |hi - lo| / 2.
class Enclosure {
 public:
  /// Throws DegenerateInput when lo == hi.
  Enclosure(Vector lo, Vector hi);
  /// The collapsed enclosure {c}; only produced on explicit request.
  static Enclosure degenerate_at(Vector point);

  const Vector& lo() const noexcept { return lo_; }
  const Vector& hi() const noexcept { return hi_; }
  bool degenerate() const noexcept { return degenerate_; }

  Vector center() const;
  double diameter(const Space& space) const { return space.distance(hi_, lo_); }
  double radius(const Space& space) const { return 0.5 * diameter(space); }

 private:
  Enclosure(Vector lo, Vector hi, bool degenerate);

  Vector lo_;
  Vector hi_;
  bool degenerate_ = false;
};

enum class Condition { Box, Ball };

/// Per-point evaluation of both forms of the enclosure hypothesis.
///   box slack:  Re<hi - x_i, x_i - lo>
///   ball slack: radius - |x_i - center|
/// Verdicts use a dead zone of tol::kRelative * diameter^2 (box) and
/// tol::kRelative * diameter (ball) so boundary points pass.
struct ConditionReport {
  Condition condition = Condition::Ball;
  std::vector<double> box_slack;
  std::vector<double> ball_slack;
  std::vector<bool> box_holds;
  std::vector<bool> ball_holds;
  double diameter = 0.0;

  std::size_t size() const noexcept { return box_slack.size(); }
  /// Verdict of the requested condition at index i.
  bool holds_at(std::size_t i) const {
    return condition == Condition::Box ? box_holds[i] : ball_holds[i];
  }
  bool holds() const;
  std::vector<std::size_t> failing() const;
};

/// Raised when a bound is requested on data violating its hypothesis.
class HypothesisViolated : public Error {
 public:
  HypothesisViolated(const std::string& what, ConditionReport report)
      : Error(what), report_(std::move(report)) {}
  const ConditionReport& report() const noexcept { return report_; }

 private:
  ConditionReport report_;
};

ConditionReport check_box(const Space& space, const Enclosure& encl, std::span<const Vector> xs);
ConditionReport check_ball(const Space& space, const Enclosure& encl, std::span<const Vector> xs);

/// Scalar form |alpha_i - (a + A)/2| <= |A - a| / 2 in the complex plane.
/// For real a < A this is a <= alpha_i <= A.
ConditionReport check_scalar_disc(Scalar a, Scalar big_a, std::span<const Scalar> alphas);

/// Throws HypothesisViolated naming the first failing index unless the
/// ball condition holds for every point.
void require_ball(const Space& space, const Enclosure& encl, std::span<const Vector> xs,
                  const char* what);

enum class FitMode { BoundingSphere, AntipodalPair };

/// Largest factor by which a fitted enclosure may be inflated about its
/// center to cover every point.
inline constexpr double kMaxInflation = 1.5;

/// Derive an enclosure containing every point of `xs`.
///
/// BoundingSphere: approximate minimal enclosing ball (Ritter start followed
/// by at most 200 core-set sweeps), returned as the antipodal pair along the
/// principal axis of the data.
/// AntipodalPair: the pair (x_i, x_j), i < j, realizing the diameter.
///
/// In both modes the result is inflated by the smallest factor that makes
/// check_ball pass. Throws DegenerateInput if all points coincide and
/// FittingFailure if the factor would exceed kMaxInflation.
Enclosure fit_enclosure(const Space& space, std::span<const Vector> xs,
                        FitMode mode = FitMode::BoundingSphere);

}  // namespace gruss
