#include "gruss/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace gruss {
namespace {

constexpr int kMaxSweeps = 200;
constexpr int kPowerIterations = 100;

ConditionReport evaluate(const Space& space, const Enclosure& encl, std::span<const Vector> xs,
                         Condition condition) {
  space.require(encl.lo());
  space.require(encl.hi());
  space.require(xs);

  ConditionReport report;
  report.condition = condition;
  report.diameter = encl.diameter(space);
  const double radius = 0.5 * report.diameter;
  const double box_tol = tol::kRelative * report.diameter * report.diameter;
  const double ball_tol = tol::kRelative * report.diameter;
  const Vector center = encl.center();

  report.box_slack.reserve(xs.size());
  report.ball_slack.reserve(xs.size());
  for (const Vector& x : xs) {
    const double box = space.inner(encl.hi() - x, x - encl.lo()).real();
    const double ball = radius - space.distance(x, center);
    report.box_slack.push_back(box);
    report.ball_slack.push_back(ball);
    report.box_holds.push_back(box >= -box_tol);
    report.ball_holds.push_back(ball >= -ball_tol);
  }
  return report;
}

std::size_t farthest_from(const Space& space, const Vector& from, std::span<const Vector> xs) {
  std::size_t best = 0;
  double best_dist = -1.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = space.distance(xs[i], from);
    if (d > best_dist) {
      best_dist = d;
      best = i;
    }
  }
  return best;
}

double max_distance(const Space& space, const Vector& from, std::span<const Vector> xs) {
  double r = 0.0;
  for (const Vector& x : xs) r = std::max(r, space.distance(x, from));
  return r;
}

struct Ball {
  Vector center;
  double radius;
};

Ball ritter(const Space& space, std::span<const Vector> xs) {
  const Vector& a = xs[farthest_from(space, xs[0], xs)];
  const Vector& b = xs[farthest_from(space, a, xs)];
  Ball ball{0.5 * (a + b), 0.5 * space.distance(a, b)};
  for (const Vector& x : xs) {
    const double d = space.distance(x, ball.center);
    if (d > ball.radius) {
      const double grown = 0.5 * (ball.radius + d);
      ball.center += ((grown - ball.radius) / d) * (x - ball.center);
      ball.radius = grown;
    }
  }
  ball.radius = max_distance(space, ball.center, xs);
  return ball;
}

// Badoiu-Clarkson core-set iteration: step toward the farthest point with a
// shrinking step, keeping the best ball seen.
Ball shrink(const Space& space, std::span<const Vector> xs, Ball best) {
  Vector c = best.center;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const Vector& far = xs[farthest_from(space, c, xs)];
    c += (1.0 / static_cast<double>(sweep + 2)) * (far - c);
    const double r = max_distance(space, c, xs);
    if (r < best.radius) best = Ball{c, r};
  }
  return best;
}

// Unit principal axis of the scatter operator v -> sum_i d_i <v, d_i>.
Vector principal_axis(const Space& space, std::span<const Vector> xs, const Vector& center) {
  std::vector<Vector> d;
  d.reserve(xs.size());
  for (const Vector& x : xs) d.push_back(x - center);

  Vector v = d[farthest_from(space, center, xs)];
  if (space.norm(v) == 0.0) {
    v = Vector::zeros(space.dim());
    v[0] = 1.0;
  }
  v *= 1.0 / space.norm(v);
  for (int it = 0; it < kPowerIterations; ++it) {
    Vector next = Vector::zeros(space.dim());
    for (const Vector& di : d) next += space.inner(v, di) * di;
    const double len = space.norm(next);
    if (len == 0.0) break;
    next *= 1.0 / len;
    v = std::move(next);
  }
  return v;
}

Enclosure inflate_to_cover(const Space& space, const Enclosure& encl, std::span<const Vector> xs) {
  const ConditionReport report = check_ball(space, encl, xs);
  if (report.holds()) return encl;

  const Vector center = encl.center();
  const double radius = encl.radius(space);
  const double factor = max_distance(space, center, xs) / radius *
                        (1.0 + 4.0 * std::numeric_limits<double>::epsilon());
  if (factor > kMaxInflation) {
    throw FittingFailure("enclosure needs inflation by " + std::to_string(factor) +
                         ", limit is " + std::to_string(kMaxInflation));
  }
  const Vector half = encl.hi() - center;
  return Enclosure(center - factor * half, center + factor * half);
}

}  // namespace

Enclosure::Enclosure(Vector lo, Vector hi) : Enclosure(std::move(lo), std::move(hi), false) {
  if (lo_ == hi_) throw DegenerateInput("enclosure endpoints coincide");
}

Enclosure::Enclosure(Vector lo, Vector hi, bool degenerate)
    : lo_(std::move(lo)), hi_(std::move(hi)), degenerate_(degenerate) {
  if (lo_.size() != hi_.size()) throw ContractViolation("enclosure endpoints differ in dimension");
}

Enclosure Enclosure::degenerate_at(Vector point) {
  Vector copy = point;
  return Enclosure(std::move(copy), std::move(point), true);
}

Vector Enclosure::center() const { return 0.5 * (lo_ + hi_); }

bool ConditionReport::holds() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (!holds_at(i)) return false;
  }
  return true;
}

std::vector<std::size_t> ConditionReport::failing() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!holds_at(i)) out.push_back(i);
  }
  return out;
}

ConditionReport check_box(const Space& space, const Enclosure& encl, std::span<const Vector> xs) {
  return evaluate(space, encl, xs, Condition::Box);
}

ConditionReport check_ball(const Space& space, const Enclosure& encl, std::span<const Vector> xs) {
  return evaluate(space, encl, xs, Condition::Ball);
}

ConditionReport check_scalar_disc(Scalar a, Scalar big_a, std::span<const Scalar> alphas) {
  if (a == big_a) throw DegenerateInput("scalar enclosure endpoints coincide");
  const Space plane = Space::complex(1);
  std::vector<Vector> points;
  points.reserve(alphas.size());
  for (const Scalar& alpha : alphas) points.push_back(Vector{alpha});
  return check_ball(plane, Enclosure(Vector{a}, Vector{big_a}), points);
}

void require_ball(const Space& space, const Enclosure& encl, std::span<const Vector> xs,
                  const char* what) {
  if (encl.degenerate()) throw DegenerateInput(std::string(what) + ": enclosure is degenerate");
  ConditionReport report = check_ball(space, encl, xs);
  if (!report.holds()) {
    const std::size_t first = report.failing().front();
    std::string message = std::string(what) + ": point " + std::to_string(first) +
                          " lies outside the enclosure ball (slack " +
                          std::to_string(report.ball_slack[first]) + ")";
    throw HypothesisViolated(message, std::move(report));
  }
}

Enclosure fit_enclosure(const Space& space, std::span<const Vector> xs, FitMode mode) {
  if (xs.empty()) throw DegenerateInput("cannot fit an enclosure to an empty sequence");
  space.require(xs);
  if (std::all_of(xs.begin(), xs.end(), [&](const Vector& x) { return x == xs[0]; })) {
    throw DegenerateInput("all points coincide; enclosure would be degenerate");
  }

  if (mode == FitMode::AntipodalPair) {
    std::size_t bi = 0, bj = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        const double d = space.distance(xs[i], xs[j]);
        if (d > best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    return inflate_to_cover(space, Enclosure(xs[bi], xs[bj]), xs);
  }

  const Ball ball = shrink(space, xs, ritter(space, xs));
  const Vector axis = principal_axis(space, xs, ball.center);
  return inflate_to_cover(
      space, Enclosure(ball.center - ball.radius * axis, ball.center + ball.radius * axis), xs);
}

}  // namespace gruss
