#include "gruss/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace gruss {
namespace {

void apply_policy(BoundChain& chain, const Space& space, const Enclosure& encl,
                  std::span<const Vector> xs, HypothesisPolicy policy, const char* what) {
  if (policy == HypothesisPolicy::Enforce) require_ball(space, encl, xs, what);
  ConditionReport report = check_ball(space, encl, xs);
  chain.hypotheses_verified = chain.hypotheses_verified && !encl.degenerate() && report.holds();
  chain.hypotheses.push_back(std::move(report));
}

void apply_disc_policy(BoundChain& chain, const ScalarDisc& disc, std::span<const Scalar> alphas,
                       HypothesisPolicy policy) {
  ConditionReport report = check_scalar_disc(disc.lo, disc.hi, alphas);
  if (policy == HypothesisPolicy::Enforce && !report.holds()) {
    const std::size_t first = report.failing().front();
    std::string message = "alpha " + std::to_string(first) + " lies outside the disc (slack " +
                          std::to_string(report.ball_slack[first]) + ")";
    throw HypothesisViolated(message, std::move(report));
  }
  chain.hypotheses_verified = chain.hypotheses_verified && report.holds();
  chain.hypotheses.push_back(std::move(report));
}

void finish_scale(BoundChain& chain, double base) {
  double top = 0.0;
  for (const BoundLink& link : chain.links) top = std::max(top, link.value);
  chain.scale = std::max({1.0, base, top});
}

double p_norm(std::span<const double> values, double exponent) {
  if (exponent == std::numeric_limits<double>::infinity()) {
    double m = 0.0;
    for (double v : values) m = std::max(m, v);
    return m;
  }
  double acc = 0.0;
  for (double v : values) acc += std::pow(v, exponent);
  return std::pow(acc, 1.0 / exponent);
}

std::vector<double> difference_norms(const Space& space, std::span<const Vector> xs) {
  std::vector<double> out;
  for (const Vector& d : forward_differences(xs)) out.push_back(space.norm(d));
  return out;
}

void mark_tightest(BoundChain& chain) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < chain.links.size(); ++k) {
    if (chain.links[k].value < chain.links[best].value) best = k;
  }
  chain.tightest = best;
}

BoundChain forward_difference_chain(const Space& space, const ProbabilityVector& p,
                                    std::span<const Vector> xs, std::span<const Vector> ys,
                                    HolderExponent holder, bool self) {
  if (xs.size() < 2) throw DegenerateInput("forward-difference bounds need n >= 2");
  const double q = holder.conjugate();
  const bool uniform = is_uniform(p);

  BoundChain chain;
  chain.parallel = true;
  if (self) {
    chain.name = uniform ? "1.9" : "1.8";
    chain.functional = variance(space, p, xs);
  } else {
    chain.name = uniform ? "1.7" : "1.6";
    chain.functional = std::abs(chebyshev(space, p, xs, ys));
  }
  const std::vector<double> dx = difference_norms(space, xs);
  const std::vector<double> dy = self ? dx : difference_norms(space, ys);
  const auto inf = std::numeric_limits<double>::infinity();

  chain.links.push_back({"index_variance*max|dx|*max|dy|",
                         index_variance(p) * p_norm(dx, inf) * p_norm(dy, inf), chain.name});
  chain.links.push_back({"index_spread*|dx|_p*|dy|_q",
                         index_spread(p) * p_norm(dx, holder.p) * p_norm(dy, q), chain.name});
  chain.links.push_back({"half_gini*sum|dx|*sum|dy|",
                         half_gini(p) * p_norm(dx, 1.0) * p_norm(dy, 1.0), chain.name});
  mark_tightest(chain);
  chain.scale = std::max(1.0, tolerance_scale(space, p, xs, self ? xs : ys));
  return chain;
}

}  // namespace

std::optional<std::size_t> BoundChain::first_violation() const {
  const double slack = tolerance();
  double previous = functional;
  for (std::size_t k = 0; k < links.size(); ++k) {
    if (links[k].value + slack < previous) return k;
    if (!parallel) previous = links[k].value;
  }
  return std::nullopt;
}

double HolderExponent::conjugate() const {
  if (!(p > 1.0)) throw InvalidInput("Hoelder exponent must exceed 1");
  if (is_infinite()) return 1.0;
  return p / (p - 1.0);
}

BoundChain chain_thm23(const Space& space, const Enclosure& encl_x, const ProbabilityVector& p,
                       std::span<const Vector> xs, std::span<const Vector> ys,
                       HypothesisPolicy policy) {
  BoundChain chain;
  chain.name = "2.3";
  apply_policy(chain, space, encl_x, xs, policy, "x sequence");
  const double half_diam = 0.5 * encl_x.diameter(space);
  chain.functional = std::abs(chebyshev(space, p, xs, ys));
  chain.links.push_back({"half_diam_x*mad(y)", half_diam * mad(space, p, ys), "2.3"});
  chain.links.push_back({"half_diam_x*stddev(y)", half_diam * std::sqrt(variance(space, p, ys)), "2.3"});
  finish_scale(chain, tolerance_scale(space, p, xs, ys));
  return chain;
}

BoundChain chain_rem24(const Space& space, const Enclosure& encl_x, const Enclosure& encl_y,
                       const ProbabilityVector& p, std::span<const Vector> xs,
                       std::span<const Vector> ys, HypothesisPolicy policy) {
  BoundChain chain = chain_thm23(space, encl_x, p, xs, ys, policy);
  chain.name = "2.7";
  for (BoundLink& link : chain.links) link.tag = "2.7";
  apply_policy(chain, space, encl_y, ys, policy, "y sequence");
  chain.links.push_back(
      {"quarter_diam_x*diam_y", 0.25 * encl_x.diameter(space) * encl_y.diameter(space), "1.4"});
  finish_scale(chain, chain.scale);
  return chain;
}

BoundChain chain_selfadjoint(const Space& space, const Enclosure& encl, const ProbabilityVector& p,
                             std::span<const Vector> xs, HypothesisPolicy policy) {
  BoundChain chain;
  chain.name = "2.8";
  apply_policy(chain, space, encl, xs, policy, "x sequence");
  const double diam = encl.diameter(space);
  chain.functional = variance(space, p, xs);
  chain.links.push_back({"half_diam*mad(x)", 0.5 * diam * mad(space, p, xs), "2.8"});
  chain.links.push_back({"quarter_diam^2", 0.25 * diam * diam, "1.5"});
  finish_scale(chain, tolerance_scale(space, p, xs, xs));
  return chain;
}

BoundChain chain_thm25(const Space& space, const Enclosure& encl_x,
                       const std::optional<ScalarDisc>& disc, const ProbabilityVector& p,
                       std::span<const Scalar> alphas, std::span<const Vector> xs,
                       HypothesisPolicy policy) {
  BoundChain chain;
  chain.name = disc ? "2.11" : "2.9";
  apply_policy(chain, space, encl_x, xs, policy, "x sequence");
  const double half_diam = 0.5 * encl_x.diameter(space);
  chain.functional = space.norm(vector_gruss(space, p, alphas, xs));
  chain.links.push_back({"half_diam_x*mad(alpha)", half_diam * scalar_mad(p, alphas), "2.9"});
  chain.links.push_back(
      {"half_diam_x*stddev(alpha)", half_diam * std::sqrt(scalar_variance(p, alphas)), "2.9"});
  if (disc) {
    apply_disc_policy(chain, *disc, alphas, policy);
    chain.links.push_back({"quarter_|A-a|*diam_x",
                           0.25 * std::abs(disc->hi - disc->lo) * encl_x.diameter(space), "1.2"});
  }
  finish_scale(chain, tolerance_scale(space, p, alphas, xs));
  return chain;
}

BoundChain chain_complex(const ScalarDisc& disc, const ProbabilityVector& p,
                         std::span<const Scalar> alphas, HypothesisPolicy policy) {
  require_same_length(p.size(), alphas.size(), "alpha sequence");
  BoundChain chain;
  chain.name = "R2.7";
  apply_disc_policy(chain, disc, alphas, policy);
  Scalar second{};
  double second_abs = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    second += p[i] * alphas[i] * alphas[i];
    second_abs += p[i] * std::norm(alphas[i]);
  }
  const Scalar mean = weighted_mean(p, alphas);
  const double half_width = 0.5 * std::abs(disc.hi - disc.lo);
  chain.functional = std::abs(second - mean * mean);
  chain.links.push_back({"half_|A-a|*mad(alpha)", half_width * scalar_mad(p, alphas), "R2.7"});
  chain.links.push_back(
      {"half_|A-a|*stddev(alpha)", half_width * std::sqrt(scalar_variance(p, alphas)), "R2.7"});
  finish_scale(chain, second_abs);
  return chain;
}

BoundChain chain_forward_difference(const Space& space, const ProbabilityVector& p,
                                    std::span<const Vector> xs, std::span<const Vector> ys,
                                    HolderExponent holder) {
  require_same_length(p.size(), xs.size(), "x sequence");
  require_same_length(p.size(), ys.size(), "y sequence");
  return forward_difference_chain(space, p, xs, ys, holder, false);
}

BoundChain chain_forward_difference_self(const Space& space, const ProbabilityVector& p,
                                         std::span<const Vector> xs, HolderExponent holder) {
  require_same_length(p.size(), xs.size(), "x sequence");
  return forward_difference_chain(space, p, xs, xs, holder, true);
}

double index_variance(const ProbabilityVector& p) {
  double first = 0.0, second = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double idx = static_cast<double>(i + 1);
    first += idx * p[i];
    second += idx * idx * p[i];
  }
  return second - first * first;
}

double index_spread(const ProbabilityVector& p) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) acc += p[i] * p[j] * static_cast<double>(i - j);
  }
  return acc;
}

double half_gini(const ProbabilityVector& p) {
  double acc = 0.0;
  for (double w : p) acc += w * (1.0 - w);
  return 0.5 * acc;
}

bool is_uniform(const ProbabilityVector& p) {
  const double target = 1.0 / static_cast<double>(p.size());
  return std::all_of(p.begin(), p.end(),
                     [&](double w) { return std::abs(w - target) <= 1e-12 * target; });
}

}  // namespace gruss
