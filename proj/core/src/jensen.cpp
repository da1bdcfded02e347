#include "gruss/jensen.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace gruss {
namespace {

void require_real(const Space& space) {
  if (space.is_complex()) {
    throw InvalidInput("convex-function bounds are defined on real spaces only");
  }
}

constexpr int kRandomDirections = 3;

Vector random_unit(const Space& space, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    Vector d = Vector::zeros(space.dim());
    for (std::size_t k = 0; k < space.dim(); ++k) d[k] = gauss(rng);
    const double len = space.norm(d);
    if (len > 1e-12) return (1.0 / len) * d;
  }
}

std::vector<Vector> gradients(const ConvexOracle& oracle, std::span<const Vector> zs) {
  std::vector<Vector> out;
  out.reserve(zs.size());
  for (const Vector& z : zs) out.push_back(oracle.grad(z));
  return out;
}

bool all_equal(std::span<const Vector> vs) {
  return std::all_of(vs.begin(), vs.end(), [&](const Vector& v) { return v == vs.front(); });
}

// Fit when possible; a collapsed point set yields the degenerate enclosure,
// whose zero diameter makes every bound involving it zero.
Enclosure fit_or_collapse(const Space& space, std::span<const Vector> vs) {
  if (all_equal(vs)) return Enclosure::degenerate_at(vs.front());
  return fit_enclosure(space, vs, FitMode::BoundingSphere);
}

void check_supplied(const Space& space, const Enclosure& encl, std::span<const Vector> vs,
                    const char* what) {
  if (encl.degenerate()) return;
  require_ball(space, encl, vs, what);
}

}  // namespace

namespace oracles {

ConvexOracle squared_norm(const Space& space) {
  require_real(space);
  return {"squared_norm", [space](const Vector& z) { return space.norm_squared(z); },
          [](const Vector& z) { return 2.0 * z; }};
}

ConvexOracle diagonal_quadratic(const Space& space, std::vector<double> coeffs) {
  require_real(space);
  require_same_length(space.dim(), coeffs.size(), "quadratic coefficients");
  for (double c : coeffs) {
    if (!(c > 0.0) || !std::isfinite(c)) throw InvalidInput("quadratic coefficients must be > 0");
  }
  auto apply = [coeffs](const Vector& z) {
    Vector out = z;
    for (std::size_t k = 0; k < coeffs.size(); ++k) out[k] *= coeffs[k];
    return out;
  };
  return {"diagonal_quadratic",
          [space, apply](const Vector& z) { return space.inner(apply(z), z).real(); },
          [apply](const Vector& z) { return 2.0 * apply(z); }};
}

ConvexOracle log_sum_exp(const Space& space) {
  require_real(space);
  auto eval = [](const Vector& z) {
    double top = z[0].real();
    for (const Scalar& c : z.coords()) top = std::max(top, c.real());
    double acc = 0.0;
    for (const Scalar& c : z.coords()) acc += std::exp(c.real() - top);
    return top + std::log(acc);
  };
  auto grad = [space](const Vector& z) {
    double top = z[0].real();
    for (const Scalar& c : z.coords()) top = std::max(top, c.real());
    Vector g = Vector::zeros(z.size());
    double total = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      g[k] = std::exp(z[k].real() - top);
      total += g[k].real();
    }
    // Euclidean softmax expressed in the space's metric.
    for (std::size_t k = 0; k < z.size(); ++k) g[k] /= total * space.metric_weight(k);
    return g;
  };
  return {"log_sum_exp", eval, grad};
}

ConvexOracle norm_power4(const Space& space) {
  require_real(space);
  return {"norm_power4",
          [space](const Vector& z) {
            const double s = space.norm_squared(z);
            return s * s;
          },
          [space](const Vector& z) { return (4.0 * space.norm_squared(z)) * z; }};
}

ConvexOracle faulty_squared_norm(const Space& space) {
  ConvexOracle oracle = squared_norm(space);
  oracle.name = "faulty_squared_norm";
  oracle.grad = [](const Vector& z) { return 2.2 * z; };
  return oracle;
}

}  // namespace oracles

std::vector<std::string> oracle_names() {
  return {"squared_norm", "diagonal_quadratic", "log_sum_exp", "norm_power4",
          "faulty_squared_norm"};
}

ConvexOracle make_oracle(const std::string& name, const Space& space) {
  if (name == "squared_norm") return oracles::squared_norm(space);
  if (name == "diagonal_quadratic") {
    std::vector<double> coeffs(space.dim());
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = static_cast<double>(k + 1);
    return oracles::diagonal_quadratic(space, std::move(coeffs));
  }
  if (name == "log_sum_exp") return oracles::log_sum_exp(space);
  if (name == "norm_power4") return oracles::norm_power4(space);
  if (name == "faulty_squared_norm") return oracles::faulty_squared_norm(space);
  throw InvalidInput("unknown oracle '" + name + "'");
}

double gradient_check(const Space& space, const ConvexOracle& oracle,
                      std::span<const Vector> samples, double step, std::uint64_t seed) {
  require_real(space);
  if (!(step > 0.0 && step <= 1e-2)) throw InvalidInput("finite-difference step must lie in (0, 1e-2]");
  space.require(samples);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (const Vector& z : samples) {
    const double value = oracle.eval(z);
    const Vector g = oracle.grad(z);
    space.require(g);
    const double g_norm = space.norm(g);

    std::vector<Vector> directions;
    for (int k = 0; k < kRandomDirections; ++k) directions.push_back(random_unit(space, rng));
    if (g_norm > 0.0) directions.push_back((1.0 / g_norm) * g);

    for (const Vector& d : directions) {
      // Fourth-order central stencil: exact up to rounding for polynomials
      // of degree four, so curvature does not masquerade as a wrong gradient.
      const double near = oracle.eval(z + step * d) - oracle.eval(z - step * d);
      const double far = oracle.eval(z + (2.0 * step) * d) - oracle.eval(z - (2.0 * step) * d);
      const double fd = (8.0 * near - far) / (12.0 * step);
      const double analytic = space.inner(g, d).real();
      const double denom = std::max({std::abs(fd), 0.1 * g_norm, 1e-8 * (1.0 + std::abs(value))});
      worst = std::max(worst, std::abs(fd - analytic) / denom);
    }
  }
  return worst;
}

double jensen_gap(const Space& space, const ConvexOracle& oracle, std::span<const double> masses,
                  std::span<const Vector> zs) {
  require_real(space);
  const ProbabilityVector p = ProbabilityVector::from_masses(masses);
  const Vector mean = weighted_mean(space, p, zs);
  double acc = 0.0;
  for (std::size_t i = 0; i < zs.size(); ++i) acc += p[i] * oracle.eval(zs[i]);
  return acc - oracle.eval(mean);
}

double pairing_gap(const Space& space, const ConvexOracle& oracle, std::span<const double> masses,
                   std::span<const Vector> zs) {
  require_real(space);
  const ProbabilityVector p = ProbabilityVector::from_masses(masses);
  return chebyshev(space, p, gradients(oracle, zs), zs).real();
}

JensenReport reverse_jensen(const Space& space, const ConvexOracle& oracle,
                            std::span<const double> masses, std::span<const Vector> zs,
                            const JensenOptions& options) {
  require_real(space);
  const ProbabilityVector p = ProbabilityVector::from_masses(masses);
  require_same_length(p.size(), zs.size(), "z sequence");
  space.require(zs);
  const std::vector<Vector> grads = gradients(oracle, zs);
  space.require(grads);

  JensenReport report;
  report.gap = jensen_gap(space, oracle, masses, zs);
  report.pairing_gap = chebyshev(space, p, grads, zs).real();

  if (options.gradient_enclosure) {
    check_supplied(space, *options.gradient_enclosure, grads, "gradients");
    report.gradient_enclosure = options.gradient_enclosure;
  } else {
    report.gradient_enclosure = fit_or_collapse(space, grads);
  }
  if (options.point_enclosure) {
    check_supplied(space, *options.point_enclosure, zs, "points");
    report.point_enclosure = options.point_enclosure;
  } else if (options.fit_points) {
    report.point_enclosure = fit_or_collapse(space, zs);
  }

  BoundChain& chain = report.chain;
  chain.name = report.point_enclosure ? "3.9" : "3.4";
  chain.functional = report.gap;
  const double grad_diam = report.gradient_enclosure->diameter(space);
  chain.links.push_back({"half_diam_grad*mad(z)", 0.5 * grad_diam * mad(space, p, zs), "3.4"});
  chain.links.push_back(
      {"half_diam_grad*stddev(z)", 0.5 * grad_diam * std::sqrt(variance(space, p, zs)), "3.4"});

  chain.hypotheses.push_back(check_ball(space, *report.gradient_enclosure, grads));
  if (report.point_enclosure) {
    chain.hypotheses.push_back(check_ball(space, *report.point_enclosure, zs));
    const double last = 0.25 * grad_diam * report.point_enclosure->diameter(space);
    chain.links.push_back({"quarter_diam_grad*diam_z", last, "3.9"});
    if (last > 0.0) report.improvement_ratio = chain.links[0].value / last;
  }
  for (const ConditionReport& h : chain.hypotheses) {
    chain.hypotheses_verified = chain.hypotheses_verified && h.holds();
  }

  double magnitude = 0.0;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    magnitude += p[i] * (space.norm(grads[i]) * space.norm(zs[i]) + std::abs(oracle.eval(zs[i])));
  }
  for (const BoundLink& link : chain.links) magnitude = std::max(magnitude, link.value);
  chain.scale = std::max(1.0, magnitude);
  return report;
}

}  // namespace gruss
