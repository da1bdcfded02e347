#include "gruss/space.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace gruss {
namespace {

bool finite(Scalar s) { return std::isfinite(s.real()) && std::isfinite(s.imag()); }

void require_finite(std::span<const Scalar> coords) {
  for (const Scalar& c : coords) {
    if (!finite(c)) throw InvalidInput("vector coordinate is not finite");
  }
}

}  // namespace

Vector::Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) { require_finite(coords_); }

Vector::Vector(std::initializer_list<Scalar> coords) : coords_(coords) { require_finite(coords_); }

Vector Vector::zeros(std::size_t dim) { return Vector(std::vector<Scalar>(dim)); }

Vector& Vector::operator+=(const Vector& other) {
  if (other.size() != size()) throw ContractViolation("vector dimension mismatch in addition");
  for (std::size_t k = 0; k < size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  if (other.size() != size()) throw ContractViolation("vector dimension mismatch in subtraction");
  for (std::size_t k = 0; k < size(); ++k) coords_[k] -= other.coords_[k];
  return *this;
}

Vector& Vector::operator*=(Scalar factor) {
  for (Scalar& c : coords_) c *= factor;
  return *this;
}

Space::Space(std::size_t dim, Field field, std::vector<double> metric)
    : dim_(dim), field_(field), metric_(std::move(metric)) {
  if (dim_ == 0) throw InvalidInput("space dimension must be positive");
  if (!metric_.empty()) {
    if (metric_.size() != dim_) {
      throw ContractViolation("metric has " + std::to_string(metric_.size()) +
                              " weights, space dimension is " + std::to_string(dim_));
    }
    for (double w : metric_) {
      if (!(w > 0.0) || !std::isfinite(w)) throw InvalidInput("metric weights must be finite and > 0");
    }
  }
}

void Space::require(const Vector& v) const {
  if (v.size() != dim_) {
    throw ContractViolation("vector has dimension " + std::to_string(v.size()) + ", space has " +
                            std::to_string(dim_));
  }
  if (field_ == Field::Real) {
    for (const Scalar& c : v.coords()) {
      if (c.imag() != 0.0) throw ContractViolation("complex coordinate in a real space");
    }
  }
}

void Space::require(std::span<const Vector> vs) const {
  for (const Vector& v : vs) require(v);
}

Scalar Space::inner(const Vector& u, const Vector& v) const {
  require(u);
  require(v);
  Scalar acc{};
  for (std::size_t k = 0; k < dim_; ++k) acc += metric_weight(k) * u[k] * std::conj(v[k]);
  return acc;
}

double Space::norm_squared(const Vector& u) const {
  require(u);
  double acc = 0.0;
  for (std::size_t k = 0; k < dim_; ++k) acc += metric_weight(k) * std::norm(u[k]);
  return acc;
}

double Space::norm(const Vector& u) const { return std::sqrt(norm_squared(u)); }

double Space::distance(const Vector& u, const Vector& v) const { return norm(u - v); }

ProbabilityVector::ProbabilityVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw DegenerateInput("probability vector is empty");
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) throw InvalidInput("weights must be finite and nonnegative");
  }
  const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(sum - 1.0) > tol::kWeightSum) {
    throw InvalidInput("weights sum to " + std::to_string(sum) + ", expected 1");
  }
  // Rescale only beyond rounding level so an already-normalized vector
  // survives a serialize/parse cycle bit for bit.
  const double rounding = 8.0 * static_cast<double>(weights_.size()) *
                          std::numeric_limits<double>::epsilon();
  if (std::abs(sum - 1.0) > rounding) {
    for (double& w : weights_) w /= sum;
  }
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
  if (n == 0) throw DegenerateInput("probability vector is empty");
  return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbabilityVector ProbabilityVector::from_masses(std::span<const double> masses) {
  double total = 0.0;
  for (double q : masses) {
    if (!std::isfinite(q) || q < 0.0) throw InvalidInput("masses must be finite and nonnegative");
    total += q;
  }
  if (!(total > 0.0)) throw InvalidInput("total mass must be positive");
  std::vector<double> w(masses.begin(), masses.end());
  for (double& x : w) x /= total;
  return ProbabilityVector(std::move(w));
}

Scalar inner(const Space& space, const Vector& u, const Vector& v) { return space.inner(u, v); }

double norm(const Space& space, const Vector& u) { return space.norm(u); }

void require_same_length(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw ContractViolation(std::string(what) + " has length " + std::to_string(actual) +
                            ", expected " + std::to_string(expected));
  }
}

Vector weighted_mean(const Space& space, const ProbabilityVector& p, std::span<const Vector> xs) {
  require_same_length(p.size(), xs.size(), "sequence");
  space.require(xs);
  Vector mean = Vector::zeros(space.dim());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t k = 0; k < space.dim(); ++k) mean[k] += p[i] * xs[i][k];
  }
  return mean;
}

Scalar weighted_mean(const ProbabilityVector& p, std::span<const Scalar> alphas) {
  require_same_length(p.size(), alphas.size(), "scalar sequence");
  Scalar mean{};
  for (std::size_t i = 0; i < alphas.size(); ++i) mean += p[i] * alphas[i];
  return mean;
}

std::vector<Vector> forward_differences(std::span<const Vector> xs) {
  if (xs.size() < 2) throw DegenerateInput("forward differences need at least two terms");
  std::vector<Vector> out;
  out.reserve(xs.size() - 1);
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) out.push_back(xs[k + 1] - xs[k]);
  return out;
}

}  // namespace gruss
