#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "gruss/errors.hpp"

namespace gruss {

using Scalar = std::complex<double>;

namespace tol {
/// Relative tolerance used for every identity and ordering check.
inline constexpr double kRelative = 1e-10;
/// Largest |sum - 1| a probability vector may carry and still be accepted.
inline constexpr double kWeightSum = 1e-9;
}  // namespace tol

/// Coordinates of an element of a finite-dimensional inner product space.
/// A Vector does not know its space; operations taking a Space validate it.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<Scalar> coords);
  Vector(std::initializer_list<Scalar> coords);

  static Vector zeros(std::size_t dim);

  std::size_t size() const noexcept { return coords_.size(); }
  const Scalar& operator[](std::size_t k) const { return coords_[k]; }
  Scalar& operator[](std::size_t k) { return coords_[k]; }
  std::span<const Scalar> coords() const noexcept { return coords_; }

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(Scalar factor);

  friend Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
  friend Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
  friend Vector operator*(Scalar factor, Vector v) { return v *= factor; }
  friend Vector operator*(Vector v, Scalar factor) { return v *= factor; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> coords_;
};

enum class Field { Real, Complex };

/// R^d or C^d with an optional diagonal metric <u, v> = sum_k w_k u_k conj(v_k).
/// The inner product is linear in the first slot and conjugate-linear in the
/// second.
class Space {
 public:
  /// Real line with the standard metric.
  Space() : Space(1) {}
  explicit Space(std::size_t dim, Field field = Field::Real,
                 std::vector<double> metric = {});

  static Space real(std::size_t dim) { return Space(dim, Field::Real); }
  static Space complex(std::size_t dim) { return Space(dim, Field::Complex); }

  std::size_t dim() const noexcept { return dim_; }
  Field field() const noexcept { return field_; }
  bool is_complex() const noexcept { return field_ == Field::Complex; }
  /// Empty when the metric is the identity.
  const std::vector<double>& metric() const noexcept { return metric_; }
  double metric_weight(std::size_t k) const { return metric_.empty() ? 1.0 : metric_[k]; }

  /// Throws ContractViolation unless `v` has this space's dimension and,
  /// for real spaces, zero imaginary parts.
  void require(const Vector& v) const;
  void require(std::span<const Vector> vs) const;

  Scalar inner(const Vector& u, const Vector& v) const;
  double norm_squared(const Vector& u) const;
  double norm(const Vector& u) const;
  double distance(const Vector& u, const Vector& v) const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  std::size_t dim_;
  Field field_;
  std::vector<double> metric_;
};

/// Nonnegative weights summing to one.
class ProbabilityVector {
 public:
  /// Accepts weights whose sum is within tol::kWeightSum of one and
  /// rescales them; anything further off is rejected with InvalidInput.
  explicit ProbabilityVector(std::vector<double> weights);
  ProbabilityVector(std::initializer_list<double> weights)
      : ProbabilityVector(std::vector<double>(weights)) {}

  static ProbabilityVector uniform(std::size_t n);
  /// p_i = q_i / Q with Q = sum q_i > 0.
  static ProbabilityVector from_masses(std::span<const double> masses);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const noexcept { return weights_; }
  auto begin() const noexcept { return weights_.begin(); }
  auto end() const noexcept { return weights_.end(); }

 private:
  std::vector<double> weights_;
};

Scalar inner(const Space& space, const Vector& u, const Vector& v);
double norm(const Space& space, const Vector& u);

/// sum_i p_i x_i.
Vector weighted_mean(const Space& space, const ProbabilityVector& p, std::span<const Vector> xs);
/// sum_i p_i a_i for scalars.
Scalar weighted_mean(const ProbabilityVector& p, std::span<const Scalar> alphas);

/// (x_2 - x_1, ..., x_n - x_{n-1}); throws DegenerateInput for n < 2.
std::vector<Vector> forward_differences(std::span<const Vector> xs);

/// Throws ContractViolation when the two lengths differ.
void require_same_length(std::size_t expected, std::size_t actual, const char* what);

}  // namespace gruss
