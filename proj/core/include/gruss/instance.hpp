#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gruss/bounds.hpp"

namespace gruss {

/// Everything one run can consume: a space, weights, sequences, and the
/// optional enclosures and parameters named by the bounds.
struct Instance {
  Space space;
  /// Probability weights for the bound chains; nonnegative masses q_i
  /// (normalized by their total) for the Jensen report.
  std::vector<double> weights;
  std::vector<Vector> xs;
  std::vector<Vector> ys;
  std::vector<Scalar> alphas;
  std::vector<Vector> zs;

  std::optional<Enclosure> x_enclosure;
  std::optional<Enclosure> y_enclosure;
  std::optional<ScalarDisc> alpha_disc;
  std::optional<Enclosure> gradient_enclosure;
  std::optional<Enclosure> z_enclosure;

  std::optional<std::string> oracle;
  std::optional<HolderExponent> holder;
};

/// Parse failure with a JSON-pointer style location ("/sequences/xs/2").
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& message)
      : Error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// Document layout:
///   {
///     "space":      {"dim": 2, "field": "real" | "complex", "metric": [..]?},
///     "weights":    [..],
///     "sequences":  {"xs": [[..]..]?, "ys": ..?, "alphas": [..]?, "zs": ..?},
///     "enclosures": {"x_lo","x_hi","y_lo","y_hi","a","A","m","M","z_lo","z_hi"}?,
///     "oracle":     "squared_norm"?,
///     "holder_p":   2 | "inf"?
///   }
/// Complex scalars are [re, im] pairs, real scalars plain numbers.
Instance parse_instance(std::string_view text);
Instance read_instance_file(const std::string& path);

/// Inverse of parse_instance. Doubles are written in shortest round-trip
/// form, so parse_instance(serialize_instance(i)) reproduces every bit.
std::string serialize_instance(const Instance& instance, int indent = 2);
void write_instance_file(const Instance& instance, const std::string& path);

/// FNV-1a 64-bit digest, hex encoded; identifies the input of a report.
std::string content_hash(std::string_view bytes);

}  // namespace gruss
