#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gruss/instance.hpp"

namespace gruss {

/// Inequalities whose constant the search tries to attain.
enum class SharpnessTarget {
  Thm23First,          ///< |cheb| <= 1/2 |X-x| mad(y)
  Thm23Second,         ///< |cheb| <= 1/2 |X-x| stddev(y)
  Rem24Final,          ///< |cheb| <= 1/4 |X-x| |Y-y|
  Thm25First,          ///< |gruss| <= 1/2 |X-x| mad(alpha)
  FdEqualWeightsMax,   ///< |cheb| <= (n^2-1)/12 max|dx| max|dy|, p_i = 1/n
};

std::string to_string(SharpnessTarget target);
/// Throws InvalidInput listing the valid names.
SharpnessTarget parse_target(const std::string& name);
std::vector<std::string> target_names();

/// Best functional-to-bound ratio found for one target. The bound carries
/// the claimed constant, so a sharp constant shows up as a ratio near 1.
struct SharpnessResult {
  SharpnessTarget target = SharpnessTarget::Thm23First;
  double target_constant = 0.0;
  double achieved_ratio = 0.0;
  double functional = 0.0;
  double bound = 0.0;
  Instance witness;
  /// Chain evaluated by `gruss bound --which <tag>` on the witness and the
  /// index of the link the ratio refers to.
  std::string chain_tag;
  std::size_t link_index = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Ratios above 1 + kSoundnessSlack mean the inequality itself failed.
inline constexpr double kSoundnessSlack = 1e-9;

/// A candidate broke an inequality; carries the offending instance.
class SoundnessViolation : public Error {
 public:
  SoundnessViolation(const std::string& what, Instance witness)
      : Error(what), witness_(std::move(witness)) {}
  const Instance& witness() const noexcept { return witness_; }

 private:
  Instance witness_;
};

/// Two-point construction p = (p1, 1 - p1), x_1 = y_1 = lo, x_2 = y_2 = hi
/// with enclosure (lo, hi), for which the first bound of the 2.3
/// chain is attained.
SharpnessResult extremal_thm23(const Space& space, double p1, const Vector& lo, const Vector& hi);
/// Default instance: p = (1/2, 1/2), lo = 0, hi = 1 on the real line.
SharpnessResult extremal_thm23();

struct SearchConfig {
  SharpnessTarget target = SharpnessTarget::Thm23First;
  std::size_t n = 2;
  std::size_t dim = 1;
  std::int64_t budget = 1000;
  std::uint64_t seed = 1;
  /// Worker threads for the restarts; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Evaluations per restart. The budget is consumed in restarts of this
/// length (the last one possibly truncated), so the best ratio never
/// decreases as the budget grows.
inline constexpr std::int64_t kRestartLength = 500;

/// Random-restart hill climbing over hypothesis-satisfying instances.
/// Deterministic in the config (thread count does not matter). Throws
/// SoundnessViolation if any candidate exceeds ratio 1 + kSoundnessSlack.
SharpnessResult search(const SearchConfig& config);

/// Re-evaluates the ratio of `target` on an instance, checking hypotheses.
/// Returns {functional, bound}.
std::pair<double, double> evaluate_target(SharpnessTarget target, const Instance& instance);

}  // namespace gruss
