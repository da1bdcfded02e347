#include "gruss/sharpness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <random>
#include <thread>
#include <tuple>

namespace gruss {
namespace {

constexpr double kInitialStep = 0.5;
constexpr double kMinStep = 1e-9;
constexpr int kRejectionsBeforeHalving = 20;

struct TargetInfo {
  SharpnessTarget target;
  const char* name;
  double constant;
  const char* chain_tag;
  std::size_t link_index;
};

constexpr TargetInfo kTargets[] = {
    {SharpnessTarget::Thm23First, "thm23_first", 0.5, "2.3", 0},
    {SharpnessTarget::Thm23Second, "thm23_second", 0.5, "2.3", 1},
    {SharpnessTarget::Rem24Final, "rem24_final", 0.25, "2.7", 2},
    {SharpnessTarget::Thm25First, "thm25_first", 0.5, "2.9", 0},
    {SharpnessTarget::FdEqualWeightsMax, "fd_equal_weights_max", 1.0 / 12.0, "1.7", 0},
};

const TargetInfo& info(SharpnessTarget target) {
  for (const TargetInfo& t : kTargets) {
    if (t.target == target) return t;
  }
  throw InvalidInput("unknown sharpness target");
}

// Which parts of an instance the search may move and how they are
// constrained.
struct Shape {
  bool weights_free = true;
  bool xs_in_ball = false;
  bool ys_present = false;
  bool ys_in_ball = false;
  bool alphas_present = false;
};

Shape shape_of(SharpnessTarget target) {
  switch (target) {
    case SharpnessTarget::Thm23First:
    case SharpnessTarget::Thm23Second:
      return {true, true, true, false, false};
    case SharpnessTarget::Rem24Final:
      return {true, true, true, true, false};
    case SharpnessTarget::Thm25First:
      return {true, true, false, false, true};
    case SharpnessTarget::FdEqualWeightsMax:
      return {false, false, true, false, false};
  }
  throw InvalidInput("unknown sharpness target");
}

// The fixed enclosure used for constrained sequences: the unit ball,
// written as the antipodal pair -e_1, +e_1.
Enclosure unit_ball(std::size_t dim) {
  Vector lo = Vector::zeros(dim), hi = Vector::zeros(dim);
  lo[0] = -1.0;
  hi[0] = 1.0;
  return Enclosure(std::move(lo), std::move(hi));
}

struct Candidate {
  std::vector<double> masses;
  std::vector<Vector> xs;
  std::vector<Vector> ys;
  std::vector<Scalar> alphas;
};

struct Scored {
  double ratio = 0.0;
  double functional = 0.0;
  double bound = 0.0;
  Instance instance;
};

class Climber {
 public:
  Climber(const SearchConfig& config, std::uint64_t restart)
      : config_(config), shape_(shape_of(config.target)), space_(Space::real(config.dim)) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
    rng_.seed(seq);
  }

  // Runs `evaluations` evaluations (at least one) and returns the best.
  Scored run(std::int64_t evaluations) {
    Candidate current = initial();
    Scored best = score(current);
    double step = kInitialStep;
    int rejections = 0;
    for (std::int64_t k = 1; k < evaluations; ++k) {
      Candidate next = current;
      perturb(next, step);
      Scored s = score(next);
      if (s.ratio > best.ratio) {
        current = std::move(next);
        best = std::move(s);
        rejections = 0;
      } else if (++rejections >= kRejectionsBeforeHalving) {
        step *= 0.5;
        if (step < kMinStep) step = kInitialStep;
        rejections = 0;
      }
    }
    return best;
  }

 private:
  Vector gaussian() {
    Vector v = Vector::zeros(space_.dim());
    for (std::size_t k = 0; k < space_.dim(); ++k) v[k] = normal_(rng_);
    return v;
  }

  void project(Vector& v) const {
    const double len = space_.norm(v);
    if (len > 1.0) v *= 1.0 / len;
  }

  Vector in_ball() {
    Vector v = gaussian();
    const double len = space_.norm(v);
    if (len == 0.0) return v;
    const double radius = std::pow(uniform_(rng_), 1.0 / static_cast<double>(space_.dim()));
    return (radius / len) * v;
  }

  Candidate initial() {
    const std::size_t n = config_.n;
    Candidate c;
    c.masses.assign(n, 1.0);
    if (shape_.weights_free) {
      for (double& m : c.masses) m = std::exp(normal_(rng_));
    }
    for (std::size_t i = 0; i < n; ++i) c.xs.push_back(shape_.xs_in_ball ? in_ball() : gaussian());
    if (shape_.ys_present) {
      for (std::size_t i = 0; i < n; ++i) c.ys.push_back(shape_.ys_in_ball ? in_ball() : gaussian());
    }
    if (shape_.alphas_present) {
      for (std::size_t i = 0; i < n; ++i) c.alphas.push_back(normal_(rng_));
    }
    return c;
  }

  void perturb(Candidate& c, double step) {
    std::vector<int> blocks;
    if (shape_.weights_free) blocks.push_back(0);
    blocks.push_back(1);
    if (shape_.ys_present) blocks.push_back(2);
    if (shape_.alphas_present) blocks.push_back(3);
    const int block = blocks[std::uniform_int_distribution<std::size_t>(0, blocks.size() - 1)(rng_)];
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, config_.n - 1)(rng_);
    switch (block) {
      case 0:
        c.masses[i] *= std::exp(step * normal_(rng_));
        break;
      case 1:
        c.xs[i] += step * gaussian();
        if (shape_.xs_in_ball) project(c.xs[i]);
        break;
      case 2:
        c.ys[i] += step * gaussian();
        if (shape_.ys_in_ball) project(c.ys[i]);
        break;
      default:
        c.alphas[i] += step * normal_(rng_);
        break;
    }
  }

  Instance to_instance(const Candidate& c) const {
    Instance inst;
    inst.space = space_;
    const ProbabilityVector p = ProbabilityVector::from_masses(c.masses);
    inst.weights.assign(p.begin(), p.end());
    inst.xs = c.xs;
    inst.ys = c.ys;
    inst.alphas = c.alphas;
    if (shape_.xs_in_ball) inst.x_enclosure = unit_ball(space_.dim());
    if (shape_.ys_in_ball) inst.y_enclosure = unit_ball(space_.dim());
    return inst;
  }

  Scored score(const Candidate& c) const {
    Scored s;
    s.instance = to_instance(c);
    std::tie(s.functional, s.bound) = evaluate_target(config_.target, s.instance);
    s.ratio = s.bound > 0.0 ? s.functional / s.bound : 0.0;
    if (s.ratio > 1.0 + kSoundnessSlack) {
      throw SoundnessViolation(to_string(config_.target) + ": candidate ratio " +
                                   std::to_string(s.ratio) + " exceeds 1",
                               s.instance);
    }
    return s;
  }

  const SearchConfig& config_;
  Shape shape_;
  Space space_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
  std::uniform_real_distribution<double> uniform_;
};

SharpnessResult make_result(SharpnessTarget target, Scored scored, std::int64_t trials,
                            std::uint64_t seed) {
  const TargetInfo& t = info(target);
  SharpnessResult r;
  r.target = target;
  r.target_constant = t.constant;
  r.achieved_ratio = scored.ratio;
  r.functional = scored.functional;
  r.bound = scored.bound;
  r.witness = std::move(scored.instance);
  r.chain_tag = t.chain_tag;
  r.link_index = t.link_index;
  r.trials = trials;
  r.seed = seed;
  return r;
}

}  // namespace

std::string to_string(SharpnessTarget target) { return info(target).name; }

std::vector<std::string> target_names() {
  std::vector<std::string> out;
  for (const TargetInfo& t : kTargets) out.emplace_back(t.name);
  return out;
}

SharpnessTarget parse_target(const std::string& name) {
  for (const TargetInfo& t : kTargets) {
    if (name == t.name) return t.target;
  }
  std::string valid;
  for (const TargetInfo& t : kTargets) valid += std::string(valid.empty() ? "" : ", ") + t.name;
  throw InvalidInput("unknown sharpness target '" + name + "' (valid: " + valid + ")");
}

std::pair<double, double> evaluate_target(SharpnessTarget target, const Instance& inst) {
  const ProbabilityVector p(inst.weights);
  const TargetInfo& t = info(target);
  auto need = [](const auto& opt, const char* what) -> decltype(auto) {
    if (!opt) throw InvalidInput(std::string("instance lacks ") + what);
    return *opt;
  };
  BoundChain chain;
  switch (target) {
    case SharpnessTarget::Thm23First:
    case SharpnessTarget::Thm23Second:
      chain = chain_thm23(inst.space, need(inst.x_enclosure, "an x enclosure"), p, inst.xs, inst.ys);
      break;
    case SharpnessTarget::Rem24Final:
      chain = chain_rem24(inst.space, need(inst.x_enclosure, "an x enclosure"),
                          need(inst.y_enclosure, "a y enclosure"), p, inst.xs, inst.ys);
      break;
    case SharpnessTarget::Thm25First:
      chain = chain_thm25(inst.space, need(inst.x_enclosure, "an x enclosure"), std::nullopt, p,
                          inst.alphas, inst.xs);
      break;
    case SharpnessTarget::FdEqualWeightsMax:
      if (!is_uniform(p)) throw InvalidInput("equal-weight target needs uniform weights");
      chain = chain_forward_difference(inst.space, p, inst.xs, inst.ys);
      break;
  }
  return {chain.functional, chain.links.at(t.link_index).value};
}

SharpnessResult extremal_thm23(const Space& space, double p1, const Vector& lo, const Vector& hi) {
  if (!(p1 > 0.0 && p1 < 1.0)) throw InvalidInput("p1 must lie in (0, 1)");
  Instance inst;
  inst.space = space;
  inst.weights = {p1, 1.0 - p1};
  inst.xs = {lo, hi};
  inst.ys = inst.xs;
  inst.x_enclosure = Enclosure(lo, hi);
  Scored s;
  std::tie(s.functional, s.bound) = evaluate_target(SharpnessTarget::Thm23First, inst);
  s.ratio = s.functional / s.bound;
  s.instance = std::move(inst);
  return make_result(SharpnessTarget::Thm23First, std::move(s), 1, 0);
}

SharpnessResult extremal_thm23() {
  return extremal_thm23(Space::real(1), 0.5, Vector{0.0}, Vector{1.0});
}

SharpnessResult search(const SearchConfig& config) {
  if (config.n < 2) throw InvalidInput("search needs n >= 2");
  if (config.dim < 1) throw InvalidInput("search needs dim >= 1");
  if (config.budget < 1) throw InvalidInput("search needs budget >= 1");
  info(config.target);

  const std::int64_t restarts = (config.budget + kRestartLength - 1) / kRestartLength;
  std::vector<Scored> results(static_cast<std::size_t>(restarts));
  std::vector<std::exception_ptr> errors(results.size());

  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (std::int64_t r = next++; r < restarts; r = next++) {
      const std::int64_t length = std::min(kRestartLength, config.budget - r * kRestartLength);
      try {
        results[static_cast<std::size_t>(r)] =
            Climber(config, static_cast<std::uint64_t>(r)).run(length);
      } catch (...) {
        errors[static_cast<std::size_t>(r)] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(restarts));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r) {
    if (results[r].ratio > results[best].ratio) best = r;
  }
  return make_result(config.target, std::move(results[best]), config.budget, config.seed);
}

}  // namespace gruss
