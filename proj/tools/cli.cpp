#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gruss/bounds.hpp"
#include "gruss/conditions.hpp"
#include "gruss/instance.hpp"
#include "gruss/jensen.hpp"
#include "gruss/sharpness.hpp"

namespace gruss::cli {
namespace {

using nlohmann::json;

const std::vector<std::string> kBoundTags = {"1.2", "1.4", "1.5", "1.6", "1.7", "1.8", "1.9",
                                             "2.3", "2.7", "2.8", "2.9", "2.11", "R2.7"};
const std::vector<std::string> kJensenTags = {"3.4", "3.5", "3.9"};

std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

struct Loaded {
  Instance instance;
  std::string hash;
  json document;
};

Loaded load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  Loaded l{parse_instance(text), content_hash(text), json()};
  l.document = json::parse(serialize_instance(l.instance));
  return l;
}

// ---------------------------------------------------------------- reports

struct NamedCondition {
  std::string name;
  ConditionReport report;
  bool fitted = false;
};

json condition_json(const NamedCondition& c) {
  json failing = json::array();
  for (std::size_t i : c.report.failing()) failing.push_back(i);
  return {{"name", c.name},
          {"condition", c.report.condition == Condition::Box ? "box" : "ball"},
          {"holds", c.report.holds()},
          {"fitted", c.fitted},
          {"diameter", c.report.diameter},
          {"box_slack", c.report.box_slack},
          {"ball_slack", c.report.ball_slack},
          {"failing", failing}};
}

json chain_json(const BoundChain& chain) {
  json links = json::array();
  for (const BoundLink& l : chain.links) {
    links.push_back({{"label", l.label}, {"value", l.value}, {"tag", l.tag}});
  }
  json out = {{"name", chain.name},
              {"functional", chain.functional},
              {"links", links},
              {"parallel", chain.parallel},
              {"hypotheses_verified", chain.hypotheses_verified},
              {"ordered", chain.ordered()}};
  out["tightest"] = chain.tightest ? json(*chain.tightest) : json(nullptr);
  return out;
}

void print_condition(std::ostream& out, const NamedCondition& c) {
  out << "condition " << c.name << (c.fitted ? " (fitted)" : "") << ": "
      << (c.report.holds() ? "holds" : "FAILS") << "  diameter " << num(c.report.diameter) << '\n';
  out << "  " << std::left << std::setw(6) << "index" << std::setw(26) << "box slack"
      << std::setw(26) << "ball slack" << "verdict\n";
  for (std::size_t i = 0; i < c.report.size(); ++i) {
    out << "  " << std::setw(6) << i << std::setw(26) << num(c.report.box_slack[i]) << std::setw(26)
        << num(c.report.ball_slack[i]) << (c.report.holds_at(i) ? "ok" : "outside") << '\n';
  }
  out << std::right;
}

void print_chain(std::ostream& out, const BoundChain& chain) {
  out << "chain " << chain.name << (chain.parallel ? " (parallel bounds)" : "") << '\n';
  out << "  " << std::left << std::setw(34) << "term" << std::setw(26) << "value" << "tag\n";
  out << "  " << std::setw(34) << "functional" << std::setw(26) << num(chain.functional) << '\n';
  for (std::size_t k = 0; k < chain.links.size(); ++k) {
    const BoundLink& l = chain.links[k];
    out << "  " << std::setw(34) << l.label << std::setw(26) << num(l.value) << l.tag;
    if (chain.tightest && *chain.tightest == k) out << "  <- tightest";
    out << '\n';
  }
  out << std::right;
  if (!chain.hypotheses_verified) out << "  unverified hypothesis\n";
  if (auto bad = chain.first_violation()) out << "  ORDER VIOLATED at link " << *bad << '\n';
}

void emit_json(std::ostream& out, json document, json results) {
  document["results"] = std::move(results);
  out << document.dump(2) << '\n';
}

// ------------------------------------------------------------------ check

struct CheckArgs {
  std::string file;
  bool fit = false;
  std::string mode = "bounding_sphere";
  bool json = false;
};

FitMode parse_mode(const std::string& mode) {
  return mode == "antipodal_pair" ? FitMode::AntipodalPair : FitMode::BoundingSphere;
}

ScalarDisc fit_disc(const Instance& inst) {
  if (!inst.space.is_complex()) {
    const auto [lo, hi] = std::minmax_element(inst.alphas.begin(), inst.alphas.end(),
                                              [](Scalar a, Scalar b) { return a.real() < b.real(); });
    if (lo->real() == hi->real()) throw DegenerateInput("alphas are constant; disc would be degenerate");
    return {*lo, *hi};
  }
  std::vector<Vector> points;
  for (const Scalar& a : inst.alphas) points.push_back(Vector{a});
  const Enclosure e = fit_enclosure(Space::complex(1), points);
  return {e.lo()[0], e.hi()[0]};
}

int cmd_check(const CheckArgs& args, std::ostream& out) {
  Loaded loaded = load(args.file);
  Instance& inst = loaded.instance;
  const FitMode mode = parse_mode(args.mode);
  std::vector<NamedCondition> conditions;

  auto vector_condition = [&](const char* name, const std::vector<Vector>& seq,
                              std::optional<Enclosure>& encl) {
    if (seq.empty()) return;
    bool fitted = false;
    if (!encl && args.fit) {
      encl = fit_enclosure(inst.space, seq, mode);
      fitted = true;
    }
    if (encl) conditions.push_back({name, check_ball(inst.space, *encl, seq), fitted});
  };
  vector_condition("x", inst.xs, inst.x_enclosure);
  vector_condition("y", inst.ys, inst.y_enclosure);
  vector_condition("z", inst.zs, inst.z_enclosure);
  if (!inst.alphas.empty()) {
    bool fitted = false;
    if (!inst.alpha_disc && args.fit) {
      inst.alpha_disc = fit_disc(inst);
      fitted = true;
    }
    if (inst.alpha_disc) {
      conditions.push_back(
          {"alpha", check_scalar_disc(inst.alpha_disc->lo, inst.alpha_disc->hi, inst.alphas), fitted});
    }
  }
  if (inst.gradient_enclosure && inst.oracle && !inst.zs.empty()) {
    const ConvexOracle oracle = make_oracle(*inst.oracle, inst.space);
    std::vector<Vector> grads;
    for (const Vector& z : inst.zs) grads.push_back(oracle.grad(z));
    conditions.push_back({"gradient", check_ball(inst.space, *inst.gradient_enclosure, grads), false});
  }
  if (conditions.empty()) {
    throw InvalidInput("nothing to check: no sequence has an enclosure (use --fit to derive one)");
  }

  const bool all_hold = std::all_of(conditions.begin(), conditions.end(),
                                    [](const NamedCondition& c) { return c.report.holds(); });
  if (args.json) {
    json conds = json::array();
    for (const NamedCondition& c : conditions) conds.push_back(condition_json(c));
    emit_json(out, json::parse(serialize_instance(inst)),
              {{"command", "check"},
               {"input_hash", loaded.hash},
               {"conditions", conds},
               {"verdict", all_hold ? "ok" : "hypothesis violated"}});
  } else {
    out << "input " << loaded.hash << '\n';
    for (const NamedCondition& c : conditions) print_condition(out, c);
    out << "verdict: " << (all_hold ? "all conditions hold" : "condition violated") << '\n';
  }
  return all_hold ? kSuccess : kConcern;
}

// ------------------------------------------------------------------ bound

struct BoundArgs {
  std::string file;
  std::string which;
  bool fit = false;
  bool unchecked = false;
  std::string holder;
  bool json = false;
};

void need(bool present, const std::string& what) {
  if (!present) throw InvalidInput("instance lacks " + what);
}

const Enclosure& enclosure_for(std::optional<Enclosure>& encl, const std::vector<Vector>& seq,
                               const Space& space, bool fit, const char* name) {
  if (!encl) {
    if (!fit) throw InvalidInput(std::string("instance lacks the ") + name + " enclosure (use --fit)");
    encl = fit_enclosure(space, seq);
  }
  return *encl;
}

const ScalarDisc& disc_for(Instance& inst, bool fit) {
  if (!inst.alpha_disc) {
    if (!fit) throw InvalidInput("instance lacks the alpha disc a/A (use --fit)");
    inst.alpha_disc = fit_disc(inst);
  }
  return *inst.alpha_disc;
}

HolderExponent holder_for(const BoundArgs& args, const Instance& inst) {
  if (args.holder.empty()) return inst.holder.value_or(HolderExponent{});
  if (args.holder == "inf") return HolderExponent::infinity();
  double p = 0.0;
  try {
    std::size_t used = 0;
    p = std::stod(args.holder, &used);
    if (used != args.holder.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw InvalidInput("--holder-p expects a number > 1 or 'inf'");
  }
  if (!(p > 1.0) || !std::isfinite(p)) throw InvalidInput("--holder-p must exceed 1");
  return {p};
}

BoundChain evaluate_bound(const BoundArgs& args, Instance& inst) {
  const std::string& tag = args.which;
  const HypothesisPolicy policy = args.unchecked ? HypothesisPolicy::Unchecked : HypothesisPolicy::Enforce;
  const ProbabilityVector p(inst.weights);
  const Space& space = inst.space;

  if (tag == "2.3") {
    need(!inst.xs.empty() && !inst.ys.empty(), "sequences xs and ys");
    return chain_thm23(space, enclosure_for(inst.x_enclosure, inst.xs, space, args.fit, "x"), p,
                       inst.xs, inst.ys, policy);
  }
  if (tag == "2.7" || tag == "1.4") {
    need(!inst.xs.empty() && !inst.ys.empty(), "sequences xs and ys");
    const Enclosure& ex = enclosure_for(inst.x_enclosure, inst.xs, space, args.fit, "x");
    const Enclosure& ey = enclosure_for(inst.y_enclosure, inst.ys, space, args.fit, "y");
    return chain_rem24(space, ex, ey, p, inst.xs, inst.ys, policy);
  }
  if (tag == "2.8" || tag == "1.5") {
    need(!inst.xs.empty(), "sequence xs");
    return chain_selfadjoint(space, enclosure_for(inst.x_enclosure, inst.xs, space, args.fit, "x"),
                             p, inst.xs, policy);
  }
  if (tag == "2.9" || tag == "2.11" || tag == "1.2") {
    need(!inst.xs.empty() && !inst.alphas.empty(), "sequences xs and alphas");
    const Enclosure& ex = enclosure_for(inst.x_enclosure, inst.xs, space, args.fit, "x");
    std::optional<ScalarDisc> disc = inst.alpha_disc;
    if (tag != "2.9") disc = disc_for(inst, args.fit);
    return chain_thm25(space, ex, disc, p, inst.alphas, inst.xs, policy);
  }
  if (tag == "R2.7") {
    need(!inst.alphas.empty(), "sequence alphas");
    return chain_complex(disc_for(inst, args.fit), p, inst.alphas, policy);
  }
  if (tag == "1.6" || tag == "1.7" || tag == "1.8" || tag == "1.9") {
    need(!inst.xs.empty(), "sequence xs");
    if ((tag == "1.7" || tag == "1.9") && !is_uniform(p)) {
      throw InvalidInput("tag " + tag + " is the equal-weight case; weights are not uniform");
    }
    const HolderExponent holder = holder_for(args, inst);
    if (tag == "1.8" || tag == "1.9") return chain_forward_difference_self(space, p, inst.xs, holder);
    need(!inst.ys.empty(), "sequence ys");
    return chain_forward_difference(space, p, inst.xs, inst.ys, holder);
  }
  throw std::logic_error("unhandled tag " + tag);
}

int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& err) {
  if (std::find(kBoundTags.begin(), kBoundTags.end(), args.which) == kBoundTags.end()) {
    err << "unknown equation tag '" << args.which << "'; valid tags: " << join(kBoundTags) << '\n';
    if (std::find(kJensenTags.begin(), kJensenTags.end(), args.which) != kJensenTags.end()) {
      err << "tags " << join(kJensenTags) << " belong to the jensen subcommand\n";
    }
    return kUsage;
  }
  Loaded loaded = load(args.file);
  Instance& inst = loaded.instance;

  BoundChain chain;
  try {
    chain = evaluate_bound(args, inst);
  } catch (const HypothesisViolated& e) {
    NamedCondition c{"hypothesis", e.report(), false};
    if (args.json) {
      emit_json(out, loaded.document,
                {{"command", "bound"},
                 {"input_hash", loaded.hash},
                 {"which", args.which},
                 {"conditions", json::array({condition_json(c)})},
                 {"chains", json::array()},
                 {"verdict", "hypothesis violated"},
                 {"message", e.what()}});
    } else {
      out << "input " << loaded.hash << '\n';
      print_condition(out, c);
      out << "verdict: hypothesis violated (" << e.what() << ")\n";
    }
    return kConcern;
  }

  const bool ordered = chain.ordered();
  const std::string verdict = !ordered                      ? "order violated"
                              : !chain.hypotheses_verified ? "unverified hypothesis"
                                                           : "ok";
  if (args.json) {
    json conds = json::array();
    for (std::size_t k = 0; k < chain.hypotheses.size(); ++k) {
      conds.push_back(condition_json({"hypothesis " + std::to_string(k), chain.hypotheses[k], false}));
    }
    emit_json(out, json::parse(serialize_instance(inst)),
              {{"command", "bound"},
               {"input_hash", loaded.hash},
               {"which", args.which},
               {"conditions", conds},
               {"chains", json::array({chain_json(chain)})},
               {"verdict", verdict}});
  } else {
    out << "input " << loaded.hash << '\n';
    print_chain(out, chain);
    out << "verdict: " << verdict << '\n';
  }
  return ordered ? kSuccess : kConcern;
}

// ----------------------------------------------------------------- jensen

struct JensenArgs {
  std::string file;
  std::string oracle;
  bool no_fit_z = false;
  double step = kGradientCheckStep;
  bool json = false;
};

int cmd_jensen(const JensenArgs& args, std::ostream& out) {
  Loaded loaded = load(args.file);
  Instance& inst = loaded.instance;
  if (inst.space.is_complex()) {
    throw InvalidInput("the jensen report is defined for real spaces only; this instance is complex");
  }
  need(!inst.zs.empty(), "sequence zs");
  const std::string name = !args.oracle.empty() ? args.oracle : inst.oracle.value_or("");
  if (name.empty()) throw InvalidInput("no oracle given (set \"oracle\" or pass --oracle)");
  inst.oracle = name;
  const ConvexOracle oracle = make_oracle(name, inst.space);

  const double grad_error = gradient_check(inst.space, oracle, inst.zs, args.step);
  if (grad_error > kGradientCheckTolerance) {
    const std::string msg = "oracle " + name + " fails gradient check: max relative error " +
                            num(grad_error) + " > " + num(kGradientCheckTolerance);
    if (args.json) {
      emit_json(out, json::parse(serialize_instance(inst)),
                {{"command", "jensen"},
                 {"input_hash", loaded.hash},
                 {"gradient_check", grad_error},
                 {"verdict", "gradient check failed"},
                 {"message", msg}});
    } else {
      out << msg << '\n';
    }
    return kConcern;
  }

  JensenOptions options;
  options.gradient_enclosure = inst.gradient_enclosure;
  options.point_enclosure = inst.z_enclosure;
  options.fit_points = !args.no_fit_z;
  JensenReport report;
  try {
    report = reverse_jensen(inst.space, oracle, inst.weights, inst.zs, options);
  } catch (const HypothesisViolated& e) {
    out << "verdict: hypothesis violated (" << e.what() << ")\n";
    return kConcern;
  }

  const double tolerance = report.chain.tolerance();
  const bool pairing_ok = report.gap >= -tolerance && report.gap <= report.pairing_gap + tolerance;
  const bool ok = pairing_ok && report.chain.ordered();
  if (report.gradient_enclosure && !report.gradient_enclosure->degenerate()) {
    inst.gradient_enclosure = report.gradient_enclosure;
  }
  if (report.point_enclosure && !report.point_enclosure->degenerate()) {
    inst.z_enclosure = report.point_enclosure;
  }

  if (args.json) {
    json results = {{"command", "jensen"},
                    {"input_hash", loaded.hash},
                    {"oracle", name},
                    {"gradient_check", grad_error},
                    {"gap", report.gap},
                    {"pairing_gap", report.pairing_gap},
                    {"pairing_tag", "3.5"},
                    {"chains", json::array({chain_json(report.chain)})},
                    {"verdict", ok ? "ok" : "inequality violated"}};
    results["improvement_ratio"] =
        report.improvement_ratio ? json(*report.improvement_ratio) : json(nullptr);
    emit_json(out, json::parse(serialize_instance(inst)), results);
  } else {
    out << "input " << loaded.hash << '\n';
    out << "oracle " << name << "  gradient check " << num(grad_error) << '\n';
    out << "jensen gap        " << num(report.gap) << '\n';
    out << "pairing gap (3.5) " << num(report.pairing_gap) << '\n';
    print_chain(out, report.chain);
    if (report.improvement_ratio) out << "improvement ratio " << num(*report.improvement_ratio) << '\n';
    out << "verdict: " << (ok ? "ok" : "inequality violated") << '\n';
  }
  return ok ? kSuccess : kConcern;
}

// -------------------------------------------------------------- sharpness

struct SharpnessArgs {
  std::string target;
  std::size_t n = 2;
  std::size_t dim = 1;
  std::int64_t budget = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string dump;
  bool json = false;
};

int cmd_sharpness(const SharpnessArgs& args, std::ostream& out, std::ostream& err) {
  SearchConfig config;
  try {
    config.target = parse_target(args.target);
  } catch (const InvalidInput& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  config.n = args.n;
  config.dim = args.dim;
  config.budget = args.budget;
  config.seed = args.seed;
  config.threads = args.threads;

  SharpnessResult result;
  try {
    result = search(config);
  } catch (const SoundnessViolation& e) {
    err << "soundness violation: " << e.what() << '\n';
    if (!args.dump.empty()) write_instance_file(e.witness(), args.dump);
    return kConcern;
  }
  if (!args.dump.empty()) write_instance_file(result.witness, args.dump);

  if (args.json) {
    emit_json(out, json::parse(serialize_instance(result.witness)),
              {{"command", "sharpness"},
               {"target", to_string(result.target)},
               {"target_constant", result.target_constant},
               {"achieved_ratio", result.achieved_ratio},
               {"functional", result.functional},
               {"bound", result.bound},
               {"chain_tag", result.chain_tag},
               {"link_index", result.link_index},
               {"trials", result.trials},
               {"seed", result.seed}});
  } else {
    out << "target          " << to_string(result.target) << '\n'
        << "constant        " << num(result.target_constant) << '\n'
        << "achieved ratio  " << num(result.achieved_ratio) << '\n'
        << "functional      " << num(result.functional) << '\n'
        << "bound           " << num(result.bound) << '\n'
        << "chain           " << result.chain_tag << " link " << result.link_index << '\n'
        << "trials          " << result.trials << '\n'
        << "seed            " << result.seed << '\n';
    if (!args.dump.empty()) out << "witness written to " << args.dump << '\n';
  }
  return kSuccess;
}

}  // namespace

std::vector<std::string> bound_tags() { return kBoundTags; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grüss-type bounds for weighted vector sequences in inner product spaces", "gruss"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Check enclosure hypotheses point by point");
  check_cmd->add_option("file", check.file, "Instance file")->required();
  check_cmd->add_flag("--fit", check.fit, "Fit enclosures that the instance does not supply");
  check_cmd->add_option("--mode", check.mode, "Fitting mode")
      ->check(CLI::IsMember({"bounding_sphere", "antipodal_pair"}));
  check_cmd->add_flag("--json", check.json, "Emit a structured report");

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate one bound chain");
  bound_cmd->add_option("file", bound.file, "Instance file")->required();
  bound_cmd->add_option("--which", bound.which, "Equation tag: " + join(kBoundTags))->required();
  bound_cmd->add_flag("--fit", bound.fit, "Fit missing enclosures");
  bound_cmd->add_flag("--unchecked", bound.unchecked, "Evaluate even if hypotheses fail");
  bound_cmd->add_option("--holder-p", bound.holder, "Hoelder exponent (> 1, or 'inf')");
  bound_cmd->add_flag("--json", bound.json, "Emit a structured report");

  JensenArgs jensen;
  auto* jensen_cmd = app.add_subcommand("jensen", "Reverse Jensen report for a catalog oracle");
  jensen_cmd->add_option("file", jensen.file, "Instance file")->required();
  jensen_cmd->add_option("--oracle", jensen.oracle, "Oracle: " + join(oracle_names()));
  jensen_cmd->add_flag("--no-fit-z", jensen.no_fit_z, "Do not fit a point enclosure");
  jensen_cmd->add_option("--step", jensen.step, "Finite-difference step for the gradient check");
  jensen_cmd->add_flag("--json", jensen.json, "Emit a structured report");

  SharpnessArgs sharp;
  auto* sharp_cmd = app.add_subcommand("sharpness", "Search for near-extremal instances");
  sharp_cmd->add_option("--target", sharp.target, "Target: " + join(target_names()))->required();
  sharp_cmd->add_option("--n", sharp.n, "Sequence length")->check(CLI::Range(2, 100000));
  sharp_cmd->add_option("--dim", sharp.dim, "Space dimension")->check(CLI::Range(1, 100000));
  sharp_cmd->add_option("--budget", sharp.budget, "Candidate evaluations")
      ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
  sharp_cmd->add_option("--seed", sharp.seed, "Random seed");
  sharp_cmd->add_option("--threads", sharp.threads, "Worker threads (0 = all cores)");
  sharp_cmd->add_option("--dump", sharp.dump, "Write the witness instance to this file");
  sharp_cmd->add_flag("--json", sharp.json, "Emit a structured report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*check_cmd) return cmd_check(check, out);
    if (*bound_cmd) return cmd_bound(bound, out, err);
    if (*jensen_cmd) return cmd_jensen(jensen, out);
    if (*sharp_cmd) return cmd_sharpness(sharp, out, err);
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << '\n';
    return kUsage;
  } catch (const HypothesisViolated& e) {
    err << "hypothesis violated: " << e.what() << '\n';
    return kConcern;
  } catch (const FittingFailure& e) {
    err << "fitting failed: " << e.what() << '\n';
    return kConcern;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gruss::cli
