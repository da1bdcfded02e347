#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace gruss {
namespace {

using json = nlohmann::json;

std::string data(const char* name) { return std::string(GRUSS_DATA_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"bound", data("two_point.json")}).code, cli::kUsage);

  const Outcome bad_tag = run({"bound", data("two_point.json"), "--which", "9.9"});
  EXPECT_EQ(bad_tag.code, cli::kUsage);
  EXPECT_NE(bad_tag.err.find("2.3"), std::string::npos) << bad_tag.err;

  const Outcome jensen_tag = run({"bound", data("two_point.json"), "--which", "3.4"});
  EXPECT_EQ(jensen_tag.code, cli::kUsage);
  EXPECT_NE(jensen_tag.err.find("jensen"), std::string::npos);

  const Outcome malformed = run({"check", data("malformed.json")});
  EXPECT_EQ(malformed.code, cli::kUsage);
  EXPECT_NE(malformed.err.find("/sequences/xs/1"), std::string::npos) << malformed.err;

  EXPECT_EQ(run({"check", data("missing.json")}).code, cli::kUsage);
  EXPECT_EQ(run({"sharpness", "--target", "bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"jensen", data("complex_jensen.json")}).code, cli::kUsage);
  EXPECT_EQ(run({"bound", data("two_point.json"), "--which", "1.6", "--holder-p", "1"}).code,
            cli::kUsage);
}

TEST(Cli, CheckVerdicts) {
  EXPECT_EQ(run({"check", data("two_point.json")}).code, cli::kSuccess);
  const Outcome exterior = run({"check", data("exterior_point.json"), "--json"});
  EXPECT_EQ(exterior.code, cli::kConcern);
  const json doc = json::parse(exterior.out);
  EXPECT_EQ(doc["results"]["verdict"], "hypothesis violated");
  EXPECT_EQ(run({"check", data("planar_unfitted.json"), "--fit"}).code, cli::kSuccess);
  EXPECT_EQ(run({"check", data("planar_unfitted.json"), "--fit", "--mode", "antipodal_pair"}).code,
            cli::kSuccess);
}

TEST(Cli, BoundReportsEveryTagOnTheTwoPointInstance) {
  for (const std::string& tag : cli::bound_tags()) {
    const Outcome o = run({"bound", data("two_point.json"), "--which", tag, "--json"});
    if (tag == "R2.7") {
      EXPECT_EQ(o.code, cli::kSuccess) << tag << o.err;
      continue;
    }
    ASSERT_EQ(o.code, cli::kSuccess) << tag << ": " << o.err;
    const json doc = json::parse(o.out);
    const json& chain = doc["results"]["chains"][0];
    EXPECT_TRUE(chain["ordered"].get<bool>()) << tag;
    for (const json& link : chain["links"]) {
      EXPECT_NEAR(link["value"].get<double>(), 0.25, 1e-15) << tag << " " << link["label"];
    }
    EXPECT_EQ(doc["results"]["input_hash"].get<std::string>().size(), 16u);
  }
}

TEST(Cli, BoundHypothesisFailureAndEscapeHatch) {
  EXPECT_EQ(run({"bound", data("exterior_point.json"), "--which", "2.3"}).code, cli::kConcern);
  const Outcome unchecked =
      run({"bound", data("exterior_point.json"), "--which", "2.3", "--unchecked"});
  EXPECT_NE(unchecked.out.find("unverified hypothesis"), std::string::npos) << unchecked.out;
}

TEST(Cli, ForwardDifferenceTagsAndHoelder) {
  const Outcome o = run({"bound", data("forward_difference.json"), "--which", "1.7", "--holder-p", "inf"});
  EXPECT_EQ(o.code, cli::kSuccess) << o.err;
  EXPECT_NE(o.out.find("tightest"), std::string::npos);
}

TEST(Cli, Jensen) {
  const Outcome o = run({"jensen", data("three_point_jensen.json"), "--json"});
  ASSERT_EQ(o.code, cli::kSuccess) << o.err;
  const json doc = json::parse(o.out);
  EXPECT_NEAR(doc["results"]["improvement_ratio"].get<double>(), 2.0 / 3.0, 1e-12);
  EXPECT_EQ(run({"jensen", data("two_point.json"), "--oracle", "faulty_squared_norm"}).code,
            cli::kConcern);
  EXPECT_EQ(run({"jensen", data("constant_zs.json")}).code, cli::kSuccess);
}

TEST(Cli, SharpnessDumpReplaysThroughBound) {
  const auto path = std::filesystem::temp_directory_path() / "gruss_cli_test_witness.json";
  const Outcome s = run({"sharpness", "--target", "thm23_first", "--budget", "500", "--dump",
                         path.string(), "--json"});
  ASSERT_EQ(s.code, cli::kSuccess) << s.err;
  const json found = json::parse(s.out)["results"];
  const Outcome b = run({"bound", path.string(), "--which", "2.3", "--json"});
  std::filesystem::remove(path);
  ASSERT_EQ(b.code, cli::kSuccess) << b.err;
  const json chain = json::parse(b.out)["results"]["chains"][0];
  EXPECT_EQ(chain["functional"].get<double>(), found["functional"].get<double>());
  EXPECT_EQ(chain["links"][0]["value"].get<double>(), found["bound"].get<double>());
}

}  // namespace
}  // namespace gruss
