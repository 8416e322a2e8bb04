#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fewroots/commands.hpp"

using namespace fewroots;

namespace {

RunConfig config(Command c, std::string input = {}) {
  RunConfig cfg;
  cfg.command = c;
  cfg.input = std::move(input);
  return cfg;
}

const Json* report(const Json& out, const std::string& id) {
  for (const auto& r : out["reports"])
    if (r["formula_id"] == id) return &r;
  return nullptr;
}

Integer bound_of(const Json& out, const std::string& id) {
  const Json* r = report(out, id);
  REQUIRE(r != nullptr);
  return Integer((*r)["integer_bound"].get<std::string>(), 10);
}

const std::string kPair = "1 + x1^3*x2 + x1*x2^5\n1 + x1^2*x2^3 + 3*x1^4*x2\n";
const std::string kTrinomial = "3*x1^10 + x1^2 - 4";

}  // namespace

TEST_CASE("bound: local reports") {
  auto cfg = config(Command::kBound, kPair);
  cfg.prime = 2;
  cfg.d = 1;
  auto res = run(cfg);
  REQUIRE(res.exit_code == kExitOk);
  CHECK(bound_of(res.output, "thm1_local") == 127645);
  CHECK(bound_of(res.output, "cor2_1") == 256);
  CHECK(res.output["field"]["q"] == "2");
  CHECK(res.output["system"]["m"] == 5);
}

TEST_CASE("bound: JSON input gives the same reports") {
  auto text = run(config(Command::kBound, kTrinomial));
  std::string json = R"({"n": 1, "polynomials": [[{"exp": [10], "coeff": "3"}, {"exp": [2], "coeff": "1"},
                         {"exp": [0], "coeff": "-4"}]]})";
  auto parsed = run(config(Command::kBound, json));
  REQUIRE(parsed.exit_code == kExitOk);
  CHECK(parsed.output["reports"] == text.output["reports"]);
}

TEST_CASE("bound: too few terms gives zero everywhere") {
  for (bool global : {false, true}) {
    auto cfg = config(Command::kBound, "x1 - 2*x2; 3*x1 + x2");
    cfg.global = global;
    cfg.affine = true;
    auto res = run(cfg);
    REQUIRE(res.exit_code == kExitOk);
    for (const auto& r : res.output["reports"])
      if (r["formula_id"] != "remark1_1") CHECK(r["integer_bound"] == "0");
      else CHECK(Integer(r["integer_bound"].get<std::string>(), 10) >= 1);
  }
}

TEST_CASE("bound: global query") {
  auto cfg = config(Command::kBound, kTrinomial);
  cfg.global = true;
  cfg.d = 1;
  cfg.delta = 1;
  auto res = run(cfg);
  REQUIRE(res.exit_code == kExitOk);
  CHECK(bound_of(res.output, "thm1_global") == 102);
  // one term: facets * C_2(3, 1, 1) = 2 * 8.0018
  CHECK(bound_of(res.output, "cor3_1") == 16);
  auto pair = config(Command::kBound, kPair);
  pair.global = true;
  auto g = run(pair);
  CHECK(bound_of(g.output, "thm1_global") == 3009134);
  CHECK(bound_of(g.output, "cor3_1") == 1994);
}

TEST_CASE("bound: affine variant") {
  auto cfg = config(Command::kBound, kPair);
  cfg.affine = true;
  auto res = run(cfg);
  REQUIRE(res.exit_code == kExitOk);
  int affine = 0;
  for (const auto& r : res.output["reports"]) affine += r["formula_id"] == "remark1_1";
  CHECK(affine == 2);
}

TEST_CASE("bound: field parameters") {
  auto cfg = config(Command::kBound, kTrinomial);
  cfg.prime = 3;
  cfg.e = 2;
  cfg.f = 1;
  auto res = run(cfg);
  REQUIRE(res.exit_code == kExitOk);
  CHECK(res.output["field"]["d"] == 2);
  cfg.d = 3;
  CHECK(run(cfg).exit_code == kExitInvalid);
  auto lone = config(Command::kBound, kTrinomial);
  lone.d = 2;
  CHECK(run(lone).exit_code == kExitInvalid);
  auto composite = config(Command::kBound, kTrinomial);
  composite.prime = 4;
  CHECK(run(composite).exit_code == kExitInvalid);
  auto low = config(Command::kBound, kTrinomial);
  low.precision = 10;
  CHECK(run(low).exit_code == kExitInvalid);
}

TEST_CASE("parse errors") {
  for (std::string bad : {"x1 +", "x0^2 - 1", "x1^(1/2)", "{\"n\": 1, \"polynomials\": [[{\"exp\": [1]}]]}", "{ nope"}) {
    auto res = run(config(Command::kBound, bad));
    CHECK_MESSAGE(res.exit_code == kExitParseError, bad);
    CHECK(res.output["error"] == "parse");
  }
  CHECK(run(config(Command::kBound, "")).exit_code == kExitParseError);
}

TEST_CASE("facets") {
  auto cfg = config(Command::kFacets, kTrinomial);
  cfg.prime = 2;
  auto res = run(cfg);
  REQUIRE(res.exit_code == kExitOk);
  CHECK(res.output["facet_count"] == 2);
  const auto& lf = res.output["lower_facets"];
  REQUIRE(lf.size() == 2);
  CHECK(lf[0]["normal"] == Json::array({"0", "1"}));
  CHECK(lf[1]["normal"] == Json::array({"1", "1"}));
  const auto& cands = res.output["candidate_valuations"];
  REQUIRE(cands.size() == 2);
  CHECK(cands[0]["valuation"] == Json::array({"0"}));
  CHECK(cands[0]["smirnov_bound"] == "8");
  CHECK(cands[1]["valuation"] == Json::array({"1"}));
  CHECK(cands[1]["smirnov_bound"] == "2");

  auto bin = run(config(Command::kFacets, "x1^2 - 4; x2^2 - 4"));
  REQUIRE(bin.exit_code == kExitOk);
  REQUIRE(bin.output["candidate_valuations"].size() == 1);
  CHECK(bin.output["candidate_valuations"][0]["valuation"] == Json::array({"1", "1"}));
  CHECK(bin.output["candidate_valuations"][0]["smirnov_bound"] == "4");

  auto constant = run(config(Command::kFacets, "5"));
  CHECK(constant.exit_code == kExitInvalid);
  CHECK(constant.output.contains("message"));
}

TEST_CASE("verify") {
  auto tri = config(Command::kVerify, kTrinomial);
  tri.prime = 2;
  auto res = run(tri);
  REQUIRE(res.exit_code == kExitOk);
  CHECK(res.output["violations"] == 0);
  bool saw = false;
  for (const auto& c : res.output["instances"][0]["checks"]) {
    CHECK(c["pass"] == true);
    if (c["oracle"] == "univariate_padic") {
      CHECK(c["count"] == "6");
      saw = true;
    }
  }
  CHECK(saw);

  auto prod = config(Command::kVerify, "(x1 - 1)*(x1 - 2)*(x1 - 3); (x2 - 1)*(x2 - 2)*(x2 - 3)");
  auto pres = run(prod);
  REQUIRE(pres.exit_code == kExitOk);
  bool cor = false;
  for (const auto& c : pres.output["instances"][0]["checks"])
    if (c["oracle"] == "rational_search" && c["bound"] == "cor2_1") {
      CHECK(c["count"] == "9");
      cor = true;
    }
  CHECK(cor);

  auto bin = run(config(Command::kVerify, "x1^2 - 4; x2^2 - 4"));
  REQUIRE(bin.exit_code == kExitOk);
  bool snf = false;
  for (const auto& c : bin.output["instances"][0]["checks"]) snf |= c["oracle"] == "snf_binomial";
  CHECK(snf);
}

TEST_CASE("verify: seeded random suite") {
  auto cfg = config(Command::kVerify);
  cfg.random_instances = 25;
  cfg.seed = 11;
  auto res = run(cfg);
  REQUIRE(res.exit_code == kExitOk);
  CHECK(res.output["violations"] == 0);
  CHECK(res.output["instances"].size() == 25);
  CHECK(render(res, OutputFormat::kJson) == render(run(cfg), OutputFormat::kJson));
  cfg.seed = 12;
  CHECK(render(res, OutputFormat::kJson) != render(run(cfg), OutputFormat::kJson));
}

TEST_CASE("output is reproducible") {
  auto cfg = config(Command::kBound, kPair);
  cfg.affine = true;
  CHECK(render(run(cfg), OutputFormat::kJson) == render(run(cfg), OutputFormat::kJson));
  CHECK(render(run(cfg), OutputFormat::kText) == render(run(cfg), OutputFormat::kText));
  auto f = config(Command::kFacets, kPair);
  CHECK(render(run(f), OutputFormat::kJson) == render(run(f), OutputFormat::kJson));
}

TEST_CASE("lenstra commands") {
  auto dm = config(Command::kLenstraDm);
  dm.lenstra_m = 1;
  dm.lenstra_t = 6;
  auto res = run(dm);
  REQUIRE(res.exit_code == kExitOk);
  CHECK(res.output["value"] == "60");
  auto g = config(Command::kLenstraGamma);
  g.lenstra_set = {3, 1, 0};
  g.lenstra_t = 3;
  auto gr = run(g);
  REQUIRE(gr.exit_code == kExitOk);
  CHECK(gr.output["A"] == Json::array({0, 1, 3}));
  CHECK(gr.output["coefficients"] == Json::array({"0", "0", "1/3"}));
  g.lenstra_set = {1, 1};
  CHECK(run(g).exit_code == kExitInvalid);
  CHECK(render(gr, OutputFormat::kText).find("1/3") != std::string::npos);
}
