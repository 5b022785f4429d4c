#include <functional>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace fixtures;
using report::Json;

namespace {

const std::string kCounterexample = R"(
[algebra]
vertices = ["1", "2", "3"]
arrows = [["alpha", "1", "2"], ["beta", "2", "3"], ["gamma", "2", "3"], ["delta", "3", "1"]]
relations = ["beta*alpha", "alpha*delta", "delta*gamma"]

[module.S1]
kind = "simple"
vertex = "1"
)";

Workspace<Q> load(const std::string& text) { return build_workspace<Q>(format::parse(text, "test")); }

std::string parse_error(const std::string& text) {
  try {
    load(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

cli::Request request(std::string command, std::vector<std::string> args = {},
                     std::map<std::string, std::string> opts = {}) {
  cli::Request r;
  r.command = std::move(command);
  r.args = std::move(args);
  r.opts = std::move(opts);
  return r;
}

void collect_scalars(const Json& j, std::vector<std::string>& out) {
  if (j.is_object() || j.is_array()) {
    for (const auto& x : j) collect_scalars(x, out);
  } else if (j.is_number()) {
    out.push_back(j.dump());
  }
}

}  // namespace

TEST(Format, RoundTripsCorpusFiles) {
  for (const char* f : {"counterexample.alg", "kronecker.alg", "triangular.hom", "m2m3.hom"}) {
    auto text = corpus::read_file(std::string(STRATHOM_CORPUS_DIR) + "/" + f);
    auto doc = format::parse(text, f);
    EXPECT_EQ(format::parse(format::emit(doc)), doc) << f;
  }
}

TEST(Format, ValuesKeepRationalLiterals) {
  auto doc = format::parse("[x]\nv = [1, -3/4, \"s\", true, {a = 2}]\n");
  const auto& v = doc.find("x")->find("v")->value;
  ASSERT_EQ(v.items.size(), 5u);
  EXPECT_EQ(v.items[1].text, "-3/4");
  EXPECT_TRUE(v.items[3].is(format::Value::Kind::boolean));
  EXPECT_TRUE(v.items[4].is(format::Value::Kind::table));
}

TEST(Format, SyntaxErrorsCarryPositions) {
  EXPECT_THROW(format::parse("k = 1\n"), ParseError);
  EXPECT_THROW(format::parse("[a]\nk = 1\nk = 2\n"), ParseError);
  EXPECT_THROW(format::parse("[a]\n[a]\n"), ParseError);
  EXPECT_THROW(format::parse("[a]\nk = \"open\n"), ParseError);
  EXPECT_THROW(format::parse("[a]\nk = [1, 2\n"), ParseError);
  try {
    format::parse("[a]\nk = 1\nk = 2\n", "f.alg");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("f.alg:3"), std::string::npos) << e.what();
  }
}

TEST(Workspace, BuildsCounterexample) {
  auto ws = load(kCounterexample);
  EXPECT_EQ(ws.algebra("A")->dim(), 9u);
  EXPECT_EQ(ws.module("S1")->dim(), 1u);
  EXPECT_THROW(ws.module("S9"), ParseError);
}

TEST(Workspace, RejectsMalformedInput) {
  EXPECT_NE(parse_error("[algebra]\nvertices = []\narrows = []\n").find("empty vertex list"), std::string::npos);
  EXPECT_NE(parse_error("[algebra]\nvertices = [\"1\", \"2\", \"3\"]\narrows = [[\"alpha\", \"1\", \"2\"], "
                        "[\"beta\", \"2\", \"3\"]]\nrelations = [\"alpha*beta\"]\n")
                .find("not composable"),
            std::string::npos);
  EXPECT_NE(parse_error("[algebra]\nvertices = [\"1\"]\nfoo = 1\n").find("unknown key 'foo'"), std::string::npos);
  EXPECT_NE(parse_error("[widget]\n").find("unknown section"), std::string::npos);
  EXPECT_NE(parse_error(kCounterexample + "[module.T]\nkind = \"simple\"\nvertex = \"7\"\n"), "");
}

TEST(Workspace, ParsesElementsByLabel) {
  auto ws = load(kCounterexample);
  auto a = ws.algebra("A");
  auto e = parse_element(*a, "e2+e3");
  EXPECT_EQ(e, sum_of(*a, {"e2", "e3"}));
  EXPECT_EQ(parse_element(*a, "2alpha - e1"), scaled(element(*a, "alpha"), Q(2)) - element(*a, "e1"));
  EXPECT_THROW(parse_element(*a, "e9"), ParseError);
}

TEST(Workspace, PipelineSection) {
  auto ws = load(kCounterexample + "[pipeline]\nsteps = [{command = \"check-strat\", e = \"e2+e3\"}]\n");
  ASSERT_EQ(ws.pipeline.size(), 1u);
  EXPECT_EQ(ws.pipeline[0].command, "check-strat");
  EXPECT_NE(parse_error(kCounterexample + "[pipeline]\nsteps = [1]\n"), "");
}

TEST(Corpus, ManifestPasses) {
  auto rep = corpus::run_manifest<Q>(STRATHOM_CORPUS_DIR, "e1");
  EXPECT_GT(rep.checks.size(), 5u);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.actual << " vs " << c.expected;
}

TEST(Commands, CheckStratReportsPositive) {
  auto ws = load(kCounterexample);
  auto o = cli::execute_reporting(ws, request("check-strat", {}, {{"e", "e2+e3"}}), kDefaultCutoff);
  EXPECT_EQ(o.status, report::Status::positive);
  EXPECT_EQ(o.result["quotient_dim"], 1);
  EXPECT_EQ(o.result["stratifying"], true);
}

TEST(Commands, ResolveAndExt) {
  auto ws = load(kCounterexample);
  auto r = cli::execute_reporting(ws, request("mod resolve", {"S1"}), kDefaultCutoff);
  EXPECT_EQ(r.status, report::Status::positive);
  EXPECT_EQ(r.result["pd"], 2);
  auto e = cli::execute_reporting(ws, request("mod ext", {"S1", "S1"}, {{"degree", "0:2"}}), kDefaultCutoff);
  EXPECT_EQ(e.status, report::Status::positive);
}

TEST(Commands, UnknownNamesAreInputErrors) {
  auto ws = load(kCounterexample);
  EXPECT_THROW(cli::execute(ws, request("mod resolve", {"S7"}), kDefaultCutoff), ParseError);
  EXPECT_THROW(cli::execute(ws, request("check-strat", {}, {{"e", "e9"}}), kDefaultCutoff), ParseError);
  EXPECT_THROW(cli::execute(ws, request("no-such-command"), kDefaultCutoff), Error);
}

TEST(Commands, NonIdempotentIsNegative) {
  auto ws = load(kCounterexample);
  auto o = cli::execute_reporting(ws, request("check-strat", {}, {{"e", "alpha"}}), kDefaultCutoff);
  EXPECT_EQ(o.status, report::Status::negative);
  EXPECT_TRUE(o.result.contains("error"));
}

TEST(Report, MarkdownCarriesEveryNumber) {
  auto ws = load(kCounterexample);
  auto o = cli::execute_reporting(ws, request("alg info"), kDefaultCutoff);
  auto j = report::skeleton("alg info x", "q", kDefaultCutoff, kDefaultSeed);
  j["status"] = report::to_string(o.status);
  j["result"] = o.result;
  j["certificates"] = o.certificates;
  auto md = report::to_markdown(j);
  std::vector<std::string> nums;
  collect_scalars(j, nums);
  EXPECT_FALSE(nums.empty());
  for (const auto& n : nums) EXPECT_NE(md.find(n), std::string::npos) << n;
  EXPECT_NE(md.find("| status | positive |"), std::string::npos);
}

TEST(Report, SeedReproducibility) {
  auto ws = corpus::load_workspace<Q>(std::string(STRATHOM_CORPUS_DIR) + "/triangular.hom");
  auto r = request("construct-one", {}, {{"hom", "lambda"}});
  auto a = cli::execute_reporting(ws, r, kDefaultCutoff);
  auto b = cli::execute_reporting(ws, r, kDefaultCutoff);
  EXPECT_EQ(a.result.dump(), b.result.dump());
  EXPECT_EQ(a.certificates.dump(), b.certificates.dump());
}

TEST(Report, ExitCodes) {
  EXPECT_EQ(report::exit_code(report::Status::positive), 0);
  EXPECT_EQ(report::exit_code(report::Status::negative), 1);
  EXPECT_EQ(report::exit_code(report::Status::inconclusive), 2);
  EXPECT_EQ(report::exit_code(report::Status::input_error), 3);
  EXPECT_EQ(report::status_of(true, false), report::Status::inconclusive);
}

TEST(PrimeFieldPipeline, CounterexampleOverF7) {
  ScopedPrimeField g(7);
  auto a = counterexample<Fp>();
  EXPECT_EQ(a->dim(), 9u);
  auto r = check_stratifying_ideal(a, sum_of(*a, {"e2", "e3"}));
  EXPECT_EQ(r.certificate.kernel_stratifying, std::optional<bool>(true));
  EXPECT_EQ(gldim(a), std::optional<std::size_t>(4));
}
