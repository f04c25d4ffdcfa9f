#include <kacrep/cli.hpp>
#include <kacrep/errors.hpp>
#include <kacrep/kacmod.hpp>
#include <kacrep/serialize.hpp>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace kacrep;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string tmp(const std::string& name) { return "kacrep_unit_" + name; }

}  // namespace

TEST_CASE("polynomial JSON shape") {
  const auto P = make_params({"b", "c"});
  const auto p = Rational(3, 2) * ParamPoly::variable(P, "b") - ParamPoly(P, Rational(1, 4)) +
                 ParamPoly::variable(P, "b") * ParamPoly::variable(P, "c");
  const auto j = to_json(p);
  CHECK(j == Json::parse(R"j({"b^1": "3/2", "1": "-1/4", "b^1.c^1": "1"})j"));
  CHECK(poly_from_json(j, P) == p);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"j({"t^1": "1"})j"), P), DeclarationError);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"j({"b^0": "1"})j"), P), PreconditionError);
}

TEST_CASE("module round trip") {
  for (const auto& spec : {SuperAlgebraSpec{2, 1, Flavor::sl}, SuperAlgebraSpec{2, 1, Flavor::gl}}) {
    const auto K = build_kac_module(make_algebra(spec), {1});
    const auto text = dump(to_json(K.rep));
    const auto back = representation_from_json(Json::parse(text));
    CHECK(back == K.rep);
    CHECK(dump(to_json(back)) == text);
  }
}

TEST_CASE("report round trip") {
  VerificationReport r;
  r.add("a", true);
  r.add("b", false, "[u1,v1] entry (0,1); symbolic b", "3/2*b");
  const auto back = report_from_json(to_json(r));
  REQUIRE(back.checks.size() == 2);
  CHECK(back.checks[1].location == r.checks[1].location);
  CHECK(back.checks[1].residual == "3/2*b");
  CHECK(!back.passed());
}

TEST_CASE("exported Y of the sl(2|1) quartet") {
  const auto path = tmp("quartet.json");
  const auto r = run({"build", "--algebra", "sl(2|1)", "--labels", "0", "--out", path});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(slurp(path));
  CHECK(j["module"]["dim"] == 4);
  // y0 = -2b on the diagonal, minus the layer
  const auto entries = j["module"]["matrices"]["y"]["entries"];
  REQUIRE(entries.size() == 4);
  CHECK(entries[0] == Json::parse(R"j([0, 0, {"b^1": "-2"}])j"));
  CHECK(entries[1] == Json::parse(R"j([1, 1, {"b^1": "-2", "1": "-1"}])j"));
  CHECK(entries[2] == Json::parse(R"j([2, 2, {"b^1": "-2", "1": "-1"}])j"));
  CHECK(entries[3] == Json::parse(R"j([3, 3, {"b^1": "-2", "1": "-2"}])j"));
  std::remove(path.c_str());
}

TEST_CASE("replicate then verify") {
  const auto r = run({"verify", "--algebra", "sl(2|1)", "--labels", "1", "--N", "3", "--lambdas", "1,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("minimal polynomial of y has degree 3") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("exit codes") {
  const auto nn = run({"build", "--algebra", "sl(2|2)"});
  CHECK(nn.code == 2);
  CHECK(nn.err.find("sl(2|2) is excluded") != std::string::npos);
  CHECK(run({"replicate", "--lambdas", "0"}).code == 2);
  CHECK(run({"build", "--labels", "-1"}).code == 2);
  CHECK(run({"build", "--labels", "0,0"}).code == 2);
  CHECK(run({"build", "--no-such-flag"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"build", "--c", "1"}).code == 2);
  CHECK(run({"twist", "--nu", "1,1"}).code == 2);
  CHECK(run({"build", "--b", "1/0"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("config files") {
  const auto cfg = tmp("cfg.json");
  {
    std::ofstream f(cfg);
    f << R"j({"action": "replicate", "algebra": "gl(2|1)", "labels": [1], "b": "symbolic", "c": "2", "N": 2, "lambdas": ["-3/5"]})j";
  }
  const auto r = run({"--config", cfg});
  CHECK(r.code == 0);
  {
    std::ofstream f(cfg);
    f << R"j({"action": "build", "colour": "blue"})j";
  }
  const auto bad = run({"--config", cfg});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("colour") != std::string::npos);
  {
    std::ofstream f(cfg);
    f << R"j({"action": "build", "m": "two"})j";
  }
  CHECK(run({"--config", cfg}).code == 2);
  {
    std::ofstream f(cfg);
    f << "{not json";
  }
  CHECK(run({"--config", cfg}).code == 2);
  std::remove(cfg.c_str());
}

TEST_CASE("flags override the config") {
  cli::JobConfig cfg = cli::JobConfig::from_json(Json::parse(R"j({"action": "build", "algebra": "sl(3|1)"})j"));
  CHECK(cfg.spec.m == 3);
  cli::apply_algebra_text(cfg, "gl");
  CHECK(cfg.spec.flavor == Flavor::gl);
  CHECK(cfg.spec.m == 3);
  cli::apply_algebra_text(cfg, "sl(1/2)");
  CHECK(cfg.spec.name() == "sl(1|2)");
}

TEST_CASE("artifacts are byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"twist", "--algebra", "gl(2|1)", "--labels", "1", "--nu", "1,2"},
        std::vector<std::string>{"typicality", "--algebra", "sl(3|1)", "--labels", "1,0"},
        std::vector<std::string>{"heisenberg", "--algebra", "sl(2|1)", "--b", "5/7"}}) {
    auto a = args, b = args;
    a.insert(a.end(), {"--out", tmp("a.json"), "--report", tmp("ra.json")});
    b.insert(b.end(), {"--out", tmp("b.json"), "--report", tmp("rb.json")});
    const auto ra = run(a), rb = run(b);
    CHECK(ra.code == 0);
    CHECK(ra.out == rb.out);
    CHECK(slurp(tmp("a.json")) == slurp(tmp("b.json")));
    CHECK(slurp(tmp("ra.json")) == slurp(tmp("rb.json")));
  }
  for (const auto* f : {"a.json", "b.json", "ra.json", "rb.json"}) std::remove(tmp(f).c_str());
}
