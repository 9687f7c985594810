#include "doctest.h"

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json body() const { return json::parse(out); }
};

std::string data(const std::string& name) { return std::string(ROPEN_TEST_DATA) + "/" + name; }

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = ropen::cli::run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("equiv") {
  const auto r = run({"equiv", data("interval.json"), data("cantor.json")});
  CHECK(r.code == 0);
  CHECK(r.body()["equivalent"] == true);
  const auto n = run({"equiv", data("interval.json"), data("interval_point.json")});
  CHECK(n.code == 1);
  CHECK(n.body()["right"]["isol_card"] == "1");
  CHECK(run({"equiv", data("unit.json"), data("interval.json")}).code == 0);
}

TEST_CASE("cover check") {
  const auto tent = run({"cover", "check", data("tent.json"), "--samples", "50"});
  CHECK(tent.code == 1);
  CHECK(tent.body()["irreducible"] == false);
  CHECK(tent.body()["witness"] == "(3/4,1)");
  CHECK(run({"cover", "check", "--map", data("identity.json"), "--samples", "50"}).code == 0);
  CHECK(run({"cover", "check", data("binary.json"), "--samples", "50"}).code == 0);
}

TEST_CASE("cover psi and phi") {
  const auto p = run({"cover", "psi", "--map", data("halve.json"), "--region", data("half_open.json")});
  CHECK(p.code == 0);
  CHECK(p.body()["result"]["text"] == "[0,1/4)");
  const auto f = run({"cover", "phi", "--map", data("halve.json"), "--region", data("half_open.json")});
  CHECK(f.code == 0);
  CHECK(f.body()["result"]["text"] == "[0,1)");
}

TEST_CASE("cantor commands") {
  const auto psi = run({"cantor", "psi", data("mid_words.json")});
  CHECK(psi.code == 0);
  CHECK(psi.body()["result"]["text"] == "(1/4,3/4)");
  const auto c = run({"cantor", "check", "--depth", "4", "--samples", "30"});
  CHECK(c.code == 0);
  CHECK(c.body()["cylinders"]["checked"] == 30);
  CHECK(run({"cantor", "psi", data("unit.json")}).code == 2);
}

TEST_CASE("gleason") {
  const auto g = run({"gleason", "--points", "3"});
  CHECK(g.code == 0);
  CHECK(g.body()["report"]["irreducible"] == true);
  CHECK(run({"gleason", "--points", "0"}).code == 2);
  CHECK(run({"gleason", "--points", "40"}).code == 2);
}

TEST_CASE("region eval") {
  const auto r = run({"region", "eval", "--space", data("unit.json"), "--expr", "reg(I(0,1/2))"});
  CHECK(r.code == 0);
  CHECK(r.body()["regular_open"] == true);
  const auto b = run({"region", "eval", "--space", data("unit.json"), "--expr", "int(cl(x))", "--region",
                      "x=" + data("half_open.json")});
  CHECK(b.code == 0);
  CHECK(b.body()["text"] == "[0,1/2)");
  const auto s = run({"region", "eval", "--space", data("unit.json"), "--expr", "join(x,"});
  CHECK(s.code == 2);
  CHECK(s.body()["error"] == "SyntaxError");
  CHECK(s.body()["at"]["column"] == 8);
  CHECK(s.body().contains("expected"));
  CHECK(run({"region", "eval", "--space", data("unit.json"), "--expr", "cl(x)"}).code == 2);
}

TEST_CASE("ideal commands") {
  const auto m = run({"ideal", "member", "--ideal", data("mid_ideal.json"), "--func", data("hat.json")});
  CHECK(m.code == 0);
  CHECK(m.body()["member"] == true);
  const auto u = run({"ideal", "upsilon", "--ideal", data("mid_ideal.json"), "--map", data("binary.json")});
  CHECK(u.code == 0);
  CHECK(u.body()["support"]["words"] == json::array({"01", "10"}));
  CHECK(run({"ideal", "upsilon", "--ideal", data("mid_ideal.json"), "--map", data("tent.json")}).code == 1);
  CHECK(run({"ideal", "essential", "--map", data("tent.json")}).code == 1);
  CHECK(run({"ideal", "essential", "--map", data("identity.json")}).code == 0);
}

TEST_CASE("compose") {
  const auto c = run({"compose", "--map", data("identity.json"), "--map", data("identity.json"), "--samples", "20"});
  CHECK(c.code == 0);
  CHECK(run({"compose", "--map", data("identity.json"), "--map", data("halve.json")}).code == 2);
  CHECK(run({"compose", "--map", data("tent.json"), "--map", data("identity.json")}).code == 1);
}

TEST_CASE("input errors") {
  const auto missing = run({"space", "info", "--space", data("nope.json")});
  CHECK(missing.code == 2);
  CHECK(missing.body()["error"] == "InvalidInput");
  CHECK_FALSE(missing.err.empty());
  CHECK(run({"space", "info", "--space", data("bad_syntax.json")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"cover", "check", data("tent.json"), "--samples", "0"}).code == 2);
}

TEST_CASE("same arguments give identical output") {
  const std::vector<std::string> args{"cantor", "check", "--depth", "5", "--samples", "40", "--seed", "17"};
  CHECK(run(args).out == run(args).out);
}
