#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "affweyl/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using affweyl::run_cli;
using nlohmann::json;

namespace {

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::stringstream out, err;
  std::streambuf* ob = std::cout.rdbuf(out.rdbuf());
  std::streambuf* eb = std::cerr.rdbuf(err.rdbuf());
  int code;
  try {
    code = run_cli(args);
  } catch (...) {
    std::cout.rdbuf(ob);
    std::cerr.rdbuf(eb);
    throw;
  }
  std::cout.rdbuf(ob);
  std::cerr.rdbuf(eb);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

json jrun(const std::vector<std::string>& args, int expected_code = 0) {
  std::string out;
  int code = run(args, &out);
  REQUIRE(code == expected_code);
  REQUIRE(!out.empty());
  return json::parse(out);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

TEST_CASE("element: identity echoes zero invariants") {
  json j = jrun({"element", "--type", "A1", "--element", "{}"});
  CHECK(j["length"] == 0);
  CHECK(j["newton"] == json::array({"0/1"}));
  CHECK(j["kottwitz"] == json::array());
  CHECK(j["key"] == "l:0;u:");
  CHECK(j["element"]["lambda"] == json::array({0}));
  CHECK(j["element"]["u_word"] == json::array());
}

TEST_CASE("element: literal forms multiply out to the same element") {
  json a = jrun({"element", "--type", "A1", "--element", R"({"lambda":[-2],"u":[0]})"});
  json b = jrun({"element", "--type", "A1", "--element", R"({"omega":0,"word":[0,1,0]})"});
  CHECK(a["key"] == b["key"]);
  CHECK(a["length"] == 3);
  // x = t^{-2a^vee} s squares to the identity, so its own class is basic
  CHECK(a["newton"] == json::array({"0/1"}));
  CHECK(a["class_key"] == "nu:[0/1];k:[]");

  // Kottwitz coordinates appear on a datum with a nontrivial quotient.
  json c = jrun({"element", "--type", "GL2", "--element", R"({"lambda":[1,0]})"});
  CHECK(c["kottwitz"] == json::array({1}));
  CHECK(c["newton"] == json::array({"1/1", "0/1"}));
}

TEST_CASE("element: length-zero representatives are addressable by index") {
  json j = jrun({"element", "--type", "GL2", "--element", R"({"omega":1})"});
  CHECK(j["length"] == 0);
  std::string err;
  CHECK(run({"element", "--type", "GL2", "--element", R"({"omega":99})"}, nullptr, &err) == 2);
  CHECK(err.find("omega") != std::string::npos);
}

TEST_CASE("bgx: the length-3 rank-one fixture prints both classes") {
  json j = jrun({"bgx", "--type", "A1", "--lattice", "sc", "--element",
                 R"({"lambda":[-2],"u":[0]})"});
  CHECK(j["length"] == 3);
  REQUIRE(j["classes"].size() == 2);
  CHECK(j["classes"][0]["nu"] == json::array({"0/1"}));
  CHECK(j["classes"][0]["poly"] == "q");
  CHECK(j["classes"][0]["dim"] == 2);
  CHECK(j["classes"][1]["nu"] == json::array({"1/1"}));
  CHECK(j["classes"][1]["poly"] == "q-1");
  CHECK(j["classes"][1]["dim"] == 1);
  CHECK(j["generic"] == j["classes"][1]["key"]);
}

TEST_CASE("classpoly: same classes, polynomials only") {
  json j = jrun({"classpoly", "--type", "A1", "--element", R"({"lambda":[-2],"u":[0]})"});
  REQUIRE(j["classes"].size() == 2);
  CHECK(j["classes"][0]["poly"] == "q");
  CHECK(j["classes"][1]["poly"] == "q-1");
  CHECK_FALSE(j["classes"][0].contains("dim"));
}

TEST_CASE("alcoves: diagnostics cover every candidate pair") {
  json j = jrun({"alcoves", "--type", "A1", "--element", R"({"lambda":[1]})"});
  REQUIRE(j["pairs"].size() == 3);  // (emptyset, e), (emptyset, s), (Delta, e)
  CHECK(j["passing"] == 2);
  int passing = 0;
  for (const auto& row : j["pairs"]) {
    if (row["pass"].get<bool>()) {
      ++passing;
      CHECK(row.contains("conjugated"));
    } else {
      CHECK(row["witness_root"].is_array());
    }
  }
  CHECK(passing == 2);
}

TEST_CASE("verify: clean sweep exits zero with canonically ordered checks") {
  std::string out;
  int code = run({"verify", "--type", "A1", "--max-length", "3", "--checks", "lim,theorem1"},
                 &out);
  CHECK(code == 0);
  json j = json::parse(out);
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["name"] == "theorem1");
  CHECK(j["checks"][1]["name"] == "lim");
  CHECK(j["elements_swept"] == 7);
  CHECK(j["config"]["max_length"] == 3);
}

TEST_CASE("tsv output renders tables") {
  std::string out;
  REQUIRE(run({"element", "--type", "A1", "--format", "tsv", "--element", "{}"}, &out) == 0);
  CHECK(out.find("key\tlength\tnewton\tkottwitz") == 0);
  CHECK(out.find("l:0;u:\t0\t0/1\t-") != std::string::npos);

  REQUIRE(run({"bgx", "--type", "A1", "--format", "tsv", "--element",
               R"({"lambda":[-2],"u":[0]})"},
              &out) == 0);
  CHECK(out.find("newton\tkottwitz\tpoly\tdim") == 0);
  CHECK(out.find("q-1") != std::string::npos);

  REQUIRE(run({"verify", "--type", "A1", "--max-length", "2", "--format", "tsv"}, &out) == 0);
  CHECK(out.find("check\tpass\tcounterexamples") != std::string::npos);
  CHECK(out.find("theorem1\t1\t0") != std::string::npos);
  CHECK(out.find("# elements_swept=5") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  std::string err;
  CHECK(run({"frobnicate"}, nullptr, &err) == 2);
  CHECK(run({}, nullptr, &err) == 2);
  CHECK(run({"element", "--type", "A1"}, nullptr, &err) == 2);  // missing --element
  CHECK(run({"element", "--type", "A1", "--element", "{oops"}, nullptr, &err) == 2);
  CHECK(run({"element", "--type", "A1", "--element", R"({"mu":[1]})"}, nullptr, &err) == 2);
  CHECK(run({"element", "--type", "A1", "--element", R"({"lambda":[1,2]})"}, nullptr, &err) == 2);
  CHECK(run({"element", "--type", "A1", "--element", R"({"u":[7]})"}, nullptr, &err) == 2);
  CHECK(run({"element", "--type", "A1", "--element", R"({"lambda":["x"]})"}, nullptr, &err) == 2);
  CHECK(run({"element", "--type", "A1", "--sigma", "a,b", "--element", "{}"}, nullptr, &err) == 2);
  CHECK(run({"element", "--type", "C2", "--sigma", "1,0", "--element", "{}"}, nullptr, &err) == 2);
  CHECK(run({"element", "--type", "A1", "--format", "xml", "--element", "{}"}, nullptr, &err) ==
        2);
  CHECK(run({"verify", "--type", "A1", "--checks", "bogus"}, nullptr, &err) == 2);
  CHECK(run({"verify", "--type", "A1xA1", "--checks", "lim"}, nullptr, &err) == 2);
  CHECK(run({"verify", "--type", "A1", "--max-length", "-3"}, nullptr, &err) == 2);
}

TEST_CASE("help exits zero") {
  std::string out;
  CHECK(run({"--help"}, &out) == 0);
  CHECK(run({"verify", "--help"}, &out) == 0);
}

TEST_CASE("config files supply flags as key=value lines") {
  const std::string path = "cli_config_test.cfg";
  write_file(path,
             "# sweep settings\n"
             "type = A1\n"
             "max-length = 3\n"
             "checks = lim\n");
  std::string out;
  int code = run({"verify", "--config", path}, &out);
  CHECK(code == 0);
  json j = json::parse(out);
  CHECK(j["config"]["max_length"] == 3);
  CHECK(j["config"]["checks"] == json::array({"lim"}));
  CHECK(j["elements_swept"] == 7);

  write_file(path, "no equals sign here\n");
  std::string err;
  CHECK(run({"verify", "--config", path}, nullptr, &err) == 2);
  CHECK(run({"verify", "--config", "does_not_exist.cfg"}, nullptr, &err) == 2);
  std::remove(path.c_str());
}

TEST_CASE("bgx cache files persist between invocations") {
  const std::string path = "cli_cache_test.jsonl";
  std::remove(path.c_str());
  std::vector<std::string> args = {"bgx",       "--type", "A2",
                                   "--element", R"({"lambda":[1,1]})", "--cache", path};
  std::string first, second;
  REQUIRE(run(args, &first) == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header.find("fingerprint") != std::string::npos);
  REQUIRE(run(args, &second) == 0);
  CHECK(first == second);
  std::remove(path.c_str());
}
