#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "leavitt/cli.hpp"

using namespace leavitt;

namespace {

std::string substitute(std::string s) {
  const std::string key = "GOLDEN";
  for (auto pos = s.find(key); pos != std::string::npos;
       pos = s.find(key, pos + 1))
    s.replace(pos, key.size(), GOLDEN_DIR);
  return s;
}

nlohmann::json parse_output(const CliOutcome &out) {
  return nlohmann::json::parse(out.output);
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string &contents)
      : path(std::filesystem::temp_directory_path() /
             ("leavitt_cli_" + std::to_string(std::rand()) + ".cfg")) {
    std::ofstream(path) << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("golden command outputs") {
  std::ifstream in(std::string(GOLDEN_DIR) + "/cli_cases.json");
  REQUIRE(in);
  auto cases = nlohmann::json::parse(in);
  REQUIRE(cases.size() > 20);
  for (const auto &c : cases) {
    std::vector<std::string> args;
    for (const auto &a : c["args"])
      args.push_back(substitute(a.get<std::string>()));
    CAPTURE(c["args"].dump());
    CliOutcome out = run_cli(args);
    CHECK(out.exit_code == c["exit"].get<int>());
    CHECK(out.output == substitute(c["stdout"].get<std::string>()));
  }
}

TEST_CASE("every reply has the same envelope") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"simple"}, {"nf", "x1 +"}, {"nf", "x9"},
        {"grid", "--chars", "5", "--n-range", "6", "--d-range", "5:6"}}) {
    CliOutcome out = run_cli(args);
    auto j = parse_output(out);
    REQUIRE(j.is_object());
    CHECK(j.contains("ok"));
    CHECK(j.contains("result"));
    CHECK(j["ok"].get<bool>() == (out.exit_code == 0));
    if (out.exit_code != 0)
      CHECK(j["reason"].is_string());
  }
}

TEST_CASE("configuration precedence") {
  // defaults: n=2, d=1, char=0, leavitt
  CHECK(parse_output(run_cli({"nf", "x2*y2"}))["result"] == "1 - x[1]*y[1]");

  TempFile cfg("# defaults\nn = 3\nchar=2\nmode=cohn\n");
  auto out = run_cli({"--config", cfg.path.string(), "nf", "x3*y3"});
  CHECK(parse_output(out)["result"] == "x[3]*y[3]");
  out = run_cli({"--config", cfg.path.string(), "--mode", "leavitt", "nf",
                 "x3*y3"});
  CHECK(parse_output(out)["result"] == "1 + x[1]*y[1] + x[2]*y[2]");

  CliEnvironment env{"5"};
  CHECK(parse_output(run_cli({"nf", "1/2"}, env))["result"] == "3");
  CHECK(parse_output(run_cli({"nf", "1/2", "--char", "7"}, env))["result"] ==
        "4");
  CHECK(parse_output(run_cli({"--config", cfg.path.string(), "trace", "1"},
                             env))["result"] == "1 mod 2");

  TempFile bad("n: 3\n");
  CHECK(run_cli({"--config", bad.path.string(), "simple"}).exit_code == 2);
  TempFile unknown("colour=3\n");
  CHECK(run_cli({"--config", unknown.path.string(), "simple"}).exit_code == 2);
  CHECK(run_cli({"--config", "/nonexistent/leavitt.cfg", "simple"}).exit_code == 1);
  CHECK(run_cli({"simple"}, CliEnvironment{"6"}).exit_code == 1);
}

TEST_CASE("witness output verifies and re-reads") {
  auto j = parse_output(run_cli({"witness", "--n", "4", "--d", "3", "--char", "3",
                                 "--verify"}));
  CHECK(j["ok"] == true);
  CHECK(j["result"]["verified"] == true);
  CHECK(j["result"]["case"] == "CharDividesD");
  CHECK(j["result"]["pairs"].size() == 2);
}

TEST_CASE("pretty output is plain text") {
  CliOutcome out = run_cli({"nf", "x2*y2", "--pretty"});
  CHECK(out.exit_code == 0);
  CHECK(out.output == "1 - x[1]*y[1]\n");
  out = run_cli({"nf", "x2 y2", "--pretty"});
  CHECK(out.exit_code == 2);
  CHECK(out.output.rfind("error: ", 0) == 0);
}

TEST_CASE("the executable propagates exit codes") {
  auto run = [](const std::string &args, const std::string &env = "") {
    std::string cmd = env + " " + std::string(LEAVITT_BIN) + " " + args + " 2>&1";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string text;
    char buf[256];
    while (std::fgets(buf, sizeof buf, pipe))
      text += buf;
    int status = pclose(pipe);
    return std::pair{WEXITSTATUS(status), text};
  };
  auto [code, text] = run("simple --n 3 --d 1 --char 2");
  CHECK(code == 0);
  CHECK(text == "{\"ok\":true,\"result\":{\"simple\":true,\"reason\":"
                "\"CharDividesN1AndNotD\"}}\n");
  CHECK(run("trace x1").first == 1);
  CHECK(run("nf 'x1 y2'").first == 2);
  CHECK(run("unknown-command").first == 2);
  CHECK(run("--help").first == 0);
  CHECK(run("nf 1/2", "LEAVITT_CHAR=5").second ==
        "{\"ok\":true,\"result\":\"3\"}\n");
}
