#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MONOBOX_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("color2") {
  const Run r = run("color2 --point 0,0");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["color"] == json::array({0, 0}));
  CHECK(json::parse(run("color2 --point=0,1").out)["color"] == json::array({3, 0}));
  CHECK(run("color2 --point 1").code == 1);
  CHECK(run("color2 --point a,b").code == 1);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("net").code == 1);
  CHECK(run("net --n 5").code == 1);
  CHECK(run("check --config does-not-exist.json").code == 1);
  CHECK(run("separation --scale 3.3 --half-width 2/5 --radius-sq 4").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("separation") {
  const Run pass = run("separation --scale 10/3 --half-width 2/5 --radius-sq 4");
  CHECK(pass.code == 0);
  const json j = json::parse(pass.out);
  CHECK(j["verdict"] == "PASS");
  bool saw_center = false;
  for (const auto& c : j["cells"]) {
    if (c["offset"] == json::array({0, 0})) {
      saw_center = true;
      CHECK(c["max_dist_sq"] == "32/9");
      CHECK(c["verdict"] == "inside");
    }
  }
  CHECK(saw_center);
  const Run fail = run("separation --scale 10/3 --half-width 49/100 --radius-sq 4");
  CHECK(fail.code == 2);
  CHECK(json::parse(fail.out)["verdict"] == "FAIL");
}

TEST_CASE("check exit codes") {
  write_file("cli_square.json", R"({"type":"rectangle2d","params":{"z":[9.5,9.5],"u":[1,0],"v":[0,1]}})");
  const Run plane = run("check --config cli_square.json");
  CHECK(plane.code == 0);
  const json j = json::parse(plane.out);
  CHECK(j["monochromatic"] == false);
  CHECK(j["hypothesis_satisfied"] == true);
  // Round trip of the echoed configuration.
  write_file("cli_echo.json", j["config"].dump());
  CHECK(run("check --config cli_echo.json").code == 0);

  const Run broken = run("check --config cli_square.json --coloring quadrant4");
  CHECK(broken.code == 2);
  CHECK(json::parse(broken.out)["monochromatic"] == true);

  write_file("cli_big.json", R"({"type":"rectangle2d","params":{"z":[9.5,9.5],"u":[1,0],"v":[0,2]}})");
  CHECK(run("check --config cli_big.json --coloring quadrant4").code == 0);

  write_file("cli_box.json", R"({"type":"box","params":{"q":[0.3,4],"a":[4,0.25]}})");
  const Run box = run("check --config cli_box.json");
  CHECK(box.code == 0);
  CHECK(json::parse(box.out)["fast_path"] == true);

  write_file("cli_bad.json", R"({"type":"box","params":{"q":[0,0]}})");
  CHECK(run("check --config cli_bad.json").code == 1);
  write_file("cli_garbage.json", "{not json");
  CHECK(run("check --config cli_garbage.json").code == 1);
}

TEST_CASE("search") {
  const Run ok = run("search --mode rect2d --trials 2000 --seed 7 --coloring plane25 --threads 2");
  CHECK(ok.code == 0);
  const json j = json::parse(ok.out);
  CHECK(j["counterexamples"] == 0);
  CHECK(j["verdict"] == "OK");

  const Run hit = run("search --mode rect2d --trials 100 --seed 7 --coloring quadrant4 --stop-on-first --csv cli_report.csv");
  CHECK(hit.code == 2);
  CHECK(read_file("cli_report.csv").rfind("mode,coloring", 0) == 0);

  const Run adv = run("search --mode rect2d --adversarial --restarts 5 --steps 100 --seed 3");
  CHECK(adv.code == 0);
  CHECK(json::parse(adv.out)["score_monotone"] == true);

  CHECK(run("search --mode cube --trials 10").code == 1);
  CHECK(run("search --mode box-nd --n 2 --coloring plane25 --trials 10").code == 0);
  CHECK(run("search --mode box-nd --n 3 --coloring plane25 --trials 10").code == 1);
}

TEST_CASE("colorn, net and identity") {
  const Run c = run("colorn --n 2 --point 1,1");
  CHECK(c.code == 0);
  const json j = json::parse(c.out);
  CHECK(j["m"] == 202);
  CHECK(j["first_entries"].size() == 8);
  CHECK(j["digest"].get<std::string>().size() == 32);
  CHECK(run("colorn --n 3 --point 1,1").code == 1);
  CHECK(json::parse(run("colorn --n 3 --point 1,1,1 --eps sharp --skip-digest").out).contains("first_entries"));

  const Run n = run("net --n 2 --eps paper --samples 1000");
  CHECK(n.code == 0);
  CHECK(json::parse(n.out)["m"] == 202);

  const Run id = run("identity --n 3 --trials 100 --exact");
  CHECK(id.code == 0);
  CHECK(json::parse(id.out)["subset_sum"]["mismatches"] == 0);
}

TEST_CASE("plot-boundaries") {
  const Run svg = run("plot-boundaries --window=-3,-3,3,3 --range=-6,6 --out cli_curves.svg");
  CHECK(svg.code == 0);
  const std::string text = read_file("cli_curves.svg");
  CHECK(text.rfind("<?xml", 0) == 0);
  CHECK(text.find("</svg>") != std::string::npos);
  CHECK(run("plot-boundaries --out cli_curves.csv").code == 0);
  CHECK(read_file("cli_curves.csv").rfind("family,parameter,x,y", 0) == 0);
  CHECK(run("plot-boundaries --out cli_curves.png").code == 1);
}
