#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "cartankit/corpus.hpp"
#include "cartankit/json_io.hpp"

using namespace cartankit;
using io::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

fs::path workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("cartankit_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

void write(const std::string& name, const std::string& text) { std::ofstream(workdir() / name) << text; }

void write(const std::string& name, const json& j) { write(name, j.dump()); }

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = "cd '" + workdir().string() + "' && " + env + " '" CARTANKIT_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json parsed(const Run& r) { return json::parse(r.out); }

struct Files {
  Files() {
    write("sl2.json", io::to_json(corpus::group("sl2").lie()));
    write("heis_gens.json", io::to_json(LieAlgebra::from_matrices(3, {Mat::unit(3, 0, 1), Mat::unit(3, 1, 2)})));
    write("diag2.json", io::to_json(Mat::diag({2, Scalar(Rational(1, 2))})));
    write("w.json", io::to_json(Mat::from_rows({{0, 1}, {-1, 0}})));
    write("u.json", io::to_json(Mat::from_rows({{1, 1}, {0, 1}})));
    write("torus_group.json", io::to_json(corpus::group("torus2")));
    write("h_rot.json", json{{"vectors", {{"0", "1", "-1"}}}});
    write("h_bad.json", json{{"vectors", {{"0", "1", "-2"}}}});
    write("broken.json", std::string("{\"rows\": 2,"));
  }
};

const Files files;

}  // namespace

TEST_CASE("lie subcommand") {
  Run r = run("lie sl2.json --rank");
  CHECK(r.code == 0);
  CHECK(parsed(r)["rank"] == 1);
  CHECK(parsed(r)["seed"] == 0);

  r = run("lie heis_gens.json --nilpotent");
  CHECK(parsed(r)["nilpotent"] == true);
  r = run("lie sl2.json --roots 0 --real-output");
  CHECK(r.code == 0);
  CHECK(parsed(r)["roots"].size() == 3);
  CHECK(parsed(r)["roots"][0]["values"] == json::array({"-2"}));
  r = run("lie sl2.json --roots h_rot.json");
  CHECK(parsed(r)["roots"][0]["values"][0]["im"] == "-2");
  r = run("lie sl2.json --g0 1");
  CHECK(parsed(r)["dim"] == 3);
  r = run("lie sl2.json --cartan --seed 5");
  CHECK(parsed(r)["dim"] == 1);
  CHECK(parsed(r)["seed"] == 5);
  r = run("lie sl2.json --series");
  CHECK(parsed(r)["derived_dims"] == json::array({3}));
}

TEST_CASE("emitted subspaces reload to equal objects") {
  Run r = run("lie sl2.json --normalizer 1");
  REQUIRE(r.code == 0);
  write("n.json", parsed(r)["normalizer"]);
  Run again = run("lie sl2.json --normalizer n.json");
  CHECK(parsed(again)["normalizer"] == parsed(r)["normalizer"]);
  CHECK(io::subspace_from_json(parsed(r)["normalizer"]) == Subspace::span(3, {{1, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("grp subcommand") {
  Run r = run("grp --corpus sl2 --element diag2.json --acoeffs --real-output");
  CHECK(r.code == 0);
  CHECK(parsed(r)["a"] == json::array({"0", "-9/4", "-9/4", "1"}));
  r = run("grp --corpus sl2 --element w.json --r");
  CHECK(parsed(r)["r"] == 1);
  r = run("grp --corpus sl2 --element w.json --in-c h_rot.json");
  CHECK(parsed(r)["in_c"] == true);
  r = run("grp --corpus sl2 --element w.json --in-c 0");
  CHECK(parsed(r)["in_c"] == false);
  r = run("grp --corpus sl2 --element u.json --regular");
  CHECK(parsed(r)["regular"] == false);
  r = run("grp --corpus sl2 --element w.json --root-action 0");
  CHECK(parsed(r)["permutation"] == json::array({2, 1, 0}));
  r = run("grp torus_group.json --element diag2.json --g1");
  CHECK(parsed(r)["dim"] == 2);
}

TEST_CASE("exit codes") {
  CHECK(run("grp torus_group.json --element w.json --validate").code == 1);
  CHECK(run("grp --corpus sl2 --element w.json --validate").code == 0);
  CHECK(run("grp --corpus sl2 --element broken.json --r").code == 2);
  CHECK(run("grp --corpus nope --element w.json --r").code == 2);
  CHECK(run("grp --corpus sl2 --element diag2.json --r --g1").code == 2);
  CHECK(run("lie missing.json --rank").code == 2);
  CHECK(run("lie sl2.json --roots 7").code == 2);
  CHECK(run("lie sl2.json --bogus").code == 2);
  CHECK(run("verify --check C99").code == 2);
  Run split = run("lie sl2.json --roots h_bad.json");
  CHECK(split.code == 3);
  CHECK(parsed(split)["error"] == "split_failure");
}

TEST_CASE("seeds and verify") {
  CHECK(parsed(run("lie sl2.json --rank", "CARTANKIT_SEED=9"))["seed"] == 9);
  CHECK(parsed(run("lie sl2.json --rank --seed 4", "CARTANKIT_SEED=9"))["seed"] == 4);
  CHECK(run("lie sl2.json --rank", "CARTANKIT_SEED=abc").code == 2);
  Run r = run("verify --check C4 --seed 7");
  CHECK(r.code == 0);
  CHECK(parsed(r)["outcome"] == "pass");
  CHECK(parsed(r)["seed"] == 7);
  Run a = run("verify --check C9 --seed 2 --canonical");
  Run b = run("verify --check C9 --seed 2 --canonical");
  CHECK(a.out == b.out);
  Run list = run("corpus --list");
  CHECK(parsed(list)["corpus"].size() == corpus::names().size());
}
