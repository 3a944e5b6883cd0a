#include <doctest.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "commands.hpp"
#include "helpers.hpp"
#include "ybmap/json_codec.hpp"

using namespace ybmap;
using ybmap::testing::max_abs_diff;
using ybmap::testing::real_matrix;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ybmap");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(YBMAP_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("collide reproduces the worked projector example") {
  const Outcome r = run_cli({"collide", fixture("collide_projector_worked.json")});
  REQUIRE(r.code == 0);
  const auto doc = ybmap::json::parse(r.out, "stdout");
  const ProjectorState q1 = ybmap::json::decode_projector(doc["first"]["projector"], "first");
  const ProjectorState q2 = ybmap::json::decode_projector(doc["second"]["projector"], "second");
  CHECK(max_abs_diff(q1.matrix(), real_matrix({{1, 0}, {1, 0}})) < 1e-14);
  CHECK(max_abs_diff(q2.matrix(), real_matrix({{0, 0}, {-2, 1}})) < 1e-14);
  CHECK(doc["certificate"]["residual"].get<double>() < 1e-9);
  CHECK(doc["certificate"]["seed"] == 0);
}

TEST_CASE("collide output feeds back into collide") {
  for (const char* name : {"collide_vector_worked.json", "collide_projector_worked.json",
                           "collide_grassmannian_worked.json"}) {
    CAPTURE(name);
    const Outcome first = run_cli({"collide", fixture(name)});
    REQUIRE(first.code == 0);
    const auto doc = ybmap::json::parse(first.out, "stdout");
    if (doc["family"] == "vector") {
      const Polarization a = ybmap::json::decode_polarization(doc["first"], "first");
      const Polarization b = ybmap::json::decode_polarization(doc["second"], "second");
      CHECK_NOTHROW(validate(a));
      CHECK_NOTHROW(validate(b));
      CHECK(max_abs_diff(a.xi.values(), ybmap::testing::column({1, 1})) < 1e-15);
      CHECK(max_abs_diff(b.eta.values(), ybmap::testing::column({-2, 1})) < 1e-15);
    }
    // Applying the reverse map brings the inputs back.
    auto swapped = doc;
    swapped["first"] = doc["second"];
    swapped["second"] = doc["first"];
    const std::string path = std::string("cli_roundtrip_") + name;
    {
      std::ofstream f(path);
      f << swapped.dump();
    }
    const Outcome back = run_cli({"collide", path});
    REQUIRE(back.code == 0);
    const auto restored = ybmap::json::parse(back.out, "stdout");
    const auto original = ybmap::json::parse(
        [&] {
          std::ifstream in(fixture(name));
          return std::string(std::istreambuf_iterator<char>(in), {});
        }(),
        name);
    if (doc["family"] == "projector") {
      const auto p = ybmap::json::decode_projector(restored["second"]["projector"], "p");
      const auto q = ybmap::json::decode_projector(original["first"]["projector"], "q");
      CHECK(max_abs_diff(p.matrix(), q.matrix()) < 1e-13);
    } else if (doc["family"] == "grassmannian") {
      const auto p = ybmap::json::decode_subspace(restored["first"]["subspace"], "p");
      const auto q = ybmap::json::decode_subspace(original["second"]["subspace"], "q");
      CHECK(same_subspace(p, q, 1e-13));
    }
  }
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"frobnicate"}).code == 1);
  const Outcome collision = run_cli({"collide", fixture("collide_collision.json")});
  CHECK(collision.code == 2);
  CHECK(collision.err.find("parameter collision") != std::string::npos);
  CHECK(collision.out.empty());
  CHECK(run_cli({"collide", fixture("collide_truncated.json")}).code == 1);
  CHECK(run_cli({"verify", "--family", "scalar"}).code == 1);
  CHECK(run_cli({"kdv", fixture("kdv_amplitude_2p.json")}).code == 3);
  CHECK(run_cli({"transfer", fixture("chain_collision.json")}).code == 2);
}

TEST_CASE("verify echoes its configuration") {
  const Outcome r = run_cli({"verify", "--family", "vector", "--trials", "1", "--seed", "7"});
  REQUIRE(r.code == 0);
  const auto doc = ybmap::json::parse(r.out, "stdout");
  CHECK(doc["seed"] == 7);
  CHECK(doc["yang_baxter"]["tol"] == 1e-9);
  CHECK(doc["reversibility"]["tol"] == 1e-10);
  CHECK(doc["yang_baxter"]["trials"] == 1);
  CHECK_FALSE(doc["yang_baxter"].contains("runtime_ms"));
  CHECK(run_cli({"verify", "--family", "vector", "--trials", "1", "--seed", "7"}).out == r.out);

  const Outcome timed = run_cli({"verify", "--family", "vector", "--trials", "1", "--timing", "--check", "yang-baxter"});
  const auto t = ybmap::json::parse(timed.out, "stdout");
  CHECK(t["yang_baxter"].contains("runtime_ms"));
  CHECK_FALSE(t.contains("reversibility"));
}

TEST_CASE("transfer writes one line per step and a summary") {
  const Outcome r = run_cli({"transfer", fixture("chain_fixed_point.json"), "--steps", "10"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int steps = 0;
  nlohmann::json last;
  while (std::getline(in, line)) {
    last = nlohmann::json::parse(line);
    if (!last.contains("summary")) {
      CHECK(last["step"] == steps);
      CHECK(last["max_drift"].get<double>() < 1e-13);
      ++steps;
    }
  }
  CHECK(steps == 11);
  CHECK(last["summary"]["steps"] == 10);
  CHECK(last["summary"]["passed"] == true);
  CHECK_NOTHROW(ybmap::json::decode_chain(last["summary"]["final_chain"], "final_chain"));
}

TEST_CASE("kdv reports") {
  const Outcome zero = run_cli({"kdv", fixture("kdv_lambda_zero.json")});
  REQUIRE(zero.code == 0);
  CHECK(ybmap::json::parse(zero.out, "stdout")["max_residual"] == 0.0);

  const Outcome control = run_cli({"kdv", fixture("kdv_amplitude_2p.json")});
  CHECK(control.code == 3);
  CHECK(ybmap::json::parse(control.out, "stdout")["max_residual"].get<double>() > 1e-2);
}
