#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "adjunct/io.hpp"

using adjunct::io::ordered_json;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

const std::string kData = ADJUNCT_DATA_DIR;

Result run(const std::string& args) {
  const std::string cmd = std::string(ADJUNCT_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

ordered_json run_json(const std::string& args) {
  const auto r = run(args);
  REQUIRE(r.status == 0);
  return ordered_json::parse(r.out);
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("gaft prints the left adjoint table") {
  const auto j = run_json("gaft --functor " + data("g_chain3_two.json"));
  CHECK(j.begin().key() == "verdict");
  CHECK(j["verdict"] == true);
  CHECK(j["left_adjoint"]["obj_map"] == ordered_json{{"0", "0"}, {"1", "1"}});
  CHECK(j["verification"]["ok"] == true);
  CHECK(j["hypotheses_consulted"] == false);

  // picking 0 in two: nothing maps 1 -> 0, so the comma under 1 is empty
  const std::string pick0 = "/tmp/adjunct_cli_pick0.json";
  std::ofstream(pick0) << R"({"source": ")" << data("terminal.json") << R"(", "target": ")" << data("two.json")
                       << R"(", "obj_map": {"*": "0"}})";
  const auto none = run_json("gaft --functor " + pick0);
  std::remove(pick0.c_str());
  CHECK(none["verdict"] == false);
  CHECK(none["witness_failure"]["object"] == "1");
}

TEST_CASE("brute-force adjoint agrees and honours bounds") {
  const auto j = run_json("adjoint --functor " + data("g_chain3_two.json"));
  CHECK(j["verdict"] == true);
  CHECK(j["adjoint_count"] == 1);
  CHECK(run("adjoint --functor " + data("g_chain3_two.json") + " --oracle-bounds 1,1").status == 1);
  CHECK(run("adjoint --functor " + data("g_chain3_two.json") + " --oracle-bounds x").status == 2);
}

TEST_CASE("classify pz2") {
  const auto j = run_json("classify --gcat " + data("pz2.json") + " --object x");
  CHECK(j["verdict"]["initial"] == false);
  CHECK(j["verdict"]["h_initial"] == true);
  const auto& to_y = j["mapping_invariants"][1];
  CHECK(to_y["to"] == "y");
  CHECK(to_y["components"] == 1);
  CHECK(to_y["automorphism_orders"] == ordered_json::array({2}));
}

TEST_CASE("tau1 of the boundary") {
  const auto j = run_json("tau1 --sset " + data("boundary2.json"));
  int hom02 = 0;
  for (const auto& m : j["category"]["morphisms"]) hom02 += m["src"] == "0" && m["dst"] == "2";
  CHECK(hom02 == 2);
}

TEST_CASE("brown verbs") {
  const auto b = run_json("brown --category " + data("two.json") + " --set-functor " + data("brown_two.json"));
  CHECK(b["verdict"] == "not-representable");
  CHECK(b["B2"]["holds"] == false);
  CHECK(b["B2"]["witness"]["objects"] == ordered_json::array({"0", "1", "1", "1"}));
  CHECK(b["h_compact"] == "vacuous at finite scale");

  const auto e = run_json("brown --category " + data("two.json") + " --experimental");
  CHECK(e["experimental"]["enumerated"] == 11);
  CHECK(e["experimental"]["satisfying"] == 2);
}

TEST_CASE("gaft-fin and compare on pz2") {
  const auto t = run_json("gaft-fin --gfunctor " + data("pick_y.json"));
  CHECK(t["table"].size() == 2);
  const auto c = run_json("compare --gfunctor " + data("pick_y.json"));
  CHECK(c["h_adjoint"] == true);
  CHECK(c["full_adjoint"] == false);
  const auto& at_x = c["anchors"][0]["reflection"];
  CHECK(at_x["applies"] == false);
  CHECK(at_x["reflects"].is_null());
}

TEST_CASE("provenance hashes the inputs") {
  const auto j = run_json("gaft --functor " + data("g_chain3_two.json"));
  const auto& inputs = j["provenance"]["inputs"];
  REQUIRE(inputs.size() == 3);
  for (const auto& in : inputs) {
    const std::string path = in["path"];
    CHECK(in["sha256"] == adjunct::io::sha256_hex(slurp(path)));
  }
  CHECK(j["provenance"]["engine_version"] == "adjunct 0.1.0");
}

TEST_CASE("reruns are byte-identical") {
  for (const std::string& args : {"gaft --functor " + data("g_chain3_two.json"), "nerve --category " + data("diamond.json"),
                                 "limits --category " + data("parallel_pair.json"), std::string("corpus fixtures"),
                                 std::string("corpus posets4 --seed 3")}) {
    CAPTURE(args);
    const auto a = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == run(args).out);
  }
}

TEST_CASE("usage and input errors exit nonzero") {
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("corpus nope").status == 2);
  CHECK(run("gaft --functor " + data("missing.json")).status == 2);
  CHECK(run("classify --gcat " + data("pz2.json") + " --object q").status == 2);

  const std::string bad = "/tmp/adjunct_cli_bad.json";
  std::ofstream(bad) << "{\"objects\": [";
  CHECK(run("validate --category " + bad).status == 2);
  std::remove(bad.c_str());
}

TEST_CASE("validate reports law failures as a verdict") {
  const std::string law = "/tmp/adjunct_cli_law.json";
  std::ofstream(law) << R"({"objects": ["a"], "morphisms": [{"id": "e", "src": "a", "dst": "a"}], "compose": []})";
  const auto j = run_json("validate --category " + law);
  CHECK(j["verdict"] == "invalid");
  CHECK(j["violation"]["code"] == "MissingComposite");
  std::remove(law.c_str());
  CHECK(run_json("validate --category " + data("diamond.json"))["verdict"] == "valid");
}

TEST_CASE("corpus suites pass") {
  for (const char* suite : {"posets4", "fixtures", "enriched", "oracle"}) {
    CAPTURE(suite);
    const auto j = run_json(std::string("corpus ") + suite);
    CHECK(j["verdict"] == "pass");
    CHECK(j["provenance"]["operation"] == std::string("corpus ") + suite);
  }
}

TEST_CASE("--out writes the certificate") {
  const std::string out = "/tmp/adjunct_cli_out.json";
  const auto r = run("initial --category " + data("diamond.json") + " --out " + out);
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(ordered_json::parse(slurp(out))["initial_objects"] == ordered_json::array({"bot"}));
  std::remove(out.c_str());
}
