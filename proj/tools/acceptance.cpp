// Runs the acceptance criteria and prints one line per criterion. Exits 0
// only when all of them pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "adjunct/io.hpp"
#include "adjunct/suites.hpp"

using namespace adjunct;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string summary(const suites::Check& c) {
  std::string s = c.name + " " + std::to_string(c.passed) + " passed, " + std::to_string(c.failed) + " failed";
  if (c.counterexample) s += "; first counterexample: " + *c.counterexample;
  return s;
}

Outcome single(const suites::Check& c) { return {c.ok(), summary(c)}; }

Outcome timed(double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  auto out = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "; %.2f s of %.0f s", secs, limit_seconds);
  out.detail += buf;
  out.pass = out.pass && secs <= limit_seconds;
  return out;
}

Outcome gaft_oracle() {
  const auto checks = suites::gaft_oracle();
  Outcome out{true, ""};
  for (const auto& c : checks) {
    out.pass = out.pass && c.ok();
    if (c.name == "gaft_oracle_curated" && c.passed + c.failed < 20) out.pass = false;
    out.detail += (out.detail.empty() ? "" : "; ") + summary(c);
  }
  return out;
}

Outcome pz2_facts() {
  const auto c = suites::pz2_fixture();
  return {c.ok() && c.passed == 5, summary(c)};
}

Outcome determinism() {
  std::size_t bytes = 0;
  for (const auto& name : suites::suite_names()) {
    auto render = [&] { return io::dump(io::certificate("corpus " + name, suites::run(name, 0).to_json(), {})); };
    const auto a = render();
    const auto b = render();
    if (a != b) return {false, "suite " + name + " differs between runs"};
    bytes += a.size();
  }
  return {true, std::to_string(suites::suite_names().size()) + " suites rerun, " + std::to_string(bytes) + " bytes identical"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"gaft oracle equivalence", [] { return timed(60, gaft_oracle); }},
      {"identity limits", [] { return single(suites::identity_limits()); }},
      {"nerve round trip", [] { return timed(30, [] { return single(suites::nerve_round_trip()); }); }},
      {"solution set transfer", [] { return single(suites::solution_transfer()); }},
      {"pz2 fixture", pz2_facts},
      {"initial reflection", [] { return single(suites::reflection(0)); }},
      {"finite completeness", [] { return single(suites::finite_completeness()); }},
      {"brown necessity", [] { return single(suites::brown_necessity()); }},
      {"determinism", determinism},
  };
  int failures = 0;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    failures += out.pass ? 0 : 1;
    std::printf("criterion %d [%s]: %s (%s)\n", n, c.name, out.pass ? "PASS" : "FAIL", out.detail.c_str());
  }
  std::printf("%d of %d criteria passed\n", n - failures, n);
  return failures == 0 ? 0 : 1;
}
