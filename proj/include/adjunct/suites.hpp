#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adjunct/io.hpp"

/// Invariant sweeps over the built-in corpora. Each check counts instances
/// and keeps the first counterexample; results are deterministic for a given
/// seed.
namespace adjunct::suites {

struct Check {
  explicit Check(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<std::string> counterexample;

  bool ok() const { return failed == 0 && passed > 0; }
  void record(bool ok, const std::string& instance);
};

/// gaft_decide against the brute-force oracle: every functor between posets
/// with at most four elements, then functors involving curated categories.
std::vector<Check> gaft_oracle();
/// Apexes of limits of identity diagrams are the initial objects.
Check identity_limits();
/// tau1 of the nerve gives back the category; lifting detects initiality.
Check nerve_round_trip();
/// Weakly initial sets transfer between enriched and homotopy commas.
Check solution_transfer();
/// The five facts of the pz2 fixture.
Check pz2_fixture();
/// Initial-object reflection over generated functors meeting every
/// hypothesis; `count` such functors are generated from `seed`.
Check reflection(std::uint32_t seed, std::size_t count = 200);
/// A category with finite limits has an initial object.
Check finite_completeness();
/// Representables satisfy B1 and B2 and are found by the Yoneda search; the
/// two-object fixture fails B2 at its documented square.
Check brown_necessity();
/// Left adjoints of G and right adjoints of G^op are decided alike.
Check duality();
/// Documented single-instance fixtures.
Check fixtures();

struct Report {
  std::string suite;
  std::uint32_t seed = 0;
  std::vector<Check> checks;

  bool ok() const;
  io::ordered_json to_json() const;
};

/// posets4, fixtures, enriched or oracle; throws UnknownVerb otherwise.
Report run(std::string_view suite, std::uint32_t seed = 0);
const std::vector<std::string>& suite_names();

}  // namespace adjunct::suites
