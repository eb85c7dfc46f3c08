#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "adjunct/catalog.hpp"
#include "adjunct/presentation.hpp"

using namespace adjunct;

namespace {

std::vector<int> power(int g, int n) { return std::vector<int>(n, g); }

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Presentation monoid(int generators, std::vector<std::pair<std::vector<int>, std::vector<int>>> rels) {
  Presentation p;
  p.object_count = 1;
  for (int i = 0; i < generators; ++i) p.generators.push_back({0, 0});
  for (auto& [l, r] : rels) p.relations.push_back({0, l, r});
  return p;
}

int evaluate(const PresentedCategory& c, int x, const std::vector<int>& path) {
  int e = c.identity(x);
  for (int s : path) e = c.compose(c.generator(s), e);
  return e;
}

}  // namespace

TEST_CASE("cyclic and small groups") {
  for (int n = 1; n <= 7; ++n) {
    const auto c = PresentedCategory::close(monoid(1, {{power(0, n), {}}}), 100);
    CHECK(c.elements().size() == static_cast<std::size_t>(n));
  }
  // S3 = <s, t | s^2, t^2, (st)^3>
  const auto s3 = PresentedCategory::close(
      monoid(2, {{power(0, 2), {}}, {power(1, 2), {}}, {cat(cat({0, 1}, {0, 1}), {0, 1}), {}}}), 100);
  CHECK(s3.elements().size() == 6);
  // A5 = <a, b | a^2, b^3, (ab)^5>
  std::vector<int> ab5;
  for (int i = 0; i < 5; ++i) ab5 = cat(ab5, {0, 1});
  const auto a5 = PresentedCategory::close(monoid(2, {{power(0, 2), {}}, {power(1, 3), {}}, {ab5, {}}}), 1000);
  CHECK(a5.elements().size() == 60);
}

TEST_CASE("monoid with idempotent power") {
  // a^3 = a gives {1, a, a^2}
  const auto c = PresentedCategory::close(monoid(1, {{power(0, 3), {0}}}), 100);
  CHECK(c.elements().size() == 3);
  const int a = c.generator(0);
  CHECK(c.compose(a, c.compose(a, a)) == a);
}

TEST_CASE("closure agrees with the multiplication table it was read from") {
  // every element as a generator, every product as a relation
  const auto k = catalog::product(*catalog::cyclic_group(3), *catalog::idempotent_monoid());
  Presentation p;
  p.object_count = 1;
  for (int m = 0; m < k->morphism_count(); ++m) p.generators.push_back({0, 0});
  for (int f = 0; f < k->morphism_count(); ++f) {
    if (k->is_identity(f)) p.relations.push_back({0, {f}, {}});
    for (int g = 0; g < k->morphism_count(); ++g) p.relations.push_back({0, {f, g}, {k->compose(g, f)}});
  }
  const auto c = PresentedCategory::close(p, 100);
  REQUIRE(c.elements().size() == static_cast<std::size_t>(k->morphism_count()));
  for (int f = 0; f < k->morphism_count(); ++f) {
    for (int g = 0; g < k->morphism_count(); ++g) {
      CHECK(c.compose(c.generator(g), c.generator(f)) == c.generator(k->compose(g, f)));
    }
  }
}

TEST_CASE("multi-object presentations") {
  // the commuting square: two paths 0 -> 3 identified
  Presentation p;
  p.object_count = 4;
  p.generators = {{0, 1}, {1, 3}, {0, 2}, {2, 3}};
  p.relations = {{0, {0, 1}, {2, 3}}};
  const auto c = PresentedCategory::close(p, 100);
  CHECK(c.elements().size() == 9);
  CHECK(evaluate(c, 0, {0, 1}) == evaluate(c, 0, {2, 3}));

  p.relations.clear();
  CHECK(PresentedCategory::close(p, 100).elements().size() == 10);

  // elements are shortlex: every path is the least among equal paths tried
  const auto s3 = PresentedCategory::close(monoid(2, {{power(0, 2), {}}, {power(1, 2), {}}, {{0, 1, 0}, {1, 0, 1}}}), 100);
  std::set<std::vector<int>> seen;
  for (const auto& e : s3.elements()) {
    CHECK(seen.insert(e.path).second);
    CHECK(evaluate(s3, 0, e.path) == static_cast<int>(&e - s3.elements().data()));
  }
}

TEST_CASE("bounds") {
  Presentation free2 = monoid(2, {});
  CHECK_THROWS_AS(PresentedCategory::close(free2, 200), Error);
  // a^2 = a^3 stays finite, b unconstrained does not
  Presentation mixed = monoid(2, {{power(0, 2), power(0, 3)}});
  CHECK_THROWS_AS(PresentedCategory::close(mixed, 200), Error);
  CHECK(PresentedCategory::close(monoid(1, {{power(0, 2), power(0, 3)}}), 200).elements().size() == 3);
}
