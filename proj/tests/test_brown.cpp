#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>
#include <set>

#include "adjunct/brown.hpp"
#include "adjunct/catalog.hpp"
#include "adjunct/error.hpp"
#include "adjunct/limits.hpp"

using namespace adjunct;

namespace {

// Set functor on two with the given F(0), F(1) and F(0->1).
SetFunctor on_two(std::vector<std::string> f0, std::vector<std::string> f1, std::vector<int> along) {
  const auto c = catalog::two();
  std::vector<std::vector<std::string>> sets{std::move(f0), std::move(f1)};
  std::vector<std::vector<int>> maps(static_cast<std::size_t>(c->morphism_count()));
  for (int m = 0; m < c->morphism_count(); ++m) {
    if (c->is_identity(m)) {
      for (int e = 0; e < static_cast<int>(sets[c->src(m)].size()); ++e) maps[m].push_back(e);
    } else {
      maps[m] = along;
    }
  }
  return make_set_functor(c, std::move(sets), std::move(maps));
}

SetFunctor sum(const SetFunctor& f, const SetFunctor& g) {
  SetFunctor out{f.base, {}, {}};
  const FinCategory& c = *f.base;
  for (int x = 0; x < c.object_count(); ++x) {
    auto s = f.sets[x];
    for (const auto& e : g.sets[x]) s.push_back("r:" + e);
    out.sets.push_back(std::move(s));
  }
  for (int m = 0; m < c.morphism_count(); ++m) {
    auto row = f.maps[m];
    for (int v : g.maps[m]) row.push_back(v + f.size(c.src(m)));
    out.maps.push_back(std::move(row));
  }
  return out;
}

SetFunctor times(const SetFunctor& f, const SetFunctor& g) {
  SetFunctor out{f.base, {}, {}};
  const FinCategory& c = *f.base;
  for (int x = 0; x < c.object_count(); ++x) {
    std::vector<std::string> s;
    for (const auto& a : f.sets[x]) {
      for (const auto& b : g.sets[x]) s.push_back(a + "," + b);
    }
    out.sets.push_back(std::move(s));
  }
  for (int m = 0; m < c.morphism_count(); ++m) {
    std::vector<int> row;
    const int w = g.size(c.src(m));
    for (int a = 0; a < f.size(c.dst(m)); ++a) {
      for (int b = 0; b < g.size(c.dst(m)); ++b) row.push_back(f.apply(m, a) * w + g.apply(m, b));
    }
    out.maps.push_back(std::move(row));
  }
  return out;
}

// Direct unfolding on a poset: coproducts are joins, pushouts of x <= y, z
// are joins of y and z.
struct PosetOracle {
  const FinCategory& c;

  bool leq(int x, int y) const { return !c.hom(x, y).empty(); }
  int arrow(int x, int y) const { return c.hom(x, y).front(); }

  std::optional<int> join(int x, int y) const {
    for (int w = 0; w < c.object_count(); ++w) {
      if (!leq(x, w) || !leq(y, w)) continue;
      bool least = true;
      for (int v = 0; v < c.object_count(); ++v) {
        if (leq(x, v) && leq(y, v) && !leq(w, v)) least = false;
      }
      if (least) return w;
    }
    return std::nullopt;
  }

  std::optional<int> bottom() const {
    for (int b = 0; b < c.object_count(); ++b) {
      bool all = true;
      for (int x = 0; x < c.object_count(); ++x) all = all && leq(b, x);
      if (all) return b;
    }
    return std::nullopt;
  }

  // nullopt when the needed colimits are missing
  std::optional<bool> b1(const SetFunctor& F) const {
    const auto b = bottom();
    if (!b) return std::nullopt;
    bool ok = F.size(*b) == 1;
    for (int x = 0; x < c.object_count(); ++x) {
      for (int y = 0; y < c.object_count(); ++y) {
        const auto w = join(x, y);
        if (!w) return std::nullopt;
        std::set<std::pair<int, int>> seen;
        for (int e = 0; e < F.size(*w); ++e) seen.emplace(F.apply(arrow(x, *w), e), F.apply(arrow(y, *w), e));
        ok = ok && static_cast<int>(seen.size()) == F.size(*w) && F.size(*w) == F.size(x) * F.size(y);
      }
    }
    return ok;
  }

  std::optional<bool> b2(const SetFunctor& F) const {
    bool ok = true;
    for (int x = 0; x < c.object_count(); ++x) {
      for (int y = 0; y < c.object_count(); ++y) {
        for (int z = 0; z < c.object_count(); ++z) {
          if (!leq(x, y) || !leq(x, z)) continue;
          const auto w = join(y, z);
          if (!w) return std::nullopt;
          for (int a = 0; a < F.size(y); ++a) {
            for (int b = 0; b < F.size(z); ++b) {
              if (F.apply(arrow(x, y), a) != F.apply(arrow(x, z), b)) continue;
              bool hit = false;
              for (int e = 0; e < F.size(*w) && !hit; ++e) {
                hit = F.apply(arrow(y, *w), e) == a && F.apply(arrow(z, *w), e) == b;
              }
              ok = ok && hit;
            }
          }
        }
      }
    }
    return ok;
  }
};

std::optional<bool> checked(const std::function<BrownReport()>& run) {
  try {
    return run().holds;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CoproductAbsent && e.code() != ErrorCode::PushoutAbsent) throw;
    return std::nullopt;
  }
}

std::vector<FinFunctor> all_functors(const CategoryRef& s, const CategoryRef& t) {
  std::vector<FinFunctor> out;
  enumerate_functors(*s, *t, [&](const std::vector<int>& o, const std::vector<int>& m) {
    out.push_back(FinFunctor{s, t, o, m});
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("set functor laws") {
  CHECK_NOTHROW(on_two({"*"}, {"a", "b"}, {0, 0}));
  CHECK_THROWS_AS(on_two({"*"}, {"a", "b"}, {0, 1}), Error);
  CHECK_THROWS_AS(on_two({"*"}, {"a"}, {0, 0}), Error);
  const auto c3 = catalog::chain3();
  for (int a = 0; a < 3; ++a) {
    const auto r = representable(c3, a);
    CHECK_NOTHROW(make_set_functor(c3, r.sets, r.maps));
  }
}

TEST_CASE("B1 and B2 fixtures") {
  const auto d = catalog::diamond();
  for (int a = 0; a < d->object_count(); ++a) {
    CHECK(check_B1(representable(d, a)).holds);
    CHECK(check_B2(representable(d, a)).holds);
  }

  const auto big = on_two({"*", "u"}, {"a"}, {0});
  const auto r1 = check_B1(big);
  CHECK_FALSE(r1.holds);
  REQUIRE(r1.witness);
  CHECK(r1.witness->kind == "empty coproduct");
  CHECK(r1.witness->objects == std::vector<int>{0});

  const auto f = on_two({"*"}, {"a", "b"}, {0, 0});
  const auto r2 = check_B2(f);
  CHECK_FALSE(r2.holds);
  REQUIRE(r2.witness);
  CHECK(r2.witness->kind == "pushout");
  CHECK(r2.witness->objects == std::vector<int>{0, 1, 1, 1});
  const auto rep = representability_search(f);
  CHECK_FALSE(rep.representable);
  CHECK(rep.obstructions.size() == 2);

  CHECK_THROWS_AS(check_B1(representable(catalog::disc2(), 0)), Error);
  CHECK_THROWS_AS(check_B2(representable(catalog::span(), 0)), Error);
}

TEST_CASE("representables satisfy B1 and B2") {
  int checked_b1 = 0, checked_b2 = 0;
  for (const auto& [id, c] : catalog::corpus()) {
    CAPTURE(id);
    for (int a = 0; a < c->object_count(); ++a) {
      const auto F = representable(c, a);
      if (const auto b1 = checked([&] { return check_B1(F); })) {
        CHECK(*b1);
        ++checked_b1;
      }
      if (const auto b2 = checked([&] { return check_B2(F); })) {
        CHECK(*b2);
        ++checked_b2;
      }
    }
  }
  CHECK(checked_b1 > 10);
  CHECK(checked_b2 > 20);
}

TEST_CASE("Yoneda search") {
  for (const auto& [id, c] : catalog::corpus()) {
    CAPTURE(id);
    for (int a = 0; a < c->object_count(); ++a) {
      const auto r = representability_search(representable(c, a));
      REQUIRE(r.representable);
      bool iso = false;
      for (int m : c->hom(r.object, a)) iso = iso || c->is_iso(m);
      CHECK(iso);
      // the components are bijections natural in y
      for (int y = 0; y < c->object_count(); ++y) {
        const auto& comp = r.components[static_cast<std::size_t>(y)];
        CHECK(std::set<int>(comp.begin(), comp.end()).size() == comp.size());
        CHECK(static_cast<int>(comp.size()) == static_cast<int>(c->hom(y, a).size()));
      }
    }
  }
  const auto c3 = catalog::chain3();
  const auto point = make_set_functor(c3, {{"*"}, {"*"}, {"*"}},
                                      std::vector<std::vector<int>>(static_cast<std::size_t>(c3->morphism_count()), {0}));
  const auto r = representability_search(point);
  CHECK(r.representable);
  CHECK(r.object == 2);
  CHECK(r.obstructions.empty());
}

TEST_CASE("weak generators") {
  CHECK(weak_generators(*catalog::chain3()) == std::vector<std::vector<int>>{{1, 2}});
  CHECK(weak_generators(*catalog::terminal()) == std::vector<std::vector<int>>{{}});
  CHECK(weak_generators(*catalog::disc2()) == std::vector<std::vector<int>>{{}});
  CHECK(weak_generators(*catalog::walking_iso()) == std::vector<std::vector<int>>{{}});

  // subset oracle: the full object set always detects isomorphisms, and every
  // reported set does while none of its one-smaller subsets does
  for (const auto& [id, c] : catalog::corpus()) {
    CAPTURE(id);
    auto detects = [&](const std::vector<int>& gs) {
      for (int f = 0; f < c->morphism_count(); ++f) {
        bool all_bijective = true;
        for (int g : gs) {
          const auto from = c->hom(g, c->src(f));
          std::set<int> img;
          for (int h : from) img.insert(c->compose(f, h));
          all_bijective = all_bijective && img.size() == from.size() && img.size() == c->hom(g, c->dst(f)).size();
        }
        if (all_bijective != c->is_iso(f)) return false;
      }
      return true;
    };
    const auto gens = weak_generators(*c);
    REQUIRE_FALSE(gens.empty());
    for (const auto& g : gens) {
      CHECK(detects(g));
      for (std::size_t i = 0; i < g.size(); ++i) {
        auto smaller = g;
        smaller.erase(smaller.begin() + static_cast<long>(i));
        CHECK_FALSE(detects(smaller));
      }
    }
  }
}

TEST_CASE("B1' and B2'") {
  const auto two = catalog::two();
  const auto term = catalog::terminal();
  CHECK(check_B1p_B2p(identity_functor(catalog::diamond())).holds);
  CHECK(check_B1p_B2p(catalog::thin_functor(two, term, {0, 0})).holds);
  const auto pick = check_B1p_B2p(catalog::thin_functor(term, two, {1}));
  CHECK_FALSE(pick.holds);
  CHECK_FALSE(pick.b1);
  REQUIRE(pick.witness);
  CHECK(pick.witness->kind == "empty coproduct");
  CHECK_THROWS_AS(check_B1p_B2p(identity_functor(catalog::disc2())), Error);
}

TEST_CASE("B1' and B2' pass to hom functors") {
  const std::vector<CategoryRef> cats{catalog::terminal(), catalog::two(), catalog::chain3(), catalog::diamond(),
                                      catalog::walking_iso(), catalog::product(*catalog::two(), *catalog::two())};
  int instances = 0, preserving = 0;
  for (const auto& s : cats) {
    for (const auto& t : cats) {
      for (const auto& F : all_functors(s, t)) {
        BrownPrimeReport r;
        try {
          r = check_B1p_B2p(F);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::ColimitAbsent);
          continue;
        }
        ++instances;
        if (!r.holds) continue;
        ++preserving;
        for (int d = 0; d < t->object_count(); ++d) {
          const auto H = hom_into(F, d);
          CHECK(check_B1(H).holds);
          CHECK(check_B2(H).holds);
        }
      }
    }
  }
  CHECK(preserving > 0);
  CHECK(preserving < instances);
}

TEST_CASE("checkers agree with direct unfolding") {
  std::mt19937 rng(0);
  const std::vector<CategoryRef> targets{catalog::two(), catalog::chain3(), catalog::diamond()};
  int compared = 0, failures = 0;
  for (const auto& [id, c] : catalog::corpus()) {
    if (!c->is_thin() || c->object_count() > 4) continue;
    CAPTURE(id);
    const PosetOracle oracle{*c};
    std::vector<SetFunctor> pool;
    for (const auto& t : targets) {
      const auto fs = all_functors(c, t);
      for (int k = 0; k < 4; ++k) {
        const auto& F = fs[std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(rng)];
        pool.push_back(hom_into(F, std::uniform_int_distribution<int>(0, t->object_count() - 1)(rng)));
      }
    }
    const std::size_t base = pool.size();
    for (std::size_t i = 0; i + 1 < base; i += 2) {
      pool.push_back(sum(pool[i], pool[i + 1]));
      pool.push_back(times(pool[i], pool[i + 1]));
    }
    for (const auto& F : pool) {
      REQUIRE_NOTHROW(make_set_functor(F.base, F.sets, F.maps));
      const auto b1 = checked([&] { return check_B1(F); });
      const auto b2 = checked([&] { return check_B2(F); });
      CHECK(b1 == oracle.b1(F));
      CHECK(b2 == oracle.b2(F));
      ++compared;
      failures += (b1 && !*b1) || (b2 && !*b2);
    }
  }
  CHECK(compared > 500);
  CHECK(failures > 0);
}

TEST_CASE("experimental exhaustive checker") {
  const auto two = brown_property_experimental(catalog::two(), 2);
  // sizes (a, b) with F(1) -> F(0): a^b functors each
  CHECK(two.enumerated == 11);
  CHECK(two.holds);
  CHECK(two.satisfying == 2);
  const auto c3 = brown_property_experimental(catalog::chain3(), 2);
  CHECK(c3.holds);
  CHECK(c3.satisfying == 3);
}
