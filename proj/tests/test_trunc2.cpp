#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "adjunct/catalog.hpp"
#include "adjunct/error.hpp"
#include "adjunct/limits.hpp"
#include "adjunct/trunc2.hpp"

using namespace adjunct;

namespace {

GpdFunctor pick_y() { return make_gpd_functor(embed(catalog::terminal()), pz2(), {1}, {{0}}, {{0}}); }

std::vector<FinFunctor> all_functors(const CategoryRef& a, const CategoryRef& b) {
  std::vector<FinFunctor> out;
  enumerate_functors(*a, *b, [&](const std::vector<int>& o, const std::vector<int>& m) {
    out.push_back(FinFunctor{a, b, o, m});
    return true;
  });
  return out;
}

std::vector<CategoryRef> small_categories() {
  std::vector<CategoryRef> out;
  for (int n = 0; n <= 3; ++n) {
    for (auto& p : catalog::posets_up_to_iso(n)) out.push_back(p);
  }
  for (const auto& c : catalog::curated()) {
    if (c.category->morphism_count() <= 6) out.push_back(c.category);
  }
  return out;
}

std::vector<std::string> law_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::LawViolation) return {e.what()};
  }
  return {};
}

// Rebuilds c with the horizontal 2-cell table on (x, x, x) overridden.
GpdCategory with_twocells(const GpdCategory& c, const std::function<int(int, int, int)>& endo) {
  std::vector<CategoryRef> homs;
  std::vector<int> ids;
  for (int x = 0; x < c.object_count(); ++x) {
    ids.push_back(c.identity_cell(x));
    for (int y = 0; y < c.object_count(); ++y) homs.push_back(c.hom_ref(x, y));
  }
  return GpdCategory::build(
      c.objects(), homs, ids, [&](int x, int y, int z, int g, int f) { return c.compose_cells(x, y, z, g, f); },
      [&](int x, int y, int z, int b, int a) {
        if (x == y && y == z) return endo(b, a, c.compose_twocells(x, y, z, b, a));
        return c.compose_twocells(x, y, z, b, a);
      });
}

}  // namespace

TEST_CASE("pz2 fixture") {
  const auto p = pz2();
  CHECK(p->object_count() == 2);
  const auto m = mapping_invariants(*p, 0, 1);
  CHECK(m.components == 1);
  CHECK(m.automorphism_orders == std::vector<int>{2});
  CHECK(m.connected());
  CHECK_FALSE(m.contractible());
  CHECK(mapping_invariants(*p, 1, 0).components == 0);
  const auto x = classify_object(*p, 0);
  CHECK_FALSE(x.initial);
  CHECK(x.h_initial);
  CHECK(x.weakly_initial_singleton);
  const auto h = homotopy_category(*p);
  CHECK(find_isomorphism(h.category, catalog::two()));
  CHECK_FALSE(p->discrete_homs());
}

TEST_CASE("law violations are named") {
  const auto bz3 = decorated(catalog::terminal(), {{}, LabelKind::Uniform, 3});
  CHECK_NOTHROW(with_twocells(*bz3, [](int, int, int r) { return r; }));
  // labels 1 * 1 sent to 1 instead of 2: units survive, interchange does not
  const auto broken = law_of([&] { with_twocells(*bz3, [](int b, int a, int r) { return b == 1 && a == 1 ? 1 : r; }); });
  REQUIRE(broken.size() == 1);
  CHECK(broken[0].find("interchange") != std::string::npos);
  const auto unit = law_of([&] { with_twocells(*bz3, [](int b, int a, int r) { return b == 0 && a == 1 ? 2 : r; }); });
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].find("unit") != std::string::npos);

  // a non-invertible 2-cell
  const auto hom = catalog::idempotent_monoid();
  const auto bad = law_of([&] {
    GpdCategory::build({"*"}, {hom}, {0}, [](int, int, int, int, int) { return 0; },
                       [](int, int, int, int b, int a) { return b == 0 ? a : b; });
  });
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].find("hom groupoid") != std::string::npos);

  CHECK_THROWS_AS(decorated(catalog::walking_iso(), {{}, LabelKind::OffDiagonal, 2}), Error);
}

TEST_CASE("homotopy category of an embedding") {
  for (const auto& [id, c] : catalog::corpus()) {
    CAPTURE(id);
    const auto g = embed(c);
    CHECK(g->discrete_homs());
    const auto h = homotopy_category(*g);
    CHECK(structurally_equal(*h.category, *c));
    for (int x = 0; x < c->object_count(); ++x) {
      for (int y = 0; y < c->object_count(); ++y) {
        CHECK(mapping_invariants(*g, x, y).components == static_cast<int>(h.category->hom(x, y).size()));
      }
    }
  }
}

TEST_CASE("embedded chain3") {
  const auto g = embed(catalog::chain3());
  const auto m = mapping_invariants(*g, 0, 2);
  CHECK(m.components == 1);
  CHECK(m.automorphism_orders == std::vector<int>{1});
  const auto k = classify_object(*g, 0);
  CHECK(k.initial);
  CHECK(k.h_initial);
  CHECK(k.weakly_initial_singleton);
  const auto d = classify_object(*embed(catalog::disc2()), 0);
  CHECK_FALSE(d.initial);
  CHECK_FALSE(d.h_initial);
  CHECK_FALSE(d.weakly_initial_singleton);
}

TEST_CASE("decorated instances") {
  const auto c = decorated(catalog::chain3(), {{}, LabelKind::OffDiagonal, 2});
  CHECK(mapping_invariants(*c, 0, 2).automorphism_orders == std::vector<int>{2});
  CHECK(mapping_invariants(*c, 1, 1).automorphism_orders == std::vector<int>{1});
  const auto h = homotopy_category(*c);
  CHECK(structurally_equal(*h.category, *catalog::chain3()));

  const auto b = catalog::free_boundary2();
  const auto paths = b->hom(0, 2);
  const auto q = decorated(b, {{{paths[0], paths[1]}}, LabelKind::None, 1});
  CHECK(mapping_invariants(*q, 0, 2).components == 1);
  CHECK(homotopy_category(*q).category->is_thin());
}

TEST_CASE("implications on every corpus object") {
  int strict = 0;
  for (const auto& [id, c] : enriched_corpus()) {
    CAPTURE(id);
    for (int x = 0; x < c->object_count(); ++x) {
      const auto k = classify_object(*c, x);
      if (k.initial) CHECK(k.h_initial);
      if (k.h_initial) CHECK(k.weakly_initial_singleton);
      bool trivial_automorphisms = true;
      for (int y = 0; y < c->object_count(); ++y) {
        for (int o : mapping_invariants(*c, x, y).automorphism_orders) trivial_automorphisms = trivial_automorphisms && o == 1;
      }
      if (k.h_initial && trivial_automorphisms) CHECK(k.initial);
      strict += k.h_initial && !k.initial;
    }
  }
  CHECK(strict > 0);
}

TEST_CASE("functor enumeration") {
  // on embeddings, strict functors are exactly ordinary functors
  const auto cats = small_categories();
  for (std::size_t i = 0; i < cats.size(); i += 3) {
    for (std::size_t j = 0; j < cats.size(); j += 4) {
      const auto a = embed(cats[i]);
      const auto b = embed(cats[j]);
      const auto fs = enumerate_gpd_functors(a, b);
      CHECK(fs.size() == all_functors(cats[i], cats[j]).size());
    }
  }
  const auto p = pz2();
  const auto self = enumerate_gpd_functors(p, p);
  // identity on objects with alpha fixed or collapsed is impossible; swapping is not typed
  for (const auto& f : self) CHECK_NOTHROW(make_gpd_functor(f.source, f.target, f.obj_map, f.cell_map, f.twocell_map));
  CHECK(std::any_of(self.begin(), self.end(), [](const GpdFunctor& f) { return f.twocell_map[1] == std::vector<int>{0, 1}; }));
  CHECK(enumerate_gpd_functors(p, p, 1).size() == 1);
  CHECK_THROWS_AS(make_gpd_functor(p, p, {0, 1}, {{0}, {0}, {}, {0}}, {{0}, {1, 1}, {}, {0}}), Error);
}

TEST_CASE("the homotopy category is functorial") {
  const auto corpus = enriched_corpus();
  int checked = 0;
  for (std::size_t i = 0; i < corpus.size(); i += 2) {
    for (std::size_t j = 1; j < corpus.size(); j += 3) {
      for (std::size_t k = 0; k < corpus.size(); k += 4) {
        const auto fs = enumerate_gpd_functors(corpus[i].category, corpus[j].category, 3);
        const auto gs = enumerate_gpd_functors(corpus[j].category, corpus[k].category, 3);
        const auto hi = homotopy_category(*corpus[i].category);
        const auto hj = homotopy_category(*corpus[j].category);
        const auto hk = homotopy_category(*corpus[k].category);
        for (const auto& f : fs) {
          for (const auto& g : gs) {
            const auto gf = compose(g, f);
            CHECK_NOTHROW(make_gpd_functor(gf.source, gf.target, gf.obj_map, gf.cell_map, gf.twocell_map));
            const auto lhs = homotopy_functor(gf, hi, hk);
            const auto rhs = compose(homotopy_functor(g, hj, hk), homotopy_functor(f, hi, hj));
            CHECK(lhs.obj_map == rhs.obj_map);
            CHECK(lhs.mor_map == rhs.mor_map);
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("enriched comma of the pz2 functor") {
  const auto g = pick_y();
  const auto k = enriched_comma_under(g, 0);
  REQUIRE(k.category->object_count() == 1);
  const auto& endo = k.category->hom(0, 0);
  CHECK(endo.object_count() == 2);
  CHECK(endo.morphism_count() == 2);  // identities only
  const auto h = homotopy_category(*k.category);
  CHECK(h.category->hom(0, 0).size() == 2);
  CHECK_THROWS_AS(enriched_comma_under(g, 7), Error);

  const auto r = h_initial_condition(g);
  CHECK_FALSE(r.holds);
  CHECK_FALSE(r.witness[0]);
  CHECK(r.witness[1] == 0);

  const auto gf = gaft_fin_decide(g);
  CHECK_FALSE(gf.exists);
  CHECK_FALSE(gf.table[0].initial);
  CHECK(gf.table[1].initial == 0);

  const auto fl = has_finite_limits(h.category);
  CHECK_FALSE(fl.has_finite_limits);
  CHECK(fl.missing_equalizer);
}

TEST_CASE("comparison functor on pz2") {
  const auto cmp = comparison_functor(pick_y(), 0);
  CHECK(cmp.source.category->hom(0, 0).size() == 2);
  CHECK(cmp.target.category->hom(0, 0).size() == 1);
  CHECK(cmp.profile.surjective_on_objects);
  CHECK(cmp.profile.full);
  CHECK(cmp.profile.conservative);
  CHECK_FALSE(cmp.profile.equalizing_pairs);
  const auto r = initial_reflection_check(cmp.functor);
  CHECK_FALSE(r.applies);

  const auto a = homotopy_adjoint_compare(pick_y());
  CHECK(a.h_adjoint);
  CHECK_FALSE(a.full_adjoint);
  CHECK(a.consistent == Consistency::NotApplicable);
  CHECK_FALSE(a.flag_derived);
  CHECK(to_string(a.consistent) == "not-applicable");
  CHECK(homotopy_adjoint_compare(pick_y(), true).consistent == Consistency::Inconsistent);
}

TEST_CASE("other fixed examples") {
  const auto c3 = embed(catalog::chain3());
  const auto id = identity_gpd_functor(c3);
  CHECK(h_initial_condition(id).holds);
  CHECK(gaft_fin_decide(id).exists);
  const auto a = homotopy_adjoint_compare(id);
  CHECK(a.h_adjoint);
  CHECK(a.full_adjoint);
  CHECK(a.flag_derived);
  CHECK(a.consistent == Consistency::Consistent);

  const auto top = embed(catalog::thin_functor(catalog::terminal(), catalog::chain3(), {2}), embed(catalog::terminal()), c3);
  CHECK(h_initial_condition(top).holds);
  for (int c = 0; c < 3; ++c) CHECK(enriched_comma_under(top, c).category->object_count() == 1);

  const auto k = enriched_comma_under(id, 0);
  const auto ordinary = comma_under(identity_functor(catalog::chain3()), 0);
  CHECK(find_isomorphism(homotopy_category(*k.category).category, ordinary.category));
}

TEST_CASE("embedding sweep agrees with the ordinary decision") {
  const auto cats = small_categories();
  int limited = 0;
  for (const auto& a : cats) {
    const auto ea = embed(a);
    for (const auto& b : cats) {
      const auto eb = embed(b);
      for (const auto& f : all_functors(a, b)) {
        const auto g = embed(f, ea, eb);
        const bool ordinary = gaft_decide(f).exists;
        CHECK(gaft_fin_decide(g).exists == ordinary);
        CHECK_FALSE(gaft_fin_decide(g).divergent);
        const auto cmpd = homotopy_adjoint_compare(g);
        CHECK(cmpd.flag_derived);
        CHECK(cmpd.h_adjoint == cmpd.full_adjoint);
        if (*cmpd.preserves_finite_limits) {
          CHECK(cmpd.consistent == Consistency::Consistent);
          ++limited;
        }
        for (int c = 0; c < b->object_count(); ++c) {
          const auto cmp = comparison_functor(g, c);
          CHECK(cmp.profile.faithful);
          CHECK(find_isomorphism(cmp.source.category, cmp.target.category));
        }
      }
    }
  }
  CHECK(limited > 0);
}

TEST_CASE("comparison invariants and solution-set transfer on enriched functors") {
  int count = 0;
  int divergent = 0;
  for (const auto& [id, g] : enriched_functors(4)) {
    CAPTURE(id);
    for (int c = 0; c < g.target->object_count(); ++c) {
      const auto cmp = comparison_functor(g, c);  // asserts the profile itself
      CHECK(cmp.profile.surjective_on_objects);
      const auto r = initial_reflection_check(cmp.functor);
      if (r.applies) CHECK(r.reflects);
      const auto t = solution_set_transfer(g, c);
      CHECK(t.enriched_has == t.homotopy_has);
      CHECK(t.lifted);
      CHECK(t.pushed);
    }
    const auto gf = gaft_fin_decide(g);
    const auto hi = h_initial_condition(g);
    CHECK(gf.h_initial_condition == hi.holds);
    if (gf.exists) CHECK(gf.h_initial_condition);
    divergent += gf.divergent;
    ++count;
  }
  CHECK(count > 100);
  CHECK(divergent > 0);
}

TEST_CASE("reflection on the ordinary corpus") {
  int applied = 0;
  const auto cats = small_categories();
  for (const auto& a : cats) {
    for (const auto& b : cats) {
      for (const auto& f : all_functors(a, b)) {
        const auto r = initial_reflection_check(f);
        if (!r.applies) continue;
        ++applied;
        CHECK(r.reflects);
      }
    }
  }
  CHECK(applied > 0);
  CHECK(initial_reflection_check(identity_functor(catalog::chain3())).reflects);
}
