#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "adjunct/adjoint.hpp"
#include "adjunct/catalog.hpp"
#include "adjunct/limits.hpp"

using namespace adjunct;

namespace {

std::vector<std::string> object_names(const Comma& k) { return k.category->objects(); }

std::vector<FinFunctor> all_functors(const CategoryRef& a, const CategoryRef& b) {
  std::vector<FinFunctor> out;
  enumerate_functors(*a, *b, [&](const std::vector<int>& o, const std::vector<int>& m) {
    out.push_back(FinFunctor{a, b, o, m});
    return true;
  });
  return out;
}

std::vector<FinFunctor> sweep() {
  std::vector<CategoryRef> cats;
  for (int n = 0; n <= 3; ++n) {
    for (auto& p : catalog::posets_up_to_iso(n)) cats.push_back(p);
  }
  for (const auto& c : catalog::curated()) {
    if (c.category->morphism_count() <= 8) cats.push_back(c.category);
  }
  std::vector<FinFunctor> out;
  for (const auto& a : cats) {
    for (const auto& b : cats) {
      for (auto& f : all_functors(a, b)) out.push_back(std::move(f));
    }
  }
  return out;
}

// (g ∘ F h) and (G g ∘ h) under the transpose: naturality of the bijection in
// both variables, checked on every composable configuration.
bool bijection_natural(const AdjunctionCertificate& cert) {
  const FinCategory& c = *cert.right.target;
  const FinCategory& d = *cert.right.source;
  auto transpose = [&](int x, int g) { return c.compose(cert.right.mor(g), cert.unit[x]); };
  for (int x = 0; x < c.object_count(); ++x) {
    for (int e = 0; e < d.object_count(); ++e) {
      for (int g : d.hom(cert.left.obj(x), e)) {
        for (int k : d.out(e)) {
          if (transpose(x, d.compose(k, g)) != c.compose(cert.right.mor(k), transpose(x, g))) return false;
        }
        for (int h : c.in(x)) {
          const int w = c.src(h);
          if (transpose(w, d.compose(g, cert.left.mor(h))) != c.compose(transpose(x, g), h)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("comma_under examples") {
  const auto t = catalog::terminal();
  const auto d2 = catalog::disc2();
  const auto pick_x = catalog::thin_functor(t, d2, {0});
  CHECK(comma_under(pick_x, 1).category->object_count() == 0);

  const auto c3 = catalog::chain3();
  const auto two = catalog::two();
  const auto g = catalog::thin_functor(c3, two, {0, 1, 1});
  const auto k = comma_under(g, 1);
  CHECK(object_names(k) == std::vector<std::string>{"(1,id_1)", "(2,id_1)"});
  CHECK(k.category->hom(0, 1).size() == 1);
  CHECK(k.category->morphism_count() == 3);
  CHECK(initial_objects(*k.category) == std::vector<int>{0});

  const auto idk = comma_under(identity_functor(c3), 0);
  CHECK(idk.category->object_count() == 3);
  CHECK(find_isomorphism(idk.category, c3));
  CHECK(k.category->name(0) == "id_1@(1,id_1)");
  CHECK_THROWS_AS(comma_under(g, 5), Error);
}

TEST_CASE("comma_over examples and duality") {
  const auto c3 = catalog::chain3();
  CHECK(find_isomorphism(comma_over(identity_functor(c3), 2).category, c3));
  const auto pick1 = catalog::thin_functor(catalog::terminal(), c3, {1});
  CHECK(comma_over(pick1, 0).category->object_count() == 0);

  int checked = 0;
  for (const auto& f : sweep()) {
    if (checked > 600) break;
    const auto fop = opposite(f);
    for (int d = 0; d < f.target->object_count(); ++d) {
      const auto over = comma_over(f, d);
      const auto dual = share(opposite(*comma_under(fop, d).category));
      CHECK(find_isomorphism(over.category, dual));
      CHECK(structurally_equal(*over.category, *dual));
    }
    ++checked;
  }
}

TEST_CASE("solution sets") {
  const auto c3 = catalog::chain3();
  const auto two = catalog::two();
  const auto g = catalog::thin_functor(c3, two, {0, 1, 1});
  const auto r = solution_set_condition(g);
  CHECK(r.satisfied);
  REQUIRE(r.per_object.size() == 2);
  CHECK(r.per_object[1].minimal_sets == std::vector<std::vector<int>>{{0}});

  const auto pick_x = catalog::thin_functor(catalog::terminal(), catalog::disc2(), {0});
  const auto s = solution_set_condition(pick_x);
  CHECK(s.satisfied);
  CHECK(s.per_object[1].minimal_sets == std::vector<std::vector<int>>{{}});

  for (const auto& f : sweep()) {
    const auto rep = solution_set_condition(f);
    for (const auto& ps : rep.per_object) {
      const auto k = comma_under(f, ps.anchor);
      for (const auto& set : ps.minimal_sets) CHECK(is_weakly_initial(*k.category, set));
    }
  }
}

TEST_CASE("gaft examples") {
  const auto c3 = catalog::chain3();
  const auto two = catalog::two();
  const auto g = catalog::thin_functor(c3, two, {0, 1, 1});
  const auto r = gaft_decide(g);
  REQUIRE(r.exists);
  CHECK(r.certificate->left.obj_map == std::vector<int>{0, 1});
  CHECK_FALSE(r.certificate->hypotheses_consulted);
  for (int x = 0; x < 2; ++x) CHECK(two->is_identity(r.certificate->unit[x]));
  const auto bf = brute_force_left_adjoint(g);
  REQUIRE(bf.adjoints.size() == 1);
  CHECK(bf.adjoints[0].first.obj_map == std::vector<int>{0, 1});

  const auto pick_x = catalog::thin_functor(catalog::terminal(), catalog::disc2(), {0});
  const auto n = gaft_decide(pick_x);
  CHECK_FALSE(n.exists);
  CHECK(n.witness_failure == 1);
  CHECK_FALSE(brute_force_left_adjoint(pick_x).exists);

  const auto id = gaft_decide(identity_functor(c3));
  REQUIRE(id.exists);
  CHECK(id.certificate->left.obj_map == std::vector<int>{0, 1, 2});
  for (int x = 0; x < 3; ++x) CHECK(c3->is_identity(id.certificate->unit[x]));
  CHECK(verify_adjunction(*id.certificate).ok);
}

TEST_CASE("witnesses must be initial") {
  const auto c3 = catalog::chain3();
  const auto two = catalog::two();
  const auto g = catalog::thin_functor(c3, two, {0, 1, 1});
  const int id0 = two->identity(0);
  const int id1 = two->identity(1);
  CHECK_NOTHROW(construct_left_adjoint(g, {{0, id0}, {1, id1}}));
  try {
    construct_left_adjoint(g, {{0, id0}, {2, id1}});
    FAIL("non-initial witness accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WitnessNotInitial);
  }
}

TEST_CASE("mutated units are rejected") {
  int mutated = 0;
  for (const auto& f : sweep()) {
    const auto r = gaft_decide(f);
    if (!r.exists) continue;
    const FinCategory& c = *f.target;
    for (int x = 0; x < c.object_count(); ++x) {
      const int u = r.certificate->unit[x];
      for (int alt : c.hom(c.src(u), c.dst(u))) {
        if (alt == u) continue;
        auto bad = *r.certificate;
        bad.unit[x] = alt;
        const auto v = verify_adjunction(bad);
        CHECK_FALSE(v.ok);
        CHECK(v.violated);
        ++mutated;
      }
    }
  }
  CHECK(mutated > 0);
}

TEST_CASE("gaft agrees with the brute-force oracle") {
  int exists = 0;
  int total = 0;
  for (const auto& g : sweep()) {
    if (g.target->object_count() > 4 || g.source->morphism_count() > 16) continue;
    const auto r = gaft_decide(g);
    const auto bf = brute_force_left_adjoint(g);
    CHECK(r.exists == bf.exists);
    if (r.exists) {
      ++exists;
      CHECK(verify_adjunction(*r.certificate).ok);
      CHECK(bijection_natural(*r.certificate));
      // every adjoint found by brute force is isomorphic on objects to ours
      for (const auto& [f, unit] : bf.adjoints) {
        for (int x = 0; x < g.target->object_count(); ++x) {
          const int a = f.obj(x);
          const int b = r.certificate->left.obj(x);
          const auto ab = g.source->hom(a, b);
          CHECK(std::any_of(ab.begin(), ab.end(), [&](int m) { return g.source->is_iso(m); }));
        }
      }
    }
    ++total;
  }
  CHECK(exists > 0);
  CHECK(exists < total);
}

TEST_CASE("oracle bounds") {
  const auto big = catalog::chain(5);
  CHECK_THROWS_AS(brute_force_left_adjoint(identity_functor(big)), Error);
  CHECK(brute_force_left_adjoint(identity_functor(big), OracleBounds{5, 16}).exists);
}

TEST_CASE("duality sweep") {
  for (const auto& g : sweep()) {
    const auto left = gaft_decide(g);
    const auto right = decide_right_adjoint(opposite(g));
    CHECK(left.exists == right.exists);
    // right adjoints of g via the dual left-adjoint problem on opposites
    CHECK(decide_right_adjoint(g).exists == gaft_decide(opposite(g)).exists);
  }
}

TEST_CASE("coinitiality profile") {
  const auto c3 = catalog::chain3();
  for (const auto& r : coinitiality_profile(identity_functor(c3))) {
    CHECK(r.nonempty);
    CHECK(r.connected);
    CHECK(r.has_initial);
  }
  const auto incl = catalog::full_inclusion(c3, {0});
  const auto p = coinitiality_profile(incl);
  CHECK(p[2].nonempty);
  CHECK(p[2].connected);
  CHECK(p[2].has_initial);

  // disc2 inside the cospan x -> t <- y
  const auto cs = catalog::cospan();
  const auto q = coinitiality_profile(catalog::full_inclusion(cs, {0, 1}));
  CHECK(q[2].nonempty);
  CHECK_FALSE(q[2].connected);
  CHECK_FALSE(q[2].has_initial);
}

TEST_CASE("coinitial functors restrict limits") {
  // F: A -> B with an initial object in every F_{/d}: any limit of p on B is
  // a limit of p restricted along F, with the same apex.
  for (int n = 1; n <= 3; ++n) {
    for (const auto& b : catalog::posets_up_to_iso(n)) {
      for (int m = 1; m <= n; ++m) {
        for (const auto& a : catalog::posets_up_to_iso(m)) {
          for (const auto& f : all_functors(a, b)) {
            const auto prof = coinitiality_profile(f);
            if (!std::all_of(prof.begin(), prof.end(), [](const auto& r) { return r.has_initial; })) continue;
            for (const auto& p : all_functors(b, catalog::diamond())) {
              const auto lp = limit(p);
              const auto lpf = limit(compose(p, f));
              REQUIRE(lp.size() == 1);
              REQUIRE(lpf.size() == 1);
              CHECK(lp[0].apex == lpf[0].apex);
            }
          }
        }
      }
    }
  }
}
