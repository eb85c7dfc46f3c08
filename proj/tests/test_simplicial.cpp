#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "adjunct/adjoint.hpp"
#include "adjunct/catalog.hpp"
#include "adjunct/error.hpp"
#include "adjunct/limits.hpp"
#include "adjunct/simplicial.hpp"

using namespace adjunct;

namespace {

std::array<int, 4> counts(const TruncSSet& k) { return {k.count(0), k.count(1), k.count(2), k.count(3)}; }

// Sends each edge of the fundamental category to the morphism of the same
// name; identities to identities.
std::optional<FinFunctor> by_names(const CategoryRef& t, const CategoryRef& c) {
  std::vector<int> obj(static_cast<std::size_t>(t->object_count()));
  std::iota(obj.begin(), obj.end(), 0);
  std::vector<int> mor;
  for (int m = 0; m < t->morphism_count(); ++m) {
    if (t->is_identity(m)) {
      mor.push_back(c->identity(t->src(m)));
    } else if (auto f = c->find_morphism(t->name(m))) {
      mor.push_back(*f);
    } else {
      return std::nullopt;
    }
  }
  if (functor_violation(*t, *c, obj, mor)) return std::nullopt;
  return FinFunctor{t, c, obj, mor};
}

}  // namespace

TEST_CASE("nerve counts") {
  CHECK(counts(nerve(*catalog::terminal())) == std::array<int, 4>{1, 0, 0, 0});
  CHECK(counts(nerve(*catalog::chain3())) == std::array<int, 4>{3, 3, 1, 0});
  CHECK(counts(nerve(*catalog::chain(4))) == std::array<int, 4>{4, 6, 4, 1});
  const auto n = nerve(*catalog::chain3());
  CHECK(n.name(2, 0) == "0->1|1->2");
  // the middle face of the 2-simplex is the composite
  const Simplex d1 = n.face(nondegenerate(2, 0), 1);
  CHECK(n.name(1, d1.index) == "0->2");
  // an idempotent yields degenerate faces: e|e has d1 = e
  const auto m = nerve(*catalog::cyclic_group(2));
  CHECK(counts(m)[2] == 1);
  CHECK(m.faces(2, 0)[1].degenerate());
}

TEST_CASE("simplicial identities are enforced") {
  const auto n = nerve(*catalog::chain3());
  std::array<std::vector<std::string>, 4> names;
  std::array<std::vector<std::vector<Simplex>>, 4> faces;
  for (int d = 0; d <= 2; ++d) {
    for (int s = 0; s < n.count(d); ++s) {
      names[d].push_back(n.name(d, s));
      if (d > 0) faces[d].push_back(n.faces(d, s));
    }
  }
  CHECK_NOTHROW(TruncSSet::build(names, faces));
  std::swap(faces[2][0][0], faces[2][0][2]);
  CHECK_THROWS_AS(TruncSSet::build(names, faces), Error);
  faces[2][0][0].index = 9;
  CHECK_THROWS_AS(TruncSSet::build(names, faces), Error);
}

TEST_CASE("inner horns of nerves") {
  for (const auto& [id, c] : catalog::corpus()) {
    CAPTURE(id);
    CHECK(inner_horn_check(nerve(*c)).unique);
  }
  const auto b = boundary(2);
  CHECK_FALSE(inner_horn_check(b).unique);
  CHECK_THROWS_AS(initial_by_lifting(b, 0), Error);
  CHECK_FALSE(inner_horn_check(skeleton(nerve(*catalog::chain(4)), 2)).unique);
}

TEST_CASE("join with a point") {
  CHECK(isomorphic(join_point(standard_simplex(0)).sset, standard_simplex(1)));
  const auto j1 = join_point(standard_simplex(1));
  CHECK(j1.sset.count(2) == 1);
  CHECK(isomorphic(j1.sset, standard_simplex(2)));
  CHECK(isomorphic(join_point(nerve(*catalog::two())).sset, nerve(*catalog::chain3())));
  CHECK_FALSE(join_point(standard_simplex(2)).truncation_loss);
  CHECK(join_point(standard_simplex(3)).truncation_loss);

  for (const auto& [id, c] : catalog::corpus()) {
    const auto k = nerve(*c);
    const auto j = join_point(k);
    // K sits inside the cone unchanged
    for (int n = 1; n <= 3; ++n) {
      for (int s = 0; s < k.count(n); ++s) {
        CHECK(j.sset.name(n, s) == k.name(n, s));
        for (int i = 0; i <= n; ++i) {
          const Simplex& f = k.faces(n, s)[static_cast<std::size_t>(i)];
          const Simplex& g = j.sset.faces(n, s)[static_cast<std::size_t>(i)];
          CHECK(g.map == f.map);
          CHECK(g.index == (f.dim == 0 ? f.index + 1 : f.index));
        }
      }
    }
    // every vertex has a cone leg from the apex
    for (int v = 0; v < k.count(0); ++v) CHECK(j.sset.vertices(nondegenerate(1, k.count(1) + v)) == std::vector<int>{0, v + 1});
  }
}

TEST_CASE("fundamental category") {
  const auto b = tau1(boundary(2));
  CHECK(hom_set(b, "0", "2").size() == 2);
  const auto d = share(tau1(standard_simplex(2)));
  CHECK(find_isomorphism(d, catalog::chain3()));
  CHECK(d->is_thin());

  // a loop generates an infinite free category
  std::array<std::vector<std::string>, 4> names;
  std::array<std::vector<std::vector<Simplex>>, 4> faces;
  names[0] = {"v"};
  names[1] = {"l"};
  faces[1] = {{nondegenerate(0, 0), nondegenerate(0, 0)}};
  const auto loop = TruncSSet::build(names, faces);
  CHECK_THROWS_AS(tau1(loop, 50), Error);
}

TEST_CASE("tau1 inverts the nerve") {
  for (const auto& [id, c] : catalog::corpus()) {
    CAPTURE(id);
    const auto t = share(tau1(nerve(*c)));
    REQUIRE(t->morphism_count() == c->morphism_count());
    const auto f = by_names(t, c);
    REQUIRE(f);
    const auto p = functor_profile(*f);
    CHECK(p.full);
    CHECK(p.faithful);
    CHECK(t->objects() == c->objects());
  }
}

TEST_CASE("vertex slices") {
  const auto c3 = catalog::chain3();
  CHECK(isomorphic(vertex_slice(nerve(*c3), 2), skeleton(nerve(*c3), 2)));
  CHECK(vertex_slice(nerve(*catalog::disc2()), 0).count(0) == 1);
  CHECK(vertex_slice(nerve(*catalog::disc2()), 0).count(1) == 0);
  for (const auto& [id, c] : catalog::corpus()) {
    CAPTURE(id);
    const auto k = nerve(*c);
    for (int x = 0; x < c->object_count(); ++x) {
      const auto over = share(tau1(vertex_slice(k, x)));
      CHECK(find_isomorphism(over, comma_over(identity_functor(c), x).category));
      const auto under = share(tau1(vertex_slice(k, x, true)));
      CHECK(find_isomorphism(under, comma_under(identity_functor(c), x).category));
    }
  }
}

TEST_CASE("initiality by lifting") {
  const auto n = nerve(*catalog::chain3());
  CHECK(initial_by_lifting(n, 0));
  CHECK_FALSE(initial_by_lifting(n, 1));
  for (const auto& [id, c] : catalog::corpus()) {
    CAPTURE(id);
    const auto k = nerve(*c);
    const auto init = initial_objects(*c);
    for (int x = 0; x < c->object_count(); ++x) {
      CHECK(initial_by_lifting(k, x) == std::binary_search(init.begin(), init.end(), x));
    }
  }
}

TEST_CASE("opposites") {
  for (const auto& [id, c] : catalog::corpus()) {
    const auto k = nerve(*c);
    CHECK(opposite(opposite(k)) == k);
    CHECK(isomorphic(opposite(k), nerve(opposite(*c))));
  }
}
