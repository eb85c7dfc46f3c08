#include "adjunct/suites.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "adjunct/adjoint.hpp"
#include "adjunct/brown.hpp"
#include "adjunct/catalog.hpp"
#include "adjunct/error.hpp"
#include "adjunct/limits.hpp"
#include "adjunct/simplicial.hpp"
#include "adjunct/trunc2.hpp"

namespace adjunct::suites {
namespace {

struct Instance {
  std::string id;
  FinFunctor functor;
};

void add_functors(std::vector<Instance>& out, const catalog::NamedCategory& a, const catalog::NamedCategory& b) {
  std::size_t k = 0;
  enumerate_functors(*a.category, *b.category, [&](const std::vector<int>& o, const std::vector<int>& m) {
    out.push_back({a.id + "->" + b.id + "#" + std::to_string(k++), FinFunctor{a.category, b.category, o, m}});
    return true;
  });
}

std::vector<catalog::NamedCategory> posets_upto(int n) {
  std::vector<catalog::NamedCategory> out;
  for (const auto& c : catalog::corpus()) {
    if (c.category->is_thin() && c.id.rfind("poset", 0) == 0 && c.category->object_count() <= n) out.push_back(c);
  }
  return out;
}

std::vector<catalog::NamedCategory> curated_upto(int morphisms) {
  std::vector<catalog::NamedCategory> out;
  for (const auto& c : catalog::curated()) {
    if (c.category->morphism_count() <= morphisms) out.push_back(c);
  }
  return out;
}

bool contains(const std::vector<int>& sorted, int x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

// tau1(K) for K a nerve: objects and non-identity morphisms keep their names.
bool names_round_trip(const CategoryRef& c, const CategoryRef& t) {
  if (t->objects() != c->objects() || t->morphism_count() != c->morphism_count()) return false;
  std::vector<int> obj(static_cast<std::size_t>(t->object_count()));
  std::iota(obj.begin(), obj.end(), 0);
  std::vector<int> mor;
  for (int m = 0; m < t->morphism_count(); ++m) {
    if (t->is_identity(m)) {
      mor.push_back(c->identity(t->src(m)));
    } else if (const auto f = c->find_morphism(t->name(m))) {
      mor.push_back(*f);
    } else {
      return false;
    }
  }
  if (functor_violation(*t, *c, obj, mor)) return false;
  return std::set<int>(mor.begin(), mor.end()).size() == mor.size();
}

SetFunctor on_two(std::vector<std::string> f0, std::vector<std::string> f1, std::vector<int> along) {
  const auto c = catalog::two();
  std::vector<std::vector<std::string>> sets{std::move(f0), std::move(f1)};
  std::vector<std::vector<int>> maps(static_cast<std::size_t>(c->morphism_count()));
  for (int m = 0; m < c->morphism_count(); ++m) {
    if (c->is_identity(m)) {
      maps[m].resize(sets[c->src(m)].size());
      std::iota(maps[m].begin(), maps[m].end(), 0);
    } else {
      maps[m] = along;
    }
  }
  return make_set_functor(c, std::move(sets), std::move(maps));
}

GpdFunctor pick_y() { return make_gpd_functor(embed(catalog::terminal()), pz2(), {1}, {{0}}, {{0}}); }

std::optional<bool> brown_verdict(const std::function<BrownReport()>& run) {
  try {
    return run().holds;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CoproductAbsent && e.code() != ErrorCode::PushoutAbsent) throw;
    return std::nullopt;
  }
}

// Quotient of a random preorder onto its skeleton.
FinFunctor preorder_quotient(std::mt19937& rng) {
  const int n = std::uniform_int_distribution<int>(1, 5)(rng);
  std::bernoulli_distribution edge(0.35);
  std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (auto& row : rel) {
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = edge(rng);
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  const auto p = catalog::preorder(names, [&](int i, int j) { return rel[i][j]; });
  auto leq = [&](int i, int j) { return !p->hom(i, j).empty(); };
  std::vector<int> cls(static_cast<std::size_t>(n), -1), reps;
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < reps.size() && cls[i] < 0; ++k) {
      if (leq(i, reps[k]) && leq(reps[k], i)) cls[i] = static_cast<int>(k);
    }
    if (cls[i] < 0) {
      cls[i] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }
  std::vector<std::string> class_names;
  for (int r : reps) class_names.push_back("[" + names[r] + "]");
  const auto s = catalog::preorder(class_names, [&](int i, int j) { return leq(reps[i], reps[j]); });
  return catalog::thin_functor(p, s, cls);
}

FinFunctor random_isomorphism(std::mt19937& rng, const std::vector<catalog::NamedCategory>& pool) {
  const auto& c = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)].category;
  std::vector<int> objects(static_cast<std::size_t>(c->object_count())), morphisms(static_cast<std::size_t>(c->morphism_count()));
  std::iota(objects.begin(), objects.end(), 0);
  std::iota(morphisms.begin(), morphisms.end(), 0);
  std::shuffle(objects.begin(), objects.end(), rng);
  std::shuffle(morphisms.begin(), morphisms.end(), rng);
  return relabel(c, objects, morphisms, "r").second;
}

}  // namespace

void Check::record(bool ok, const std::string& instance) {
  if (ok) {
    ++passed;
  } else {
    ++failed;
    if (!counterexample) counterexample = instance;
  }
}

std::vector<Check> gaft_oracle() {
  std::vector<Instance> posets, others;
  const auto ps = posets_upto(4);
  for (const auto& a : ps) {
    for (const auto& b : ps) add_functors(posets, a, b);
  }
  // at least one side outside the posets
  const auto curated = curated_upto(8);
  const auto small = posets_upto(2);
  for (const auto& a : curated) {
    for (const auto& b : curated) add_functors(others, a, b);
    for (const auto& p : small) {
      add_functors(others, a, p);
      add_functors(others, p, a);
    }
  }
  const OracleBounds bounds{4, 16};
  auto sweep = [&](const char* name, const std::vector<Instance>& instances) {
    Check check{name};
    for (const auto& [id, g] : instances) {
      if (g.target->object_count() > bounds.max_objects || g.source->morphism_count() > bounds.max_morphisms) continue;
      const auto r = gaft_decide(g);
      const auto bf = brute_force_left_adjoint(g, bounds);
      bool ok = r.exists == bf.exists;
      if (ok && r.exists) ok = verify_adjunction(*r.certificate).ok;
      check.record(ok, id);
    }
    return check;
  };
  return {sweep("gaft_oracle_posets", posets), sweep("gaft_oracle_curated", others)};
}

Check identity_limits() {
  Check check{"identity_limits"};
  for (const auto& [id, c] : catalog::corpus()) {
    std::set<int> apexes;
    for (const auto& k : identity_limits(c)) apexes.insert(k.apex);
    const auto init = initial_objects(*c);
    check.record(std::vector<int>(apexes.begin(), apexes.end()) == init, id);
  }
  return check;
}

Check nerve_round_trip() {
  Check check{"nerve_round_trip"};
  for (const auto& [id, c] : catalog::corpus()) {
    const auto k = nerve(*c);
    check.record(names_round_trip(c, share(tau1(k))), id + " tau1");
    const auto init = initial_objects(*c);
    for (int x = 0; x < c->object_count(); ++x) {
      check.record(initial_by_lifting(k, x) == contains(init, x), id + " lifting at " + c->object(x));
    }
  }
  return check;
}

Check solution_transfer() {
  Check check{"solution_transfer"};
  for (const auto& [id, g] : enriched_functors()) {
    for (int c = 0; c < g.target->object_count(); ++c) {
      const auto t = solution_set_transfer(g, c);
      check.record(t.enriched_has == t.homotopy_has && t.lifted && t.pushed, id + " at " + g.target->object(c));
    }
  }
  return check;
}

Check pz2_fixture() {
  Check check{"pz2_fixture"};
  const auto p = pz2();
  const auto m = mapping_invariants(*p, 0, 1);
  check.record(m.components == 1 && m.automorphism_orders == std::vector<int>{2}, "mapping invariants of hom(x, y)");
  const auto x = classify_object(*p, 0);
  check.record(!x.initial, "x is not initial");
  check.record(x.h_initial, "x is h-initial");
  const auto a = homotopy_adjoint_compare(pick_y());
  check.record(a.h_adjoint && !a.full_adjoint, "h-adjoint without a full adjoint");
  const auto pr = comparison_functor(pick_y(), 0).profile;
  check.record(pr.surjective_on_objects && pr.full && pr.conservative && !pr.equalizing_pairs, "comparison profile");
  return check;
}

Check reflection(std::uint32_t seed, std::size_t count) {
  Check check{"reflection"};
  std::mt19937 rng(seed);
  const auto pool = catalog::corpus();
  std::size_t generated = 0;
  for (std::size_t attempt = 0; generated < count && attempt < 100 * count; ++attempt) {
    const FinFunctor f = attempt % 2 == 0 ? preorder_quotient(rng) : random_isomorphism(rng, pool);
    const auto r = initial_reflection_check(f);
    if (!r.applies) continue;
    ++generated;
    std::string id = "generated #" + std::to_string(attempt);
    if (r.witness) id += " at " + f.source->object(*r.witness);
    check.record(r.reflects, id);
  }
  check.record(generated >= count, "generated " + std::to_string(generated) + " of " + std::to_string(count));
  const auto pz = initial_reflection_check(comparison_functor(pick_y(), 0).functor);
  check.record(!pz.applies && !pz.reflects, "pz2 comparison functor");
  return check;
}

Check finite_completeness() {
  Check check{"finite_completeness"};
  for (const auto& [id, c] : catalog::corpus()) {
    check.record(!has_finite_limits(c).has_finite_limits || !initial_objects(*c).empty(), id);
  }
  return check;
}

Check brown_necessity() {
  Check check{"brown_necessity"};
  for (const auto& [id, c] : catalog::corpus()) {
    for (int a = 0; a < c->object_count(); ++a) {
      const auto F = representable(c, a);
      const std::string where = id + " hom(-, " + c->object(a) + ")";
      if (const auto b1 = brown_verdict([&] { return check_B1(F); })) check.record(*b1, where + " B1");
      if (const auto b2 = brown_verdict([&] { return check_B2(F); })) check.record(*b2, where + " B2");
      const auto rep = representability_search(F);
      bool iso = false;
      if (rep.representable) {
        for (int m : c->hom(rep.object, a)) iso = iso || c->is_iso(m);
      }
      check.record(iso, where + " Yoneda");
    }
  }
  const auto fixture = check_B2(on_two({"*"}, {"a", "b"}, {0, 0}));
  check.record(!fixture.holds && fixture.witness && fixture.witness->objects == std::vector<int>{0, 1, 1, 1},
               "two-object fixture square");
  return check;
}

Check duality() {
  Check check{"duality"};
  for (const auto& [id, c] : catalog::corpus()) {
    check.record(terminal_objects(*c) == initial_objects(opposite(*c)), id + " terminal vs opposite initial");
  }
  std::vector<Instance> instances;
  auto cats = posets_upto(3);
  for (auto& c : curated_upto(6)) cats.push_back(std::move(c));
  for (const auto& a : cats) {
    for (const auto& b : cats) add_functors(instances, a, b);
  }
  for (const auto& [id, g] : instances) {
    check.record(gaft_decide(g).exists == decide_right_adjoint(opposite(g)).exists, id);
  }
  return check;
}

Check fixtures() {
  Check check{"fixtures"};
  const auto g = catalog::thin_functor(catalog::chain3(), catalog::two(), {0, 1, 1});
  const auto r = gaft_decide(g);
  check.record(r.exists && r.certificate->left.obj_map == std::vector<int>{0, 1} && verify_adjunction(*r.certificate).ok,
               "chain3 -> two left adjoint");
  const auto b = tau1(boundary(2));
  check.record(hom_set(b, "0", "2").size() == 2, "tau1 of the 2-boundary");
  const auto b1 = check_B1(on_two({"*", "u"}, {"a"}, {0}));
  check.record(!b1.holds && b1.witness && b1.witness->kind == "empty coproduct", "B1 at the empty coproduct");
  check.record(!representability_search(on_two({"*"}, {"a", "b"}, {0, 0})).representable, "B2 fixture not representable");
  check.record(weak_generators(*catalog::chain3()) == std::vector<std::vector<int>>{{1, 2}}, "weak generators of chain3");
  const auto bp = check_B1p_B2p(catalog::thin_functor(catalog::terminal(), catalog::two(), {1}));
  check.record(!bp.b1 && bp.witness && bp.witness->kind == "empty coproduct", "B1' for terminal -> two at 1");
  const auto gf = gaft_fin_decide(pick_y());
  check.record(!gf.exists && !gf.table[0].initial && gf.table[1].initial == 0, "pz2 gaft_fin table");
  return check;
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
}

io::ordered_json Report::to_json() const {
  io::ordered_json j;
  j["verdict"] = ok() ? "pass" : "fail";
  j["suite"] = suite;
  j["seed"] = seed;
  j["checks"] = io::ordered_json::array();
  for (const auto& c : checks) {
    io::ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["failed"] = c.failed;
    cj["counterexample"] = c.counterexample ? io::ordered_json(*c.counterexample) : io::ordered_json(nullptr);
    j["checks"].push_back(std::move(cj));
  }
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"posets4", "fixtures", "enriched", "oracle"};
  return names;
}

Report run(std::string_view suite, std::uint32_t seed) {
  Report r{std::string(suite), seed, {}};
  if (suite == "posets4") {
    r.checks = {identity_limits(), nerve_round_trip(), finite_completeness(), brown_necessity(), duality()};
  } else if (suite == "fixtures") {
    r.checks = {pz2_fixture(), fixtures()};
  } else if (suite == "enriched") {
    r.checks = {solution_transfer(), reflection(seed)};
  } else if (suite == "oracle") {
    r.checks = gaft_oracle();
  } else {
    throw Error(ErrorCode::UnknownVerb, "unknown suite '" + std::string(suite) + "'");
  }
  return r;
}

}  // namespace adjunct::suites
