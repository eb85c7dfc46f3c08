#include "adjunct/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace adjunct::catalog {

namespace {

RawCategory raw_from(const std::vector<std::string>& objects,
                     const std::vector<std::array<std::string, 3>>& morphisms,
                     const std::vector<std::array<std::string, 3>>& compose, bool closure) {
  RawCategory raw;
  raw.objects = objects;
  for (const auto& m : morphisms) raw.morphisms.push_back({m[0], m[1], m[2]});
  raw.compose = compose;
  raw.closure = closure;
  return raw;
}

}  // namespace

CategoryRef empty() { return share(FinCategory{}); }

CategoryRef terminal() { return discrete({"*"}); }

CategoryRef discrete(const std::vector<std::string>& names) {
  return preorder(names, [](int, int) { return false; });
}

CategoryRef disc2() { return discrete({"x", "y"}); }

CategoryRef preorder(const std::vector<std::string>& names, const std::function<bool(int, int)>& rel) {
  const int n = static_cast<int>(names.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) leq[i][j] = (i == j) || rel(i, j);
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
      }
    }
  }
  std::vector<Morphism> morphisms;
  std::vector<int> identities(n);
  std::vector<std::vector<int>> hom(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!leq[i][j]) continue;
      hom[i][j] = static_cast<int>(morphisms.size());
      if (i == j) identities[i] = hom[i][j];
      morphisms.push_back({i == j ? "id_" + names[i] : names[i] + "->" + names[j], i, j});
    }
  }
  auto dst = [&](int m) { return morphisms[m].dst; };
  auto src = [&](int m) { return morphisms[m].src; };
  return share(FinCategory::build(names, morphisms, identities,
                                  [&](int g, int f) { return hom[src(f)][dst(g)]; }));
}

CategoryRef chain(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return preorder(names, [](int i, int j) { return i <= j; });
}

CategoryRef two() { return chain(2); }
CategoryRef chain3() { return chain(3); }

CategoryRef diamond() {
  return preorder({"bot", "a", "b", "top"}, [](int i, int j) { return i == 0 || j == 3; });
}

CategoryRef cospan() {
  return preorder({"x", "y", "t"}, [](int i, int j) { return j == 2 && i != 2; });
}

CategoryRef span() {
  return preorder({"o", "l", "r"}, [](int i, int j) { return i == 0 && j != 0; });
}

CategoryRef parallel_pair() {
  return share(validate_category(raw_from({"s", "t"}, {{"a", "s", "t"}, {"b", "s", "t"}}, {}, true)));
}

CategoryRef free_boundary2() {
  return share(validate_category(
      raw_from({"0", "1", "2"}, {{"0->1", "0", "1"}, {"1->2", "1", "2"}, {"0->2", "0", "2"}}, {}, true)));
}

CategoryRef cyclic_group(int n) {
  std::vector<Morphism> morphisms;
  for (int k = 0; k < n; ++k) morphisms.push_back({k == 0 ? "id_*" : "r" + std::to_string(k), 0, 0});
  return share(FinCategory::build({"*"}, morphisms, {0}, [n](int g, int f) { return (g + f) % n; }));
}

CategoryRef idempotent_monoid() {
  return share(validate_category(raw_from({"*"}, {{"e", "*", "*"}}, {{"e", "e", "e"}}, true)));
}

CategoryRef walking_iso() {
  return share(validate_category(raw_from({"a", "b"}, {{"i", "a", "b"}, {"j", "b", "a"}},
                                          {{"j", "i", "id_a"}, {"i", "j", "id_b"}}, true)));
}

CategoryRef arrow_with_idempotent() {
  return share(validate_category(
      raw_from({"a", "b"}, {{"e", "a", "a"}, {"f", "a", "b"}}, {{"e", "e", "e"}, {"f", "e", "f"}}, true)));
}

CategoryRef coequalized_pair() {
  return share(validate_category(
      raw_from({"s", "t", "q"}, {{"a", "s", "t"}, {"b", "s", "t"}, {"c", "t", "q"}, {"d", "s", "q"}},
               {{"c", "a", "d"}, {"c", "b", "d"}}, true)));
}

CategoryRef product(const FinCategory& a, const FinCategory& b) {
  const int na = a.object_count();
  const int nb = b.object_count();
  const int mb = b.morphism_count();
  std::vector<std::string> objects;
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < nb; ++y) objects.push_back("(" + a.object(x) + "," + b.object(y) + ")");
  }
  std::vector<Morphism> morphisms;
  for (int f = 0; f < a.morphism_count(); ++f) {
    for (int g = 0; g < mb; ++g) {
      morphisms.push_back({"(" + a.name(f) + "," + b.name(g) + ")", a.src(f) * nb + b.src(g), a.dst(f) * nb + b.dst(g)});
    }
  }
  std::vector<int> identities;
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < nb; ++y) identities.push_back(a.identity(x) * mb + b.identity(y));
  }
  return share(FinCategory::build(std::move(objects), std::move(morphisms), std::move(identities),
                                  [&](int g, int f) {
                                    return a.compose(g / mb, f / mb) * mb + b.compose(g % mb, f % mb);
                                  }));
}

std::vector<CategoryRef> posets_up_to_iso(int n) {
  // Naturally labelled posets: i <= j only for i < j. Every poset has such a
  // labelling; duplicates are removed by a canonical code over permutations.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  auto code_of = [n](const std::vector<std::vector<bool>>& leq, const std::vector<int>& perm) {
    unsigned long long code = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) code = code * 2 + (leq[perm[i]][perm[j]] ? 1 : 0);
    }
    return code;
  };
  std::set<unsigned long long> seen;
  std::vector<std::pair<unsigned long long, std::vector<std::vector<bool>>>> found;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask & (1u << k)) leq[pairs[k].first][pairs[k].second] = true;
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i) {
      for (int j = 0; j < n && transitive; ++j) {
        for (int k = 0; k < n && transitive; ++k) {
          if (leq[i][j] && leq[j][k] && !leq[i][k]) transitive = false;
        }
      }
    }
    if (!transitive) continue;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    unsigned long long best = ~0ull;
    std::vector<int> best_perm = perm;
    do {
      // only naturally labelled relabellings keep the canonical form natural
      bool natural = true;
      for (int i = 0; i < n && natural; ++i) {
        for (int j = 0; j < n && natural; ++j) {
          if (leq[perm[i]][perm[j]] && i > j) natural = false;
        }
      }
      if (!natural) continue;
      const auto code = code_of(leq, perm);
      if (code < best) {
        best = code;
        best_perm = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!seen.insert(best).second) continue;
    std::vector<std::vector<bool>> canon(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) canon[i][j] = leq[best_perm[i]][best_perm[j]];
    }
    found.emplace_back(best, std::move(canon));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<CategoryRef> out;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (const auto& [code, leq] : found) {
    out.push_back(preorder(names, [&](int i, int j) { return leq[i][j]; }));
  }
  return out;
}

std::vector<NamedCategory> curated() {
  std::vector<NamedCategory> out = {
      {"parallel_pair", parallel_pair()},
      {"free_boundary2", free_boundary2()},
      {"z2", cyclic_group(2)},
      {"z3", cyclic_group(3)},
      {"idempotent", idempotent_monoid()},
      {"walking_iso", walking_iso()},
      {"arrow_idempotent", arrow_with_idempotent()},
      {"coequalized_pair", coequalized_pair()},
      {"two_x_idempotent", product(*two(), *idempotent_monoid())},
      {"z2_x_two", product(*cyclic_group(2), *two())},
      {"z2_x_z2", product(*cyclic_group(2), *cyclic_group(2))},
  };
  return out;
}

std::vector<NamedCategory> corpus() {
  std::vector<NamedCategory> out;
  for (int n = 0; n <= 4; ++n) {
    const auto ps = posets_up_to_iso(n);
    for (std::size_t k = 0; k < ps.size(); ++k) {
      out.push_back({"poset" + std::to_string(n) + "_" + std::to_string(k), ps[k]});
    }
  }
  for (auto& c : curated()) out.push_back(std::move(c));
  return out;
}

FinFunctor thin_functor(CategoryRef source, CategoryRef target, std::vector<int> obj_map) {
  std::vector<int> mor(source->morphism_count());
  for (int m = 0; m < source->morphism_count(); ++m) {
    auto h = target->hom(obj_map[source->src(m)], obj_map[source->dst(m)]);
    if (h.empty()) throw Error(ErrorCode::NotFunctorial, "object map is not monotone at " + source->name(m));
    mor[m] = h[0];
  }
  return make_functor(std::move(source), std::move(target), std::move(obj_map), std::move(mor));
}

FinFunctor named_functor(CategoryRef source, CategoryRef target,
                         const std::vector<std::pair<std::string, std::string>>& objects,
                         const std::vector<std::pair<std::string, std::string>>& morphisms) {
  RawFunctor raw;
  for (const auto& [a, b] : objects) raw.obj_map[a] = b;
  for (const auto& [a, b] : morphisms) raw.mor_map[a] = b;
  return validate_functor(raw, std::move(source), std::move(target));
}

FinFunctor full_inclusion(CategoryRef c, const std::vector<int>& objects) {
  std::vector<int> where(c->object_count(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    where[objects[i]] = static_cast<int>(i);
    names.push_back(c->object(objects[i]));
  }
  std::vector<Morphism> morphisms;
  std::vector<int> mor_map;
  std::vector<int> local(c->morphism_count(), -1);
  for (int m = 0; m < c->morphism_count(); ++m) {
    if (where[c->src(m)] < 0 || where[c->dst(m)] < 0) continue;
    local[m] = static_cast<int>(morphisms.size());
    morphisms.push_back({c->name(m), where[c->src(m)], where[c->dst(m)]});
    mor_map.push_back(m);
  }
  std::vector<int> identities;
  for (int x : objects) identities.push_back(local[c->identity(x)]);
  auto sub = share(FinCategory::build(names, morphisms, identities, [&](int g, int f) {
    return local[c->compose(mor_map[g], mor_map[f])];
  }));
  return make_functor(sub, c, objects, mor_map);
}

}  // namespace adjunct::catalog
