#include "adjunct/brown.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

#include "adjunct/error.hpp"
#include "adjunct/limits.hpp"

namespace adjunct {
namespace {

using std::size_t;

int position(std::span<const int> hom, int m) {
  const auto it = std::find(hom.begin(), hom.end(), m);
  return it == hom.end() ? -1 : static_cast<int>(it - hom.begin());
}

std::optional<std::string> set_functor_violation(const FinCategory& c, const std::vector<std::vector<std::string>>& sets,
                                                 const std::vector<std::vector<int>>& maps) {
  if (static_cast<int>(sets.size()) != c.object_count() || static_cast<int>(maps.size()) != c.morphism_count()) {
    return "tables do not match the base category";
  }
  for (int f = 0; f < c.morphism_count(); ++f) {
    const auto& m = maps[f];
    if (m.size() != sets[c.dst(f)].size()) return "F(" + c.name(f) + ") is not defined on all of F(" + c.object(c.dst(f)) + ")";
    for (int v : m) {
      if (v < 0 || v >= static_cast<int>(sets[c.src(f)].size())) return "F(" + c.name(f) + ") leaves F(" + c.object(c.src(f)) + ")";
    }
    if (c.is_identity(f)) {
      for (size_t e = 0; e < m.size(); ++e) {
        if (m[e] != static_cast<int>(e)) return "F(" + c.name(f) + ") is not an identity";
      }
    }
  }
  for (int f = 0; f < c.morphism_count(); ++f) {
    for (int g : c.out(c.dst(f))) {
      const auto& gf = maps[c.compose(g, f)];
      for (size_t e = 0; e < gf.size(); ++e) {
        if (gf[e] != maps[f][maps[g][e]]) return "F(" + c.name(g) + " . " + c.name(f) + ") != F(" + c.name(f) + ") . F(" + c.name(g) + ")";
      }
    }
  }
  return std::nullopt;
}

// e ↦ (F(l)e, F(r)e) from F(w) into F(y) x F(z); optionally only onto the
// part where F(f)a = F(g)b.
struct PairImage {
  bool injective = true;
  std::size_t size = 0;
  std::set<std::pair<int, int>> image;
};

PairImage pair_image(const SetFunctor& F, int w, int l, int r) {
  PairImage p;
  for (int e = 0; e < F.size(w); ++e) {
    if (!p.image.emplace(F.apply(l, e), F.apply(r, e)).second) p.injective = false;
  }
  p.size = p.image.size();
  return p;
}

std::string pair_name(const FinCategory& c, int x, int y) { return c.object(x) + " + " + c.object(y); }

}  // namespace

SetFunctor make_set_functor(CategoryRef base, std::vector<std::vector<std::string>> sets,
                            std::vector<std::vector<int>> maps) {
  if (auto why = set_functor_violation(*base, sets, maps)) throw Error(ErrorCode::NotFunctorial, *why);
  return SetFunctor{std::move(base), std::move(sets), std::move(maps)};
}

SetFunctor representable(const CategoryRef& c, int a) {
  SetFunctor F{c, {}, {}};
  for (int x = 0; x < c->object_count(); ++x) {
    std::vector<std::string> s;
    for (int h : c->hom(x, a)) s.push_back(c->name(h));
    F.sets.push_back(std::move(s));
  }
  for (int f = 0; f < c->morphism_count(); ++f) {
    std::vector<int> m;
    for (int h : c->hom(c->dst(f), a)) m.push_back(position(c->hom(c->src(f), a), c->compose(h, f)));
    F.maps.push_back(std::move(m));
  }
  return F;
}

SetFunctor hom_into(const FinFunctor& f, int d) {
  const FinCategory& c = *f.source;
  const FinCategory& t = *f.target;
  SetFunctor F{f.source, {}, {}};
  for (int x = 0; x < c.object_count(); ++x) {
    std::vector<std::string> s;
    for (int h : t.hom(f.obj(x), d)) s.push_back(t.name(h));
    F.sets.push_back(std::move(s));
  }
  for (int m = 0; m < c.morphism_count(); ++m) {
    std::vector<int> row;
    for (int h : t.hom(f.obj(c.dst(m)), d)) row.push_back(position(t.hom(f.obj(c.src(m)), d), t.compose(h, f.mor(m))));
    F.maps.push_back(std::move(row));
  }
  return F;
}

BrownReport check_B1(const SetFunctor& F) {
  const FinCategory& c = *F.base;
  const auto init = initial_objects(c);
  if (init.empty()) throw Error(ErrorCode::CoproductAbsent, "empty coproduct: no initial object");
  // absence is reported before any verdict
  std::vector<std::tuple<int, int, std::vector<Cone>>> binary;
  for (int x = 0; x < c.object_count(); ++x) {
    for (int y = 0; y < c.object_count(); ++y) {
      auto cocones = colimit(pair_diagram(F.base, x, y));
      if (cocones.empty()) throw Error(ErrorCode::CoproductAbsent, "no coproduct " + pair_name(c, x, y));
      binary.emplace_back(x, y, std::move(cocones));
    }
  }
  BrownReport r;
  for (int i : init) {
    if (F.size(i) != 1) {
      r.holds = false;
      r.witness = BrownWitness{"empty coproduct", {i}, {}};
      return r;
    }
  }
  for (const auto& [x, y, cocones] : binary) {
    for (const auto& k : cocones) {
      const auto p = pair_image(F, k.apex, k.legs[0], k.legs[1]);
      if (!p.injective || p.size != static_cast<size_t>(F.size(x) * F.size(y))) {
        r.holds = false;
        r.witness = BrownWitness{"binary coproduct", {x, y, k.apex}, {k.legs[0], k.legs[1]}};
        return r;
      }
    }
  }
  return r;
}

BrownReport check_B2(const SetFunctor& F) {
  const FinCategory& c = *F.base;
  std::vector<std::tuple<int, int, std::vector<Cone>>> spans;
  for (int f = 0; f < c.morphism_count(); ++f) {
    for (int g : c.out(c.src(f))) {
      auto squares = pushouts(F.base, f, g);
      if (squares.empty()) throw Error(ErrorCode::PushoutAbsent, "no pushout of " + c.name(f) + " and " + c.name(g));
      spans.emplace_back(f, g, std::move(squares));
    }
  }
  BrownReport r;
  for (const auto& [f, g, squares] : spans) {
    const int x = c.src(f), y = c.dst(f), z = c.dst(g);
    std::size_t pullback = 0;
    for (int a = 0; a < F.size(y); ++a) {
      for (int b = 0; b < F.size(z); ++b) pullback += F.apply(f, a) == F.apply(g, b);
    }
    for (const auto& k : squares) {
      // every image pair lies in the pullback, so counting suffices
      const auto p = pair_image(F, k.apex, k.legs[1], k.legs[2]);
      if (p.size != pullback) {
        r.holds = false;
        r.witness = BrownWitness{"pushout", {x, y, z, k.apex}, {f, g, k.legs[1], k.legs[2]}};
        return r;
      }
    }
  }
  return r;
}

Representation representability_search(const SetFunctor& F) {
  const FinCategory& c = *F.base;
  Representation rep;
  for (int x = 0; x < c.object_count(); ++x) {
    std::string obstruction;
    for (int y = 0; y < c.object_count() && obstruction.empty(); ++y) {
      if (static_cast<int>(c.hom(y, x).size()) != F.size(y)) {
        obstruction = "|hom(" + c.object(y) + ", " + c.object(x) + ")| != |F(" + c.object(y) + ")|";
      }
    }
    if (obstruction.empty()) {
      for (int e = 0; e < F.size(x); ++e) {
        std::vector<std::vector<int>> comps;
        bool bijective = true;
        for (int y = 0; y < c.object_count() && bijective; ++y) {
          std::vector<int> row;
          for (int h : c.hom(y, x)) row.push_back(F.apply(h, e));
          auto sorted = row;
          std::sort(sorted.begin(), sorted.end());
          bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
          comps.push_back(std::move(row));
        }
        if (bijective) {
          rep.representable = true;
          rep.object = x;
          rep.element = e;
          rep.components = std::move(comps);
          rep.obstructions.clear();
          return rep;
        }
      }
      obstruction = "no element of F(" + c.object(x) + ") induces a bijection";
    }
    rep.obstructions.push_back(c.object(x) + ": " + obstruction);
  }
  return rep;
}

std::vector<std::vector<int>> weak_generators(const FinCategory& c) {
  const int n = c.object_count();
  std::vector<int> nonisos;
  for (int f = 0; f < c.morphism_count(); ++f) {
    if (!c.is_iso(f)) nonisos.push_back(f);
  }
  // detects[g]: the non-isomorphisms f for which hom(g, f) is not bijective
  std::vector<std::vector<bool>> detects(static_cast<size_t>(n), std::vector<bool>(nonisos.size(), false));
  for (int g = 0; g < n; ++g) {
    for (size_t i = 0; i < nonisos.size(); ++i) {
      const int f = nonisos[i];
      std::set<int> image;
      for (int h : c.hom(g, c.src(f))) image.insert(c.compose(f, h));
      detects[g][i] = image.size() != c.hom(g, c.src(f)).size() || image.size() != c.hom(g, c.dst(f)).size();
    }
  }
  auto covers = [&](unsigned mask) {
    for (size_t i = 0; i < nonisos.size(); ++i) {
      bool hit = false;
      for (int g = 0; g < n && !hit; ++g) hit = (mask >> g & 1u) && detects[g][i];
      if (!hit) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!covers(mask)) continue;
    bool minimal = true;
    for (int g = 0; g < n && minimal; ++g) {
      if (mask >> g & 1u) minimal = !covers(mask & ~(1u << g));
    }
    if (!minimal) continue;
    std::vector<int> members;
    for (int g = 0; g < n; ++g) {
      if (mask >> g & 1u) members.push_back(g);
    }
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BrownPrimeReport check_B1p_B2p(const FinFunctor& F) {
  const FinCategory& c = *F.source;
  const FinCategory& d = *F.target;
  BrownPrimeReport r;
  auto fail_b1 = [&](PreservationWitness w) {
    if (r.b1 && r.b2) r.witness = std::move(w);
    r.b1 = false;
  };
  auto image = [&](const Cone& k) {
    Cone out{F.obj(k.apex), {}};
    for (int l : k.legs) out.legs.push_back(F.mor(l));
    return out;
  };
  const auto init = initial_objects(c);
  if (init.empty()) throw Error(ErrorCode::ColimitAbsent, "empty coproduct: no initial object in the source");
  const auto d_init = initial_objects(d);
  for (int i : init) {
    if (!std::binary_search(d_init.begin(), d_init.end(), F.obj(i))) {
      fail_b1({"empty coproduct", {i}, {}});
      break;
    }
  }
  for (int x = 0; x < c.object_count() && r.b1; ++x) {
    for (int y = 0; y < c.object_count() && r.b1; ++y) {
      const auto cocones = colimit(pair_diagram(F.source, x, y));
      if (cocones.empty()) throw Error(ErrorCode::ColimitAbsent, "no coproduct " + pair_name(c, x, y));
      for (const auto& k : cocones) {
        if (!is_colimit_cocone(pair_diagram(F.target, F.obj(x), F.obj(y)), image(k))) {
          fail_b1({"binary coproduct", {x, y, k.apex}, {k.legs[0], k.legs[1]}});
          break;
        }
      }
    }
  }
  for (int f = 0; f < c.morphism_count() && r.b2; ++f) {
    for (int g : c.out(c.src(f))) {
      const auto squares = pushouts(F.source, f, g);
      if (squares.empty()) throw Error(ErrorCode::ColimitAbsent, "no pushout of " + c.name(f) + " and " + c.name(g));
      for (const auto& k : squares) {
        if (!is_weak_colimit_cocone(span_diagram(F.target, F.mor(f), F.mor(g)), image(k))) {
          if (r.b1) r.witness = PreservationWitness{"pushout", {c.src(f), c.dst(f), c.dst(g), k.apex}, {f, g, k.legs[1], k.legs[2]}};
          r.b2 = false;
          break;
        }
      }
      if (!r.b2) break;
    }
  }
  r.holds = r.b1 && r.b2;
  return r;
}

ExperimentalBrown brown_property_experimental(const CategoryRef& cref, int max_size) {
  const FinCategory& c = *cref;
  const int n = c.object_count();
  ExperimentalBrown out;
  std::vector<int> sizes(static_cast<size_t>(n), 0);
  std::vector<int> order;  // nonidentity morphisms
  for (int f = 0; f < c.morphism_count(); ++f) {
    if (!c.is_identity(f)) order.push_back(f);
  }
  while (true) {
    SetFunctor F{cref, {}, std::vector<std::vector<int>>(static_cast<size_t>(c.morphism_count()))};
    for (int x = 0; x < n; ++x) {
      std::vector<std::string> s;
      for (int e = 0; e < sizes[x]; ++e) s.push_back("e" + std::to_string(e));
      F.sets.push_back(std::move(s));
      auto& id = F.maps[static_cast<size_t>(c.identity(x))];
      id.resize(static_cast<size_t>(sizes[x]));
      std::iota(id.begin(), id.end(), 0);
    }
    std::vector<bool> assigned(static_cast<size_t>(c.morphism_count()), false);
    for (int x = 0; x < n; ++x) assigned[c.identity(x)] = true;
    auto consistent = [&](int f) {
      for (int a = 0; a < c.morphism_count(); ++a) {
        for (int b : c.out(c.dst(a))) {
          const int ba = c.compose(b, a);
          if (a != f && b != f && ba != f) continue;
          if (!assigned[a] || !assigned[b] || !assigned[ba]) continue;
          for (size_t e = 0; e < F.maps[ba].size(); ++e) {
            if (F.maps[ba][e] != F.maps[a][F.maps[b][e]]) return false;
          }
        }
      }
      return true;
    };
    std::function<void(size_t)> go = [&](size_t i) {
      if (out.counterexample) return;
      if (i == order.size()) {
        ++out.enumerated;
        if (check_B1(F).holds && check_B2(F).holds) {
          ++out.satisfying;
          if (!representability_search(F).representable) {
            out.holds = false;
            out.counterexample = F;
          }
        }
        return;
      }
      const int f = order[i];
      const int from = sizes[c.dst(f)];
      const int to = sizes[c.src(f)];
      if (from > 0 && to == 0) return;
      std::vector<int> m(static_cast<size_t>(from), 0);
      while (true) {
        F.maps[f] = m;
        assigned[f] = true;
        if (consistent(f)) go(i + 1);
        assigned[f] = false;
        int p = from - 1;
        while (p >= 0 && ++m[p] == to) m[p--] = 0;
        if (p < 0) break;
      }
    };
    go(0);
    int x = n - 1;
    while (x >= 0 && ++sizes[x] > max_size) sizes[x--] = 0;
    if (x < 0 || out.counterexample) break;
  }
  return out;
}

}  // namespace adjunct
