#include "adjunct/category.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "adjunct/presentation.hpp"

namespace adjunct {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::MissingComposite: return "MissingComposite";
    case ErrorCode::AssociativityViolation: return "AssociativityViolation";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::ClosureBoundExceeded: return "ClosureBoundExceeded";
    case ErrorCode::InconsistentPresentation: return "InconsistentPresentation";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::NotFunctorial: return "NotFunctorial";
    case ErrorCode::LimitAbsentInSource: return "LimitAbsentInSource";
    case ErrorCode::WitnessNotInitial: return "WitnessNotInitial";
    case ErrorCode::OracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorCode::LawViolation: return "LawViolation";
    case ErrorCode::NotANerve: return "NotANerve";
    case ErrorCode::CoproductAbsent: return "CoproductAbsent";
    case ErrorCode::PushoutAbsent: return "PushoutAbsent";
    case ErrorCode::ColimitAbsent: return "ColimitAbsent";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVerb: return "UnknownVerb";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Error";
}

// ---------------------------------------------------------------------------
// FinCategory
// ---------------------------------------------------------------------------

FinCategory FinCategory::build(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<int> identities,
                               const std::function<int(int, int)>& compose) {
  FinCategory c;
  c.objects_ = std::move(objects);
  c.morphisms_ = std::move(morphisms);
  c.identities_ = std::move(identities);
  const int n = c.object_count();
  const int m = c.morphism_count();

  for (int x = 0; x < n; ++x) {
    if (!c.object_lookup_.emplace(c.objects_[x], x).second) {
      throw Error(ErrorCode::MalformedInput, "duplicate object '" + c.objects_[x] + "'");
    }
  }
  for (int f = 0; f < m; ++f) {
    const auto& mf = c.morphisms_[f];
    if (mf.src < 0 || mf.src >= n || mf.dst < 0 || mf.dst >= n) {
      throw Error(ErrorCode::MalformedInput, "morphism '" + mf.id + "' has an unknown endpoint");
    }
    if (!c.morphism_lookup_.emplace(mf.id, f).second) {
      throw Error(ErrorCode::MalformedInput, "duplicate morphism '" + mf.id + "'");
    }
  }
  if (static_cast<int>(c.identities_.size()) != n) {
    throw Error(ErrorCode::IdentityViolation, "identity table does not cover every object");
  }
  for (int x = 0; x < n; ++x) {
    const int i = c.identities_[x];
    if (i < 0 || i >= m || c.morphisms_[i].src != x || c.morphisms_[i].dst != x) {
      throw Error(ErrorCode::IdentityViolation, "identity of '" + c.objects_[x] + "' is not an endomorphism of it");
    }
  }

  c.homs_.assign(static_cast<std::size_t>(n) * n, {});
  c.out_.assign(n, {});
  c.in_.assign(n, {});
  c.out_pos_.assign(m, 0);
  for (int f = 0; f < m; ++f) {
    const auto& mf = c.morphisms_[f];
    c.homs_[mf.src * n + mf.dst].push_back(f);
    c.out_pos_[f] = static_cast<int>(c.out_[mf.src].size());
    c.out_[mf.src].push_back(f);
    c.in_[mf.dst].push_back(f);
  }

  c.composite_.assign(m, {});
  for (int f = 0; f < m; ++f) {
    const auto& next = c.out_[c.dst(f)];
    auto& row = c.composite_[f];
    row.reserve(next.size());
    for (int g : next) {
      const int gf = compose(g, f);
      if (gf < 0 || gf >= m || c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g)) {
        throw Error(ErrorCode::MalformedInput, "composite of " + c.name(g) + " and " + c.name(f) +
                                                   " is missing or has the wrong endpoints");
      }
      row.push_back(gf);
    }
  }

  for (int f = 0; f < m; ++f) {
    if (c.compose(c.identity(c.dst(f)), f) != f || c.compose(f, c.identity(c.src(f))) != f) {
      throw Error(ErrorCode::IdentityViolation, "identity law fails at " + c.name(f));
    }
  }
  for (int f = 0; f < m; ++f) {
    for (int g : c.out(c.dst(f))) {
      const int gf = c.compose(g, f);
      for (int h : c.out(c.dst(g))) {
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) {
          throw Error(ErrorCode::AssociativityViolation,
                      "(" + c.name(h) + " " + c.name(g) + ") " + c.name(f) + " != " + c.name(h) + " (" +
                          c.name(g) + " " + c.name(f) + ")");
        }
      }
    }
  }
  return c;
}

int FinCategory::compose(int g, int f) const {
  if (dst(f) != src(g)) {
    throw Error(ErrorCode::MalformedInput, "cannot compose " + name(g) + " after " + name(f));
  }
  return composite_[f][out_pos_[g]];
}

std::optional<int> FinCategory::find_object(std::string_view name) const {
  auto it = object_lookup_.find(std::string(name));
  if (it == object_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FinCategory::find_morphism(std::string_view name) const {
  auto it = morphism_lookup_.find(std::string(name));
  if (it == morphism_lookup_.end()) return std::nullopt;
  return it->second;
}

int FinCategory::object_index(std::string_view name) const {
  if (auto x = find_object(name)) return *x;
  throw Error(ErrorCode::UnknownObject, "no object named '" + std::string(name) + "'");
}

std::optional<int> FinCategory::inverse(int m) const {
  for (int g : hom(dst(m), src(m))) {
    if (compose(g, m) == identity(src(m)) && compose(m, g) == identity(dst(m))) return g;
  }
  return std::nullopt;
}

bool FinCategory::is_thin() const {
  return std::all_of(homs_.begin(), homs_.end(), [](const auto& h) { return h.size() <= 1; });
}

// ---------------------------------------------------------------------------
// Functors
// ---------------------------------------------------------------------------

std::optional<std::string> functor_violation(const FinCategory& s, const FinCategory& t,
                                             std::span<const int> obj_map,
                                             std::span<const int> mor_map) {
  if (static_cast<int>(obj_map.size()) != s.object_count() ||
      static_cast<int>(mor_map.size()) != s.morphism_count()) {
    return "map sizes do not match the source category";
  }
  for (int x = 0; x < s.object_count(); ++x) {
    if (obj_map[x] < 0 || obj_map[x] >= t.object_count()) {
      return "object " + s.object(x) + " has no image";
    }
  }
  for (int m = 0; m < s.morphism_count(); ++m) {
    const int fm = mor_map[m];
    if (fm < 0 || fm >= t.morphism_count()) return "morphism " + s.name(m) + " has no image";
    if (t.src(fm) != obj_map[s.src(m)] || t.dst(fm) != obj_map[s.dst(m)]) {
      return "image of " + s.name(m) + " has the wrong endpoints";
    }
  }
  for (int x = 0; x < s.object_count(); ++x) {
    if (mor_map[s.identity(x)] != t.identity(obj_map[x])) {
      return "identity of " + s.object(x) + " is not preserved";
    }
  }
  for (int f = 0; f < s.morphism_count(); ++f) {
    for (int g : s.out(s.dst(f))) {
      if (mor_map[s.compose(g, f)] != t.compose(mor_map[g], mor_map[f])) {
        return "F(" + s.name(g) + " . " + s.name(f) + ") != F(" + s.name(g) + ") . F(" + s.name(f) + ")";
      }
    }
  }
  return std::nullopt;
}

FinFunctor make_functor(CategoryRef source, CategoryRef target, std::vector<int> obj_map,
                        std::vector<int> mor_map) {
  if (auto why = functor_violation(*source, *target, obj_map, mor_map)) {
    throw Error(ErrorCode::NotFunctorial, *why);
  }
  return FinFunctor{std::move(source), std::move(target), std::move(obj_map), std::move(mor_map)};
}

FinFunctor identity_functor(CategoryRef c) {
  std::vector<int> obj(c->object_count());
  std::vector<int> mor(c->morphism_count());
  for (int i = 0; i < c->object_count(); ++i) obj[i] = i;
  for (int i = 0; i < c->morphism_count(); ++i) mor[i] = i;
  return FinFunctor{c, c, std::move(obj), std::move(mor)};
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  std::vector<int> obj(f.obj_map.size());
  std::vector<int> mor(f.mor_map.size());
  for (std::size_t i = 0; i < obj.size(); ++i) obj[i] = g.obj(f.obj_map[i]);
  for (std::size_t i = 0; i < mor.size(); ++i) mor[i] = g.mor(f.mor_map[i]);
  return FinFunctor{f.source, g.target, std::move(obj), std::move(mor)};
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

struct Indexed {
  std::vector<std::string> objects;
  std::unordered_map<std::string, int> object_index;
  std::vector<Morphism> morphisms;
  std::unordered_map<std::string, int> morphism_index;
  std::vector<int> identities;
  std::vector<bool> is_identity;
};

Indexed index_raw(const RawCategory& raw) {
  Indexed ix;
  ix.objects = raw.objects;
  for (std::size_t x = 0; x < raw.objects.size(); ++x) {
    if (!ix.object_index.emplace(raw.objects[x], static_cast<int>(x)).second) {
      throw Error(ErrorCode::MalformedInput, "duplicate object '" + raw.objects[x] + "'");
    }
  }
  auto object_of = [&](const std::string& name, const std::string& where) {
    auto it = ix.object_index.find(name);
    if (it == ix.object_index.end()) {
      throw Error(ErrorCode::MalformedInput, where + " refers to unknown object '" + name + "'");
    }
    return it->second;
  };
  for (const auto& rm : raw.morphisms) {
    Morphism m{rm.id, object_of(rm.src, "morphism " + rm.id), object_of(rm.dst, "morphism " + rm.id)};
    if (!ix.morphism_index.emplace(m.id, static_cast<int>(ix.morphisms.size())).second) {
      throw Error(ErrorCode::MalformedInput, "duplicate morphism '" + m.id + "'");
    }
    ix.morphisms.push_back(std::move(m));
  }
  for (const auto& [obj, mor] : raw.identities) {
    object_of(obj, "identities");
    auto it = ix.morphism_index.find(mor);
    if (it == ix.morphism_index.end()) {
      throw Error(ErrorCode::IdentityViolation, "identity of '" + obj + "' names unknown morphism '" + mor + "'");
    }
  }
  ix.identities.assign(ix.objects.size(), -1);
  for (std::size_t x = 0; x < ix.objects.size(); ++x) {
    const auto& name = ix.objects[x];
    std::string id;
    if (auto it = raw.identities.find(name); it != raw.identities.end()) {
      id = it->second;
    } else {
      id = "id_" + name;
    }
    auto it = ix.morphism_index.find(id);
    if (it == ix.morphism_index.end()) {
      if (raw.identities.count(name) != 0) {
        throw Error(ErrorCode::IdentityViolation, "identity of '" + name + "' is undeclared");
      }
      it = ix.morphism_index.emplace(id, static_cast<int>(ix.morphisms.size())).first;
      ix.morphisms.push_back(Morphism{id, static_cast<int>(x), static_cast<int>(x)});
    }
    const auto& m = ix.morphisms[it->second];
    if (m.src != static_cast<int>(x) || m.dst != static_cast<int>(x)) {
      throw Error(ErrorCode::IdentityViolation, "identity '" + id + "' is not an endomorphism of '" + name + "'");
    }
    ix.identities[x] = it->second;
  }
  ix.is_identity.assign(ix.morphisms.size(), false);
  for (int i : ix.identities) {
    if (ix.is_identity[i]) {
      throw Error(ErrorCode::IdentityViolation, "morphism '" + ix.morphisms[i].id + "' is the identity of two objects");
    }
    ix.is_identity[i] = true;
  }
  return ix;
}

FinCategory validate_table(const RawCategory& raw) {
  Indexed ix = index_raw(raw);
  const int m = static_cast<int>(ix.morphisms.size());
  auto mor_of = [&](const std::string& name) {
    auto it = ix.morphism_index.find(name);
    if (it == ix.morphism_index.end()) {
      throw Error(ErrorCode::MalformedInput, "composition entry names unknown morphism '" + name + "'");
    }
    return it->second;
  };
  std::unordered_map<long long, int> table;
  auto key = [m](int g, int f) { return static_cast<long long>(g) * m + f; };
  for (const auto& entry : raw.compose) {
    const int g = mor_of(entry[0]);
    const int f = mor_of(entry[1]);
    const int gf = mor_of(entry[2]);
    const auto& mg = ix.morphisms[g];
    const auto& mf = ix.morphisms[f];
    const auto& mgf = ix.morphisms[gf];
    if (mf.dst != mg.src) {
      throw Error(ErrorCode::MalformedInput, "entry composes non-composable " + mg.id + " and " + mf.id);
    }
    if (mgf.src != mf.src || mgf.dst != mg.dst) {
      throw Error(ErrorCode::MalformedInput, "entry " + mg.id + " . " + mf.id + " = " + mgf.id + " has the wrong endpoints");
    }
    if ((ix.is_identity[g] && gf != f) || (ix.is_identity[f] && gf != g)) {
      throw Error(ErrorCode::IdentityViolation, "entry " + mg.id + " . " + mf.id + " = " + mgf.id);
    }
    auto [it, inserted] = table.emplace(key(g, f), gf);
    if (!inserted && it->second != gf) {
      throw Error(ErrorCode::MalformedInput, "conflicting entries for " + mg.id + " . " + mf.id);
    }
  }
  std::vector<std::string> names;
  for (const auto& mm : ix.morphisms) names.push_back(mm.id);
  auto composite = [&](int g, int f) {
    if (auto it = table.find(key(g, f)); it != table.end()) return it->second;
    if (ix.is_identity[g]) return f;
    if (ix.is_identity[f]) return g;
    throw Error(ErrorCode::MissingComposite, "no entry for " + names[g] + " . " + names[f]);
  };
  return FinCategory::build(std::move(ix.objects), std::move(ix.morphisms), std::move(ix.identities), composite);
}

FinCategory validate_closure(const RawCategory& raw, const ValidateOptions& options) {
  Indexed ix = index_raw(raw);
  const int declared = static_cast<int>(ix.morphisms.size());
  Presentation p;
  p.object_count = static_cast<int>(ix.objects.size());
  std::vector<int> generator_of(declared, -1);
  std::vector<int> declared_of_generator;
  for (int f = 0; f < declared; ++f) {
    if (ix.is_identity[f]) continue;
    generator_of[f] = static_cast<int>(p.generators.size());
    declared_of_generator.push_back(f);
    p.generators.push_back({ix.morphisms[f].src, ix.morphisms[f].dst});
  }
  auto path_of = [&](const std::string& name) -> std::pair<int, std::vector<int>> {
    auto it = ix.morphism_index.find(name);
    if (it == ix.morphism_index.end()) {
      throw Error(ErrorCode::MalformedInput, "relation names unknown morphism '" + name + "'");
    }
    const int f = it->second;
    if (ix.is_identity[f]) return {f, {}};
    return {f, {generator_of[f]}};
  };
  for (const auto& entry : raw.compose) {
    auto [g, pg] = path_of(entry[0]);
    auto [f, pf] = path_of(entry[1]);
    auto [gf, pgf] = path_of(entry[2]);
    const auto& mg = ix.morphisms[g];
    const auto& mf = ix.morphisms[f];
    const auto& mgf = ix.morphisms[gf];
    if (mf.dst != mg.src || mgf.src != mf.src || mgf.dst != mg.dst) {
      throw Error(ErrorCode::MalformedInput, "relation " + mg.id + " . " + mf.id + " = " + mgf.id + " is ill-typed");
    }
    pf.insert(pf.end(), pg.begin(), pg.end());
    p.relations.push_back({mf.src, std::move(pf), std::move(pgf)});
  }

  const PresentedCategory closed = PresentedCategory::close(p, options.closure_cap);
  const auto& elems = closed.elements();
  std::vector<int> index_of_element(elems.size(), -1);
  std::vector<Morphism> morphisms = ix.morphisms;
  for (int f = 0; f < declared; ++f) {
    const int e = ix.is_identity[f] ? closed.identity(ix.morphisms[f].src) : closed.generator(generator_of[f]);
    if (index_of_element[e] >= 0) {
      throw Error(ErrorCode::InconsistentPresentation, "relations identify declared morphisms '" +
                                                           morphisms[index_of_element[e]].id + "' and '" +
                                                           morphisms[f].id + "'");
    }
    index_of_element[e] = f;
  }
  std::unordered_set<std::string> names;
  for (const auto& mm : morphisms) names.insert(mm.id);
  for (std::size_t e = 0; e < elems.size(); ++e) {
    if (index_of_element[e] >= 0) continue;
    std::string name;
    for (auto it = elems[e].path.rbegin(); it != elems[e].path.rend(); ++it) {
      if (!name.empty()) name += ".";
      name += ix.morphisms[declared_of_generator[*it]].id;
    }
    if (!names.insert(name).second) {
      throw Error(ErrorCode::MalformedInput, "generated composite name '" + name + "' collides with a declared morphism");
    }
    index_of_element[e] = static_cast<int>(morphisms.size());
    morphisms.push_back(Morphism{name, elems[e].src, elems[e].dst});
  }
  std::vector<int> element_of_index(morphisms.size());
  for (std::size_t e = 0; e < elems.size(); ++e) element_of_index[index_of_element[e]] = static_cast<int>(e);
  auto composite = [&](int g, int f) {
    return index_of_element[closed.compose(element_of_index[g], element_of_index[f])];
  };
  return FinCategory::build(std::move(ix.objects), std::move(morphisms), std::move(ix.identities), composite);
}

}  // namespace

FinCategory validate_category(const RawCategory& raw, const ValidateOptions& options) {
  return raw.closure ? validate_closure(raw, options) : validate_table(raw);
}

FinFunctor validate_functor(const RawFunctor& raw, CategoryRef source, CategoryRef target) {
  const FinCategory& s = *source;
  const FinCategory& t = *target;
  std::vector<int> obj(s.object_count(), -1);
  std::vector<int> mor(s.morphism_count(), -1);
  for (const auto& [a, b] : raw.obj_map) {
    auto x = s.find_object(a);
    auto y = t.find_object(b);
    if (!x || !y) throw Error(ErrorCode::UnknownObject, "object map entry " + a + " -> " + b);
    obj[*x] = *y;
  }
  for (int x = 0; x < s.object_count(); ++x) {
    if (obj[x] < 0) throw Error(ErrorCode::NotFunctorial, "object " + s.object(x) + " has no image");
    mor[s.identity(x)] = t.identity(obj[x]);
  }
  for (const auto& [a, b] : raw.mor_map) {
    auto f = s.find_morphism(a);
    auto g = t.find_morphism(b);
    if (!f || !g) throw Error(ErrorCode::MalformedInput, "morphism map entry " + a + " -> " + b);
    if (s.is_identity(*f) && mor[*f] != *g) {
      throw Error(ErrorCode::NotFunctorial, "identity " + a + " must map to an identity");
    }
    mor[*f] = *g;
  }
  // Images forced by a one-element target hom need not be listed.
  for (int m = 0; m < s.morphism_count(); ++m) {
    if (mor[m] >= 0) continue;
    auto h = t.hom(obj[s.src(m)], obj[s.dst(m)]);
    if (h.size() == 1) mor[m] = h[0];
  }
  // Derive the images of composites from the images of their factors.
  for (bool changed = true; changed;) {
    changed = false;
    for (int m = 0; m < s.morphism_count(); ++m) {
      if (mor[m] >= 0) continue;
      for (int f : s.out(s.src(m))) {
        if (mor[f] < 0) continue;
        for (int g : s.hom(s.dst(f), s.dst(m))) {
          if (mor[g] < 0 || s.compose(g, f) != m) continue;
          if (t.dst(mor[f]) != t.src(mor[g])) continue;
          mor[m] = t.compose(mor[g], mor[f]);
          break;
        }
        if (mor[m] >= 0) break;
      }
      if (mor[m] >= 0) changed = true;
    }
  }
  for (int m = 0; m < s.morphism_count(); ++m) {
    if (mor[m] < 0) throw Error(ErrorCode::NotFunctorial, "morphism " + s.name(m) + " has no image");
  }
  return make_functor(std::move(source), std::move(target), std::move(obj), std::move(mor));
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

FinCategory opposite(const FinCategory& c) {
  std::vector<Morphism> morphisms = c.morphisms();
  for (auto& m : morphisms) std::swap(m.src, m.dst);
  std::vector<int> identities(c.object_count());
  for (int x = 0; x < c.object_count(); ++x) identities[x] = c.identity(x);
  return FinCategory::build(c.objects(), std::move(morphisms), std::move(identities),
                            [&c](int g, int f) { return c.compose(f, g); });
}

FinFunctor opposite(const FinFunctor& f) {
  return FinFunctor{share(opposite(*f.source)), share(opposite(*f.target)), f.obj_map, f.mor_map};
}

std::vector<int> hom_set(const FinCategory& c, std::string_view x, std::string_view y) {
  auto h = c.hom(c.object_index(x), c.object_index(y));
  return {h.begin(), h.end()};
}

FunctorProfile functor_profile(const FinFunctor& F) {
  const FinCategory& s = *F.source;
  const FinCategory& t = *F.target;
  FunctorProfile p;
  std::vector<bool> hit(t.object_count(), false);
  for (int x = 0; x < s.object_count(); ++x) hit[F.obj(x)] = true;
  p.surjective_on_objects = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

  p.full = true;
  p.faithful = true;
  for (int x = 0; x < s.object_count(); ++x) {
    for (int y = 0; y < s.object_count(); ++y) {
      std::set<int> image;
      for (int m : s.hom(x, y)) image.insert(F.mor(m));
      if (image.size() != s.hom(x, y).size()) p.faithful = false;
      if (image.size() != t.hom(F.obj(x), F.obj(y)).size()) p.full = false;
    }
  }

  p.conservative = true;
  for (int m = 0; m < s.morphism_count() && p.conservative; ++m) {
    if (t.is_iso(F.mor(m)) && !s.is_iso(m)) p.conservative = false;
  }

  p.equalizing_pairs = true;
  for (int d = 0; d < s.object_count() && p.equalizing_pairs; ++d) {
    for (int e = 0; e < s.object_count() && p.equalizing_pairs; ++e) {
      auto h = s.hom(d, e);
      for (std::size_t i = 0; i < h.size() && p.equalizing_pairs; ++i) {
        for (std::size_t j = i + 1; j < h.size() && p.equalizing_pairs; ++j) {
          const auto into = s.in(d);
          const bool equalized = std::any_of(into.begin(), into.end(), [&](int u) {
            return s.compose(h[i], u) == s.compose(h[j], u);
          });
          if (!equalized) p.equalizing_pairs = false;
        }
      }
    }
  }
  return p;
}

namespace {

// Backtracking search for functors, optionally restricted to isomorphisms.
class FunctorSearch {
 public:
  FunctorSearch(const FinCategory& a, const FinCategory& b, bool iso_only, const FunctorVisitor& visit)
      : a_(a), b_(b), iso_(iso_only), visit_(visit) {
    pos_.assign(a.morphism_count(), -1);
    for (int m = 0; m < a.morphism_count(); ++m) {
      if (a.is_identity(m)) continue;
      pos_[m] = static_cast<int>(nonid_.size());
      nonid_.push_back(m);
    }
    checks_.assign(nonid_.size(), {});
    for (int f : nonid_) {
      for (int g : a.out(a.dst(f))) {
        if (a.is_identity(g)) continue;
        const int h = a.compose(g, f);
        const int last = std::max({pos_[f], pos_[g], pos_[h]});
        checks_[last].push_back({g, f, h});
      }
    }
    obj_.assign(a.object_count(), -1);
    mor_.assign(a.morphism_count(), -1);
    used_obj_.assign(b.object_count(), false);
    used_mor_.assign(b.morphism_count(), false);
  }

  void run() {
    if (iso_ && (a_.object_count() != b_.object_count() || a_.morphism_count() != b_.morphism_count())) return;
    if (a_.object_count() > 0 && b_.object_count() == 0) return;
    assign_object(0);
  }

 private:
  struct Check {
    int g, f, h;
  };

  bool object_ok(int x, int y) const {
    for (int z = 0; z < x; ++z) {
      const int w = obj_[z];
      if (iso_) {
        if (a_.hom(x, z).size() != b_.hom(y, w).size() || a_.hom(z, x).size() != b_.hom(w, y).size()) return false;
      } else {
        if (!a_.hom(x, z).empty() && b_.hom(y, w).empty()) return false;
        if (!a_.hom(z, x).empty() && b_.hom(w, y).empty()) return false;
      }
    }
    if (iso_ && a_.hom(x, x).size() != b_.hom(y, y).size()) return false;
    if (!a_.hom(x, x).empty() && b_.hom(y, y).empty()) return false;
    return true;
  }

  void assign_object(int x) {
    if (stop_) return;
    if (x == a_.object_count()) {
      for (int z = 0; z < a_.object_count(); ++z) mor_[a_.identity(z)] = b_.identity(obj_[z]);
      assign_morphism(0);
      return;
    }
    for (int y = 0; y < b_.object_count() && !stop_; ++y) {
      if (iso_ && used_obj_[y]) continue;
      if (!object_ok(x, y)) continue;
      obj_[x] = y;
      used_obj_[y] = true;
      assign_object(x + 1);
      used_obj_[y] = false;
    }
    obj_[x] = -1;
  }

  void assign_morphism(std::size_t k) {
    if (stop_) return;
    if (k == nonid_.size()) {
      if (!visit_(obj_, mor_)) stop_ = true;
      return;
    }
    const int m = nonid_[k];
    for (int c : b_.hom(obj_[a_.src(m)], obj_[a_.dst(m)])) {
      if (iso_ && (used_mor_[c] || b_.is_identity(c))) continue;
      mor_[m] = c;
      bool ok = true;
      for (const auto& ch : checks_[k]) {
        if (mor_[ch.h] != b_.compose(mor_[ch.g], mor_[ch.f])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used_mor_[c] = true;
      assign_morphism(k + 1);
      used_mor_[c] = false;
      if (stop_) return;
    }
    mor_[m] = -1;
  }

  const FinCategory& a_;
  const FinCategory& b_;
  bool iso_;
  const FunctorVisitor& visit_;
  std::vector<int> pos_;
  std::vector<int> nonid_;
  std::vector<std::vector<Check>> checks_;
  std::vector<int> obj_;
  std::vector<int> mor_;
  std::vector<bool> used_obj_;
  std::vector<bool> used_mor_;
  bool stop_ = false;
};

}  // namespace

void enumerate_functors(const FinCategory& source, const FinCategory& target, const FunctorVisitor& visit) {
  FunctorSearch(source, target, false, visit).run();
}

std::optional<FinFunctor> find_isomorphism(CategoryRef a, CategoryRef b) {
  std::optional<FinFunctor> found;
  FunctorSearch(*a, *b, true, [&](const std::vector<int>& obj, const std::vector<int>& mor) {
    found = FinFunctor{a, b, obj, mor};
    return false;
  }).run();
  return found;
}

bool structurally_equal(const FinCategory& a, const FinCategory& b) {
  if (a.objects() != b.objects() || a.morphism_count() != b.morphism_count()) return false;
  std::vector<int> to_b(a.morphism_count(), -1);
  for (int m = 0; m < a.morphism_count(); ++m) {
    if (a.is_identity(m)) {
      to_b[m] = b.identity(a.src(m));
      continue;
    }
    auto bm = b.find_morphism(a.name(m));
    if (!bm || b.is_identity(*bm) || b.src(*bm) != a.src(m) || b.dst(*bm) != a.dst(m)) return false;
    to_b[m] = *bm;
  }
  for (int f = 0; f < a.morphism_count(); ++f) {
    for (int g : a.out(a.dst(f))) {
      if (to_b[a.compose(g, f)] != b.compose(to_b[g], to_b[f])) return false;
    }
  }
  return true;
}

std::pair<CategoryRef, FinFunctor> relabel(CategoryRef c, const std::vector<int>& object_order,
                                           const std::vector<int>& morphism_order,
                                           const std::string& prefix) {
  const int n = c->object_count();
  const int m = c->morphism_count();
  std::vector<int> new_obj(n);
  std::vector<int> new_mor(m);
  for (int i = 0; i < n; ++i) new_obj[object_order[i]] = i;
  for (int i = 0; i < m; ++i) new_mor[morphism_order[i]] = i;
  std::vector<std::string> objects(n);
  for (int i = 0; i < n; ++i) objects[i] = prefix + c->object(object_order[i]);
  std::vector<Morphism> morphisms(m);
  for (int i = 0; i < m; ++i) {
    const auto& old = c->morphism(morphism_order[i]);
    morphisms[i] = Morphism{prefix + old.id, new_obj[old.src], new_obj[old.dst]};
  }
  std::vector<int> identities(n);
  for (int i = 0; i < n; ++i) identities[i] = new_mor[c->identity(object_order[i])];
  auto out = share(FinCategory::build(std::move(objects), std::move(morphisms), std::move(identities),
                                      [&](int g, int f) {
                                        return new_mor[c->compose(morphism_order[g], morphism_order[f])];
                                      }));
  FinFunctor iso{c, out, new_obj, new_mor};
  return {out, iso};
}

}  // namespace adjunct
