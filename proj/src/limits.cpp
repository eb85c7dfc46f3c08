#include "adjunct/limits.hpp"

#include <algorithm>
#include <functional>

#include "adjunct/catalog.hpp"

namespace adjunct {

std::vector<int> initial_objects(const FinCategory& c) {
  std::vector<int> out;
  for (int x = 0; x < c.object_count(); ++x) {
    bool ok = true;
    for (int y = 0; y < c.object_count() && ok; ++y) ok = c.hom(x, y).size() == 1;
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<int> terminal_objects(const FinCategory& c) {
  std::vector<int> out;
  for (int x = 0; x < c.object_count(); ++x) {
    bool ok = true;
    for (int y = 0; y < c.object_count() && ok; ++y) ok = c.hom(y, x).size() == 1;
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<Cone> cones(const FinFunctor& d) {
  const FinCategory& shape = *d.source;
  const FinCategory& c = *d.target;
  const int nj = shape.object_count();
  // shape morphisms grouped by the later of their endpoints
  std::vector<std::vector<int>> checks(nj);
  for (int m = 0; m < shape.morphism_count(); ++m) {
    if (shape.is_identity(m)) continue;
    checks[std::max(shape.src(m), shape.dst(m))].push_back(m);
  }
  std::vector<Cone> out;
  Cone cur;
  cur.legs.assign(nj, -1);
  std::function<void(int)> extend = [&](int j) {
    if (j == nj) {
      out.push_back(cur);
      return;
    }
    for (int leg : c.hom(cur.apex, d.obj(j))) {
      cur.legs[j] = leg;
      bool ok = true;
      for (int m : checks[j]) {
        if (c.compose(d.mor(m), cur.legs[shape.src(m)]) != cur.legs[shape.dst(m)]) {
          ok = false;
          break;
        }
      }
      if (ok) extend(j + 1);
    }
    cur.legs[j] = -1;
  };
  for (int a = 0; a < c.object_count(); ++a) {
    cur.apex = a;
    extend(0);
  }
  return out;
}

namespace {

int factorizations(const FinCategory& c, const Cone& from, const Cone& to) {
  int count = 0;
  for (int h : c.hom(from.apex, to.apex)) {
    bool ok = true;
    for (std::size_t j = 0; j < to.legs.size() && ok; ++j) ok = c.compose(to.legs[j], h) == from.legs[j];
    if (ok) ++count;
  }
  return count;
}

int cofactorizations(const FinCategory& c, const Cone& from, const Cone& to) {
  int count = 0;
  for (int h : c.hom(from.apex, to.apex)) {
    bool ok = true;
    for (std::size_t j = 0; j < to.legs.size() && ok; ++j) ok = c.compose(h, from.legs[j]) == to.legs[j];
    if (ok) ++count;
  }
  return count;
}

std::vector<Cone> terminal_cones(const FinCategory& c, const std::vector<Cone>& all) {
  std::vector<Cone> out;
  for (const auto& k : all) {
    const bool terminal = std::all_of(all.begin(), all.end(), [&](const Cone& other) {
      return factorizations(c, other, k) == 1;
    });
    if (terminal) out.push_back(k);
  }
  return out;
}

}  // namespace

bool is_limit_cone(const FinFunctor& d, const Cone& cone) {
  const auto all = cones(d);
  if (std::find(all.begin(), all.end(), cone) == all.end()) return false;
  return std::all_of(all.begin(), all.end(),
                     [&](const Cone& other) { return factorizations(*d.target, other, cone) == 1; });
}

std::vector<Cone> limit(const FinFunctor& d) { return terminal_cones(*d.target, cones(d)); }

std::vector<Cone> cocones(const FinFunctor& d) { return cones(opposite(d)); }

bool is_colimit_cocone(const FinFunctor& d, const Cone& cocone) {
  const auto all = cocones(d);
  if (std::find(all.begin(), all.end(), cocone) == all.end()) return false;
  return std::all_of(all.begin(), all.end(),
                     [&](const Cone& other) { return cofactorizations(*d.target, cocone, other) == 1; });
}

bool is_weak_colimit_cocone(const FinFunctor& d, const Cone& cocone) {
  const auto all = cocones(d);
  if (std::find(all.begin(), all.end(), cocone) == all.end()) return false;
  return std::all_of(all.begin(), all.end(),
                     [&](const Cone& other) { return cofactorizations(*d.target, cocone, other) >= 1; });
}

std::vector<Cone> colimit(const FinFunctor& d) {
  const auto all = cocones(d);
  std::vector<Cone> out;
  for (const auto& k : all) {
    const bool initial = std::all_of(all.begin(), all.end(), [&](const Cone& other) {
      return cofactorizations(*d.target, k, other) == 1;
    });
    if (initial) out.push_back(k);
  }
  return out;
}

FinFunctor identity_diagram(CategoryRef c) { return identity_functor(std::move(c)); }

std::vector<Cone> identity_limits(CategoryRef c) { return limit(identity_diagram(std::move(c))); }

std::optional<Cone> limit_of_identity(CategoryRef c) {
  auto all = identity_limits(std::move(c));
  if (all.empty()) return std::nullopt;
  return all.front();
}

namespace shapes {

CategoryRef pair() {
  static const CategoryRef shape = catalog::discrete({"0", "1"});
  return shape;
}

CategoryRef parallel() {
  static const CategoryRef shape = catalog::parallel_pair();
  return shape;
}

CategoryRef cospan() {
  static const CategoryRef shape = catalog::cospan();
  return shape;
}

CategoryRef span() {
  static const CategoryRef shape = catalog::span();
  return shape;
}

}  // namespace shapes

FinFunctor diagram(CategoryRef shape, CategoryRef target, std::vector<int> objects, std::vector<int> arrows) {
  std::vector<int> mor(shape->morphism_count(), -1);
  std::size_t k = 0;
  for (int m = 0; m < shape->morphism_count(); ++m) {
    if (shape->is_identity(m)) {
      mor[m] = target->identity(objects[shape->src(m)]);
    } else {
      if (k >= arrows.size()) throw Error(ErrorCode::MalformedInput, "diagram is missing arrow images");
      mor[m] = arrows[k++];
    }
  }
  return make_functor(std::move(shape), std::move(target), std::move(objects), std::move(mor));
}

FinFunctor empty_diagram(CategoryRef c) { return diagram(catalog::empty(), std::move(c), {}, {}); }

FinFunctor pair_diagram(CategoryRef c, int x, int y) { return diagram(shapes::pair(), std::move(c), {x, y}, {}); }

FinFunctor parallel_diagram(CategoryRef c, int f, int g) {
  const int s = c->src(f);
  const int t = c->dst(f);
  return diagram(shapes::parallel(), std::move(c), {s, t}, {f, g});
}

FinFunctor cospan_diagram(CategoryRef c, int f, int g) {
  const int x = c->src(f);
  const int y = c->src(g);
  const int t = c->dst(f);
  return diagram(shapes::cospan(), std::move(c), {x, y, t}, {f, g});
}

FinFunctor span_diagram(CategoryRef c, int f, int g) {
  const int o = c->src(f);
  const int l = c->dst(f);
  const int r = c->dst(g);
  return diagram(shapes::span(), std::move(c), {o, l, r}, {f, g});
}

FiniteLimitsReport has_finite_limits(CategoryRef c) {
  FiniteLimitsReport r;
  if (terminal_objects(*c).empty()) r.missing_terminal = LimitGap{"terminal", "no terminal object"};
  for (int x = 0; x < c->object_count() && !r.missing_product; ++x) {
    for (int y = x; y < c->object_count() && !r.missing_product; ++y) {
      if (limit(pair_diagram(c, x, y)).empty()) {
        r.missing_product = LimitGap{"product", c->object(x) + " x " + c->object(y)};
      }
    }
  }
  for (int x = 0; x < c->object_count() && !r.missing_equalizer; ++x) {
    for (int y = 0; y < c->object_count() && !r.missing_equalizer; ++y) {
      auto h = c->hom(x, y);
      for (std::size_t i = 0; i < h.size() && !r.missing_equalizer; ++i) {
        for (std::size_t j = i + 1; j < h.size() && !r.missing_equalizer; ++j) {
          if (limit(parallel_diagram(c, h[i], h[j])).empty()) {
            r.missing_equalizer = LimitGap{"equalizer", c->name(h[i]) + ", " + c->name(h[j])};
          }
        }
      }
    }
  }
  r.first_missing = r.missing_terminal ? r.missing_terminal : r.missing_product ? r.missing_product : r.missing_equalizer;
  r.has_finite_limits = !r.first_missing;
  return r;
}

ColimitSupport colimit_support(CategoryRef c) {
  ColimitSupport s;
  s.initial = !initial_objects(*c).empty();
  s.binary_coproducts = true;
  for (int x = 0; x < c->object_count() && s.binary_coproducts; ++x) {
    for (int y = x; y < c->object_count() && s.binary_coproducts; ++y) {
      s.binary_coproducts = !colimit(pair_diagram(c, x, y)).empty();
    }
  }
  s.pushouts = true;
  for (int f = 0; f < c->morphism_count() && s.pushouts; ++f) {
    for (int g : c->out(c->src(f))) {
      if (g < f) continue;
      if (pushouts(c, f, g).empty()) {
        s.pushouts = false;
        break;
      }
    }
  }
  return s;
}

namespace {

std::string describe_objects(const FinCategory& c, const FinFunctor& d) {
  std::string out;
  for (int j = 0; j < d.source->object_count(); ++j) {
    if (!out.empty()) out += ", ";
    out += c.object(d.obj(j));
  }
  return "[" + out + "]";
}

std::vector<std::pair<std::string, FinFunctor>> diagrams_of_kind(CategoryRef c, LimitKind kind) {
  std::vector<std::pair<std::string, FinFunctor>> out;
  const bool all = kind == LimitKind::AllFinite;
  if (all || kind == LimitKind::Terminal) out.emplace_back("terminal", empty_diagram(c));
  if (all || kind == LimitKind::Products) {
    for (int x = 0; x < c->object_count(); ++x) {
      for (int y = x; y < c->object_count(); ++y) out.emplace_back("product", pair_diagram(c, x, y));
    }
  }
  if (all || kind == LimitKind::Equalizers) {
    for (int f = 0; f < c->morphism_count(); ++f) {
      for (int g : c->hom(c->src(f), c->dst(f))) {
        if (g > f) out.emplace_back("equalizer", parallel_diagram(c, f, g));
      }
    }
  }
  if (all || kind == LimitKind::Pullbacks) {
    for (int f = 0; f < c->morphism_count(); ++f) {
      for (int g : c->in(c->dst(f))) {
        if (g >= f) out.emplace_back("pullback", cospan_diagram(c, f, g));
      }
    }
  }
  return out;
}

}  // namespace

PreservationReport preserves_limits(const FinFunctor& g, LimitKind kind) {
  PreservationReport report;
  for (const auto& [label, d] : diagrams_of_kind(g.source, kind)) {
    const auto lims = limit(d);
    if (lims.empty()) {
      throw Error(ErrorCode::LimitAbsentInSource, label + " of " + describe_objects(*g.source, d));
    }
    const Cone& l = lims.front();
    Cone image{g.obj(l.apex), {}};
    for (int leg : l.legs) image.legs.push_back(g.mor(leg));
    const FinFunctor gd = compose(g, d);
    if (!is_limit_cone(gd, image)) {
      report.preserves = false;
      report.counterexample = label + " of " + describe_objects(*g.source, d) + " with apex " +
                              g.source->object(l.apex) + " maps to a non-limit cone at " +
                              g.target->object(image.apex);
      return report;
    }
  }
  return report;
}

bool is_weakly_initial(const FinCategory& c, std::span<const int> members) {
  for (int y = 0; y < c.object_count(); ++y) {
    const bool hit = std::any_of(members.begin(), members.end(), [&](int x) { return !c.hom(x, y).empty(); });
    if (!hit) return false;
  }
  return true;
}

std::vector<std::vector<int>> weakly_initial_sets(const FinCategory& c) {
  // A set is weakly initial iff it meets every minimal class of the
  // reachability preorder; it is minimal iff it picks exactly one member of
  // each such class.
  const int n = c.object_count();
  std::vector<std::vector<int>> classes;
  std::vector<bool> placed(n, false);
  for (int x = 0; x < n; ++x) {
    if (placed[x]) continue;
    bool minimal = true;
    for (int z = 0; z < n && minimal; ++z) {
      if (!c.hom(z, x).empty() && c.hom(x, z).empty()) minimal = false;
    }
    std::vector<int> cls;
    for (int y = x; y < n; ++y) {
      if (!c.hom(x, y).empty() && !c.hom(y, x).empty()) {
        cls.push_back(y);
        placed[y] = true;
      }
    }
    if (minimal) classes.push_back(std::move(cls));
  }
  std::vector<std::vector<int>> out{{}};
  for (const auto& cls : classes) {
    std::vector<std::vector<int>> next;
    for (const auto& partial : out) {
      for (int x : cls) {
        auto s = partial;
        s.push_back(x);
        next.push_back(std::move(s));
      }
    }
    out = std::move(next);
  }
  for (auto& s : out) std::sort(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cone> weak_pushouts(CategoryRef c, int f, int g) {
  const FinFunctor d = span_diagram(std::move(c), f, g);
  const auto all = cocones(d);
  std::vector<Cone> out;
  for (const auto& k : all) {
    const bool weak = std::all_of(all.begin(), all.end(), [&](const Cone& other) {
      return cofactorizations(*d.target, k, other) >= 1;
    });
    if (weak) out.push_back(k);
  }
  return out;
}

std::vector<Cone> pushouts(CategoryRef c, int f, int g) { return colimit(span_diagram(std::move(c), f, g)); }

}  // namespace adjunct
