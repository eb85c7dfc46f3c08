#include "adjunct/adjoint.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "adjunct/limits.hpp"

namespace adjunct {

namespace {

std::vector<int> positions(const FinCategory& c, bool outgoing) {
  std::vector<int> pos(c.morphism_count(), -1);
  for (int x = 0; x < c.object_count(); ++x) {
    auto list = outgoing ? c.out(x) : c.in(x);
    for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]] = static_cast<int>(i);
  }
  return pos;
}

std::string pair_name(const std::string& obj, const std::string& mor) { return "(" + obj + "," + mor + ")"; }

}  // namespace

Comma comma_under(const FinFunctor& g, int c) {
  const FinCategory& d = *g.source;
  const FinCategory& cc = *g.target;
  if (c < 0 || c >= cc.object_count()) throw Error(ErrorCode::UnknownObject, "comma anchor " + std::to_string(c));
  Comma out;
  out.anchor = c;
  std::map<std::pair<int, int>, int> index;
  std::vector<std::string> objects;
  for (int x = 0; x < d.object_count(); ++x) {
    for (int u : cc.hom(c, g.obj(x))) {
      index[{x, u}] = static_cast<int>(out.entries.size());
      out.entries.emplace_back(x, u);
      objects.push_back(pair_name(d.object(x), cc.name(u)));
    }
  }
  const auto pos = positions(d, true);
  std::vector<int> offset;
  std::vector<Morphism> morphisms;
  for (std::size_t k = 0; k < out.entries.size(); ++k) {
    const auto [x, u] = out.entries[k];
    offset.push_back(static_cast<int>(morphisms.size()));
    for (int phi : d.out(x)) {
      const int target = index.at({d.dst(phi), cc.compose(g.mor(phi), u)});
      morphisms.push_back({d.name(phi) + "@" + objects[k], static_cast<int>(k), target});
      out.base.push_back(phi);
    }
  }
  std::vector<int> identities;
  for (std::size_t k = 0; k < out.entries.size(); ++k) {
    identities.push_back(offset[k] + pos[d.identity(out.entries[k].first)]);
  }
  const auto& base = out.base;
  auto owner = [&](int m) { return morphisms[m].src; };
  out.category = share(FinCategory::build(objects, morphisms, identities, [&](int second, int first) {
    const int k = owner(first);
    return offset[k] + pos[d.compose(base[second], base[first])];
  }));
  std::vector<int> obj_map;
  for (const auto& e : out.entries) obj_map.push_back(e.first);
  out.projection = FinFunctor{out.category, g.source, std::move(obj_map), out.base};
  return out;
}

Comma comma_over(const FinFunctor& f, int d) {
  const FinCategory& c = *f.source;
  const FinCategory& dd = *f.target;
  if (d < 0 || d >= dd.object_count()) throw Error(ErrorCode::UnknownObject, "comma anchor " + std::to_string(d));
  Comma out;
  out.anchor = d;
  std::map<std::pair<int, int>, int> index;
  std::vector<std::string> objects;
  for (int a = 0; a < c.object_count(); ++a) {
    for (int v : dd.hom(f.obj(a), d)) {
      index[{a, v}] = static_cast<int>(out.entries.size());
      out.entries.emplace_back(a, v);
      objects.push_back(pair_name(c.object(a), dd.name(v)));
    }
  }
  const auto pos = positions(c, false);
  std::vector<int> offset;
  std::vector<Morphism> morphisms;
  for (std::size_t k = 0; k < out.entries.size(); ++k) {
    const auto [a, v] = out.entries[k];
    offset.push_back(static_cast<int>(morphisms.size()));
    for (int alpha : c.in(a)) {
      const int source = index.at({c.src(alpha), dd.compose(v, f.mor(alpha))});
      morphisms.push_back({c.name(alpha) + "@" + objects[k], source, static_cast<int>(k)});
      out.base.push_back(alpha);
    }
  }
  std::vector<int> identities;
  for (std::size_t k = 0; k < out.entries.size(); ++k) {
    identities.push_back(offset[k] + pos[c.identity(out.entries[k].first)]);
  }
  const auto& base = out.base;
  out.category = share(FinCategory::build(objects, morphisms, identities, [&](int second, int first) {
    const int k = morphisms[second].dst;
    return offset[k] + pos[c.compose(base[second], base[first])];
  }));
  std::vector<int> obj_map;
  for (const auto& e : out.entries) obj_map.push_back(e.first);
  out.projection = FinFunctor{out.category, f.source, std::move(obj_map), out.base};
  return out;
}

SolutionSetReport solution_set_condition(const FinFunctor& g) {
  SolutionSetReport r;
  for (int c = 0; c < g.target->object_count(); ++c) {
    const Comma k = comma_under(g, c);
    r.per_object.push_back({c, weakly_initial_sets(*k.category)});
  }
  return r;
}

namespace {

bool same_category(const CategoryRef& a, const CategoryRef& b) {
  return a.get() == b.get() || structurally_equal(*a, *b);
}

std::vector<int> transpose_images(const AdjunctionCertificate& cert, int c, int d) {
  const FinCategory& cc = *cert.right.target;
  const FinCategory& dd = *cert.right.source;
  std::vector<int> out;
  for (int g : dd.hom(cert.left.obj(c), d)) out.push_back(cc.compose(cert.right.mor(g), cert.unit[c]));
  return out;
}

}  // namespace

Verification verify_adjunction(const AdjunctionCertificate& cert) {
  const FinFunctor& f = cert.left;
  const FinFunctor& g = cert.right;
  if (!same_category(f.source, g.target) || !same_category(f.target, g.source)) {
    return {false, "functor types"};
  }
  const FinCategory& c = *g.target;
  const FinCategory& d = *g.source;
  if (static_cast<int>(cert.unit.size()) != c.object_count()) return {false, "unit arity"};
  for (int x = 0; x < c.object_count(); ++x) {
    const int u = cert.unit[x];
    if (u < 0 || u >= c.morphism_count() || c.src(u) != x || c.dst(u) != g.obj(f.obj(x))) {
      return {false, "unit type at " + c.object(x)};
    }
  }
  for (int m = 0; m < c.morphism_count(); ++m) {
    const int lhs = c.compose(g.mor(f.mor(m)), cert.unit[c.src(m)]);
    const int rhs = c.compose(cert.unit[c.dst(m)], m);
    if (lhs != rhs) return {false, "unit naturality at " + c.name(m)};
  }
  for (int x = 0; x < c.object_count(); ++x) {
    for (int y = 0; y < d.object_count(); ++y) {
      auto images = transpose_images(cert, x, y);
      std::sort(images.begin(), images.end());
      const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
      if (!injective || images.size() != c.hom(x, g.obj(y)).size()) {
        return {false, "hom bijection at (" + c.object(x) + ", " + d.object(y) + ")"};
      }
    }
  }
  for (const auto& b : cert.bijections) {
    const auto images = transpose_images(cert, b.c, b.d);
    const auto dom = d.hom(f.obj(b.c), b.d);
    bool match = b.pairs.size() == dom.size();
    for (std::size_t i = 0; i < dom.size() && match; ++i) {
      match = b.pairs[i].first == dom[i] && b.pairs[i].second == images[i];
    }
    if (!match) return {false, "recorded bijection at (" + c.object(b.c) + ", " + d.object(b.d) + ")"};
  }
  return {};
}

AdjunctionCertificate construct_left_adjoint(const FinFunctor& g, const std::vector<std::pair<int, int>>& witnesses) {
  const FinCategory& d = *g.source;
  const FinCategory& c = *g.target;
  if (static_cast<int>(witnesses.size()) != c.object_count()) {
    throw Error(ErrorCode::WitnessNotInitial, "expected one witness per object");
  }
  // (d_c, u_c) is initial iff each (e, u) is reached by exactly one φ
  auto reaching = [&](int phi_src, int u_c, int e, int u) {
    int count = 0;
    int found = -1;
    for (int phi : d.hom(phi_src, e)) {
      if (c.compose(g.mor(phi), u_c) == u) {
        ++count;
        found = phi;
      }
    }
    return std::make_pair(count, found);
  };
  for (int x = 0; x < c.object_count(); ++x) {
    const auto [dx, ux] = witnesses[x];
    if (dx < 0 || dx >= d.object_count() || ux < 0 || ux >= c.morphism_count() || c.src(ux) != x ||
        c.dst(ux) != g.obj(dx)) {
      throw Error(ErrorCode::WitnessNotInitial, "witness at " + c.object(x) + " is not a comma object");
    }
    for (int e = 0; e < d.object_count(); ++e) {
      for (int u : c.hom(x, g.obj(e))) {
        if (reaching(dx, ux, e, u).first != 1) {
          throw Error(ErrorCode::WitnessNotInitial, "witness " + pair_name(d.object(dx), c.name(ux)) + " at " +
                                                        c.object(x) + " does not map uniquely to " +
                                                        pair_name(d.object(e), c.name(u)));
        }
      }
    }
  }
  std::vector<int> obj(c.object_count());
  std::vector<int> unit(c.object_count());
  for (int x = 0; x < c.object_count(); ++x) {
    obj[x] = witnesses[x].first;
    unit[x] = witnesses[x].second;
  }
  std::vector<int> mor(c.morphism_count());
  for (int m = 0; m < c.morphism_count(); ++m) {
    const int x = c.src(m);
    const int y = c.dst(m);
    mor[m] = reaching(obj[x], unit[x], obj[y], c.compose(unit[y], m)).second;
  }
  AdjunctionCertificate cert;
  cert.left = make_functor(g.target, g.source, std::move(obj), std::move(mor));
  cert.right = g;
  cert.unit = std::move(unit);
  for (int x = 0; x < c.object_count(); ++x) {
    for (int e = 0; e < d.object_count(); ++e) {
      HomBijection b{x, e, {}};
      for (int h : d.hom(cert.left.obj(x), e)) b.pairs.emplace_back(h, c.compose(g.mor(h), cert.unit[x]));
      cert.bijections.push_back(std::move(b));
    }
  }
  const auto v = verify_adjunction(cert);
  if (!v.ok) throw Error(ErrorCode::InvariantViolation, "constructed adjunction fails " + *v.violated);
  return cert;
}

GaftResult gaft_decide(const FinFunctor& g) {
  GaftResult r;
  for (int c = 0; c < g.target->object_count(); ++c) {
    const Comma k = comma_under(g, c);
    const auto init = initial_objects(*k.category);
    if (init.empty()) {
      r.witness_failure = c;
      r.witnesses.clear();
      return r;
    }
    r.witnesses.push_back(k.entries[init.front()]);
  }
  r.certificate = construct_left_adjoint(g, r.witnesses);
  r.exists = true;
  return r;
}

RightAdjointResult decide_right_adjoint(const FinFunctor& f) {
  RightAdjointResult r;
  for (int d = 0; d < f.target->object_count(); ++d) {
    const Comma k = comma_over(f, d);
    const auto term = terminal_objects(*k.category);
    if (term.empty()) {
      r.witness_failure = d;
      r.witnesses.clear();
      return r;
    }
    r.witnesses.push_back(k.entries[term.front()]);
  }
  r.exists = true;
  return r;
}

BruteForceResult brute_force_left_adjoint(const FinFunctor& g, const OracleBounds& bounds) {
  const FinCategory& d = *g.source;
  const FinCategory& c = *g.target;
  if (c.object_count() > bounds.max_objects || d.morphism_count() > bounds.max_morphisms) {
    throw Error(ErrorCode::OracleBoundExceeded, std::to_string(c.object_count()) + " objects / " +
                                                    std::to_string(d.morphism_count()) + " morphisms");
  }
  BruteForceResult r;
  // naturality squares grouped by the later endpoint
  std::vector<std::vector<int>> squares(c.object_count());
  for (int m = 0; m < c.morphism_count(); ++m) squares[std::max(c.src(m), c.dst(m))].push_back(m);

  enumerate_functors(c, d, [&](const std::vector<int>& fobj, const std::vector<int>& fmor) {
    std::vector<std::vector<int>> candidates(c.object_count());
    for (int x = 0; x < c.object_count(); ++x) {
      for (int u : c.hom(x, g.obj(fobj[x]))) {
        bool bijective = true;
        for (int e = 0; e < d.object_count() && bijective; ++e) {
          std::set<int> image;
          for (int h : d.hom(fobj[x], e)) image.insert(c.compose(g.mor(h), u));
          bijective = image.size() == d.hom(fobj[x], e).size() && image.size() == c.hom(x, g.obj(e)).size();
        }
        if (bijective) candidates[x].push_back(u);
      }
      if (candidates[x].empty()) return true;
    }
    std::vector<int> unit(c.object_count(), -1);
    std::function<void(int)> pick = [&](int x) {
      if (x == c.object_count()) {
        r.adjoints.emplace_back(FinFunctor{g.target, g.source, fobj, fmor}, unit);
        return;
      }
      for (int u : candidates[x]) {
        unit[x] = u;
        bool natural = true;
        for (int m : squares[x]) {
          if (c.compose(g.mor(fmor[m]), unit[c.src(m)]) != c.compose(unit[c.dst(m)], m)) {
            natural = false;
            break;
          }
        }
        if (natural) pick(x + 1);
      }
      unit[x] = -1;
    };
    pick(0);
    return true;
  });
  r.exists = !r.adjoints.empty();
  return r;
}

bool is_connected(const FinCategory& c) {
  const int n = c.object_count();
  if (n == 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int components = n;
  for (int m = 0; m < c.morphism_count(); ++m) {
    const int a = find(c.src(m));
    const int b = find(c.dst(m));
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --components;
    }
  }
  return components == 1;
}

std::vector<CoinitialityRecord> coinitiality_profile(const FinFunctor& f) {
  std::vector<CoinitialityRecord> out;
  for (int d = 0; d < f.target->object_count(); ++d) {
    const Comma k = comma_over(f, d);
    CoinitialityRecord r;
    r.nonempty = k.category->object_count() > 0;
    r.connected = is_connected(*k.category);
    r.has_initial = !initial_objects(*k.category).empty();
    out.push_back(r);
  }
  return out;
}

}  // namespace adjunct
