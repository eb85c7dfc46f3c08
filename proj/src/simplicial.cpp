#include "adjunct/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "adjunct/catalog.hpp"
#include "adjunct/error.hpp"
#include "adjunct/presentation.hpp"

namespace adjunct {
namespace {

using std::size_t;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

bool is_surjection(const std::vector<int>& m, int dim) {
  if (m.empty() || m.front() != 0 || m.back() != dim) return false;
  for (size_t p = 1; p < m.size(); ++p) {
    if (m[p] != m[p - 1] && m[p] != m[p - 1] + 1) return false;
  }
  return true;
}

// Monotone surjections [n] -> [d], lexicographically.
std::vector<std::vector<int>> surjections(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur{0};
  std::function<void()> go = [&] {
    if (static_cast<int>(cur.size()) == n + 1) {
      if (cur.back() == d) out.push_back(cur);
      return;
    }
    const int remaining = n + 1 - static_cast<int>(cur.size());
    for (int step = 0; step <= 1; ++step) {
      const int v = cur.back() + step;
      if (v > d || d - v > remaining - 1) continue;
      cur.push_back(v);
      go();
      cur.pop_back();
    }
  };
  go();
  return out;
}

std::string describe(const TruncSSet& k, const Simplex& s) {
  std::string out = k.name(s.dim, s.index);
  if (s.degenerate()) {
    out += "[";
    for (size_t p = 0; p < s.map.size(); ++p) out += (p ? "," : "") + std::to_string(s.map[p]);
    out += "]";
  }
  return out;
}

}  // namespace

Simplex nondegenerate(int dim, int index) {
  Simplex s{dim, index, std::vector<int>(static_cast<size_t>(dim + 1))};
  std::iota(s.map.begin(), s.map.end(), 0);
  return s;
}

// ---------------------------------------------------------------------------
// TruncSSet
// ---------------------------------------------------------------------------

TruncSSet TruncSSet::build(std::array<std::vector<std::string>, 4> names,
                           std::array<std::vector<std::vector<Simplex>>, 4> faces) {
  TruncSSet k;
  for (int n = 0; n <= kTop; ++n) {
    std::unordered_set<std::string> seen;
    for (const auto& s : names[n]) {
      if (!seen.insert(s).second) malformed("duplicate " + std::to_string(n) + "-simplex '" + s + "'");
    }
    if (n == 0) {
      faces[0].assign(names[0].size(), {});
    } else if (faces[n].size() != names[n].size()) {
      malformed("face lists missing in dimension " + std::to_string(n));
    }
  }
  k.names_ = std::move(names);
  k.faces_ = std::move(faces);
  for (int n = 1; n <= kTop; ++n) {
    for (int s = 0; s < k.count(n); ++s) {
      const auto& fs = k.faces(n, s);
      if (static_cast<int>(fs.size()) != n + 1) malformed("simplex '" + k.name(n, s) + "' needs " + std::to_string(n + 1) + " faces");
      for (const auto& f : fs) {
        if (f.degree() != n - 1 || f.dim < 0 || f.dim > n - 1 || f.index < 0 || f.index >= k.count(f.dim) ||
            !is_surjection(f.map, f.dim)) {
          malformed("simplex '" + k.name(n, s) + "' has an ill-typed face");
        }
      }
    }
  }
  for (int n = 2; n <= kTop; ++n) {
    for (int s = 0; s < k.count(n); ++s) {
      const Simplex top = nondegenerate(n, s);
      for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (k.face(k.face(top, j), i) != k.face(k.face(top, i), j - 1)) {
            throw Error(ErrorCode::LawViolation, "simplicial identity d" + std::to_string(i) + " d" + std::to_string(j) +
                                                     " = d" + std::to_string(j - 1) + " d" + std::to_string(i) +
                                                     " fails on '" + k.name(n, s) + "'");
          }
        }
      }
    }
  }
  return k;
}

int TruncSSet::top_dimension() const {
  for (int n = kTop; n >= 0; --n) {
    if (count(n) > 0) return n;
  }
  return -1;
}

int TruncSSet::find(int n, const std::string& name) const {
  const auto& v = names_[static_cast<size_t>(n)];
  const auto it = std::find(v.begin(), v.end(), name);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

Simplex TruncSSet::face(const Simplex& s, int i) const {
  const int n = s.degree();
  if (n < 1 || i < 0 || i > n) malformed("face index out of range");
  std::vector<int> c = s.map;
  c.erase(c.begin() + i);
  if (is_surjection(c, s.dim)) return Simplex{s.dim, s.index, std::move(c)};
  // the value s.map[i] is no longer hit: pass to the j-th face of the base
  const int j = s.map[static_cast<size_t>(i)];
  for (int& v : c) {
    if (v > j) --v;
  }
  const Simplex& base = faces(s.dim, s.index)[static_cast<size_t>(j)];
  Simplex out{base.dim, base.index, {}};
  for (int v : c) out.map.push_back(base.map[static_cast<size_t>(v)]);
  return out;
}

std::vector<int> TruncSSet::vertices(const Simplex& s) const {
  std::vector<int> base;
  if (s.dim == 0) {
    base = {s.index};
  } else {
    const auto& fs = faces(s.dim, s.index);
    base = vertices(fs[static_cast<size_t>(s.dim)]);
    base.push_back(vertices(fs[0]).back());
  }
  std::vector<int> out;
  for (int v : s.map) out.push_back(base[static_cast<size_t>(v)]);
  return out;
}

std::vector<Simplex> TruncSSet::all_simplices(int n) const {
  std::vector<Simplex> out;
  for (int d = 0; d <= n; ++d) {
    const auto maps = surjections(n, d);
    for (int idx = 0; idx < count(d); ++idx) {
      for (const auto& m : maps) out.push_back(Simplex{d, idx, m});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

TruncSSet nerve(const FinCategory& c) {
  std::array<std::vector<std::string>, 4> names;
  std::array<std::vector<std::vector<Simplex>>, 4> faces;
  std::array<std::map<std::vector<int>, int>, 4> index;
  std::array<std::vector<std::vector<int>>, 4> chains;
  names[0] = c.objects();
  for (int f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f)) continue;
    chains[1].push_back({f});
  }
  for (int n = 2; n <= TruncSSet::kTop; ++n) {
    for (const auto& ch : chains[n - 1]) {
      for (int g : c.out(c.dst(ch.back()))) {
        if (c.is_identity(g)) continue;
        auto next = ch;
        next.push_back(g);
        chains[n].push_back(std::move(next));
      }
    }
  }
  for (int n = 1; n <= TruncSSet::kTop; ++n) {
    for (size_t i = 0; i < chains[n].size(); ++i) {
      index[n][chains[n][i]] = static_cast<int>(i);
      std::string name;
      for (int f : chains[n][i]) name += (name.empty() ? "" : "|") + c.name(f);
      names[n].push_back(std::move(name));
    }
  }
  // a chain that may contain identities, in Eilenberg-Zilber form
  auto simplex_of = [&](int start, const std::vector<int>& chain) {
    std::vector<int> nonid;
    Simplex s{0, 0, {0}};
    for (int f : chain) {
      if (!c.is_identity(f)) nonid.push_back(f);
      s.map.push_back(static_cast<int>(nonid.size()));
    }
    s.dim = static_cast<int>(nonid.size());
    s.index = s.dim == 0 ? start : index[static_cast<size_t>(s.dim)].at(nonid);
    return s;
  };
  for (int n = 1; n <= TruncSSet::kTop; ++n) {
    for (const auto& ch : chains[n]) {
      std::vector<Simplex> fs;
      for (int i = 0; i <= n; ++i) {
        std::vector<int> sub;
        int start = c.src(ch.front());
        if (i == 0) {
          sub.assign(ch.begin() + 1, ch.end());
          start = c.dst(ch.front());
        } else if (i == n) {
          sub.assign(ch.begin(), ch.end() - 1);
        } else {
          for (int p = 0; p < n; ++p) {
            if (p == i) continue;
            if (p == i - 1) {
              sub.push_back(c.compose(ch[static_cast<size_t>(i)], ch[static_cast<size_t>(i - 1)]));
            } else {
              sub.push_back(ch[static_cast<size_t>(p)]);
            }
          }
        }
        fs.push_back(simplex_of(start, sub));
      }
      faces[n].push_back(std::move(fs));
    }
  }
  return TruncSSet::build(std::move(names), std::move(faces));
}

TruncSSet standard_simplex(int n) {
  if (n < 0 || n > TruncSSet::kTop) malformed("standard simplex dimension out of range");
  return nerve(*catalog::chain(n + 1));
}

TruncSSet skeleton(const TruncSSet& k, int dim) {
  std::array<std::vector<std::string>, 4> names;
  std::array<std::vector<std::vector<Simplex>>, 4> faces;
  for (int n = 0; n <= std::min(dim, TruncSSet::kTop); ++n) {
    for (int s = 0; s < k.count(n); ++s) {
      names[n].push_back(k.name(n, s));
      if (n > 0) faces[n].push_back(k.faces(n, s));
    }
  }
  return TruncSSet::build(std::move(names), std::move(faces));
}

TruncSSet boundary(int n) {
  if (n == 0) return TruncSSet::build({}, {});
  return skeleton(standard_simplex(n), n - 1);
}

TruncSSet opposite(const TruncSSet& k) {
  auto flip = [](const Simplex& s) {
    Simplex r{s.dim, s.index, {}};
    for (auto it = s.map.rbegin(); it != s.map.rend(); ++it) r.map.push_back(s.dim - *it);
    return r;
  };
  std::array<std::vector<std::string>, 4> names;
  std::array<std::vector<std::vector<Simplex>>, 4> faces;
  for (int n = 0; n <= TruncSSet::kTop; ++n) {
    for (int s = 0; s < k.count(n); ++s) {
      names[n].push_back(k.name(n, s));
      if (n == 0) continue;
      std::vector<Simplex> fs;
      for (int i = 0; i <= n; ++i) fs.push_back(flip(k.faces(n, s)[static_cast<size_t>(n - i)]));
      faces[n].push_back(std::move(fs));
    }
  }
  return TruncSSet::build(std::move(names), std::move(faces));
}

Join join_point(const TruncSSet& k) {
  std::array<std::vector<std::string>, 4> names;
  std::array<std::vector<std::vector<Simplex>>, 4> faces;
  auto lift = [](const Simplex& s) { return Simplex{s.dim, s.dim == 0 ? s.index + 1 : s.index, s.map}; };
  auto cone = [&](const Simplex& s) {
    Simplex r{s.dim + 1, k.count(s.dim + 1) + s.index, {0}};
    for (int v : s.map) r.map.push_back(v + 1);
    return r;
  };
  names[0].push_back("apex");
  for (int v = 0; v < k.count(0); ++v) names[0].push_back(k.name(0, v));
  for (int n = 1; n <= TruncSSet::kTop; ++n) {
    for (int s = 0; s < k.count(n); ++s) {
      names[n].push_back(k.name(n, s));
      std::vector<Simplex> fs;
      for (const auto& f : k.faces(n, s)) fs.push_back(lift(f));
      faces[n].push_back(std::move(fs));
    }
    for (int s = 0; s < k.count(n - 1); ++s) {
      names[n].push_back("apex*" + k.name(n - 1, s));
      const Simplex base = nondegenerate(n - 1, s);
      std::vector<Simplex> fs{lift(base)};
      for (int i = 1; i <= n; ++i) fs.push_back(n == 1 ? nondegenerate(0, 0) : cone(k.face(base, i - 1)));
      faces[n].push_back(std::move(fs));
    }
  }
  return Join{TruncSSet::build(std::move(names), std::move(faces)), k.count(TruncSSet::kTop) > 0};
}

FinCategory tau1(const TruncSSet& k, size_t closure_cap) {
  Presentation p;
  p.object_count = k.count(0);
  for (int e = 0; e < k.count(1); ++e) {
    const auto& fs = k.faces(1, e);
    p.generators.push_back({fs[1].index, fs[0].index});
  }
  auto path = [](const Simplex& edge) { return edge.dim == 0 ? std::vector<int>{} : std::vector<int>{edge.index}; };
  for (int s = 0; s < k.count(2); ++s) {
    const auto& fs = k.faces(2, s);
    auto lhs = path(fs[2]);
    const auto tail = path(fs[0]);
    lhs.insert(lhs.end(), tail.begin(), tail.end());
    p.relations.push_back({k.vertices(nondegenerate(2, s))[0], std::move(lhs), path(fs[1])});
  }
  const auto closed = PresentedCategory::close(p, closure_cap);
  const auto& elems = closed.elements();
  std::vector<Morphism> morphisms;
  std::unordered_set<std::string> used;
  for (const auto& e : elems) {
    std::string name;
    if (e.path.empty()) name = "id_" + k.name(0, e.src);
    for (auto it = e.path.rbegin(); it != e.path.rend(); ++it) name += (name.empty() ? "" : ".") + k.name(1, *it);
    while (!used.insert(name).second) name += "'";
    morphisms.push_back({std::move(name), e.src, e.dst});
  }
  std::vector<int> identities;
  for (int x = 0; x < k.count(0); ++x) identities.push_back(closed.identity(x));
  std::vector<std::string> objects;
  for (int x = 0; x < k.count(0); ++x) objects.push_back(k.name(0, x));
  return FinCategory::build(std::move(objects), std::move(morphisms), std::move(identities),
                            [&](int g, int f) { return closed.compose(g, f); });
}

TruncSSet vertex_slice(const TruncSSet& k, int x, bool under) {
  if (x < 0 || x >= k.count(0)) throw Error(ErrorCode::UnknownObject, "no vertex " + std::to_string(x));
  if (under) return opposite(vertex_slice(opposite(k), x, false));
  constexpr int top = 2;
  // slice dimension j: A = nondegenerate (j+1)-simplices ending at x,
  // B = nondegenerate j-simplices ending at x (degenerate in the last slot)
  std::array<std::map<int, int>, top + 1> a_index;
  std::array<std::map<int, int>, top + 1> b_index;
  std::array<std::vector<std::string>, 4> names;
  std::array<std::vector<Simplex>, top + 1> source;  // slice simplex -> K simplex
  for (int j = 0; j <= top; ++j) {
    for (int s = 0; s < k.count(j + 1); ++s) {
      const Simplex sig = nondegenerate(j + 1, s);
      if (k.vertices(sig).back() != x) continue;
      a_index[j][s] = static_cast<int>(source[j].size());
      names[j].push_back(k.name(j + 1, s));
      source[j].push_back(sig);
    }
    for (int s = 0; s < k.count(j); ++s) {
      Simplex y = nondegenerate(j, s);
      if (k.vertices(y).back() != x) continue;
      b_index[j][s] = static_cast<int>(source[j].size());
      names[j].push_back(k.name(j, s) + "|id");
      y.map.push_back(j);
      source[j].push_back(std::move(y));
    }
  }
  auto convert = [&](const Simplex& t) {
    const int n = t.degree();
    std::vector<int> head(t.map.begin(), t.map.end() - 1);
    if (n >= 1 && t.map[static_cast<size_t>(n)] == t.map[static_cast<size_t>(n - 1)]) {
      return Simplex{t.dim, b_index[static_cast<size_t>(t.dim)].at(t.index), std::move(head)};
    }
    return Simplex{t.dim - 1, a_index[static_cast<size_t>(t.dim - 1)].at(t.index), std::move(head)};
  };
  std::array<std::vector<std::vector<Simplex>>, 4> faces;
  for (int j = 1; j <= top; ++j) {
    for (const auto& sig : source[j]) {
      std::vector<Simplex> fs;
      for (int i = 0; i <= j; ++i) fs.push_back(convert(k.face(sig, i)));
      faces[j].push_back(std::move(fs));
    }
  }
  return TruncSSet::build(std::move(names), std::move(faces));
}

// ---------------------------------------------------------------------------
// Horns and lifting
// ---------------------------------------------------------------------------

HornReport inner_horn_check(const TruncSSet& k) {
  HornReport r;
  const auto e = k.all_simplices(1);
  const auto t = k.all_simplices(2);
  const auto q = k.all_simplices(3);
  auto fail = [&](std::string d) {
    r.unique = false;
    r.detail = std::move(d);
    return r;
  };

  std::map<std::pair<Simplex, Simplex>, int> fill2;
  for (const auto& s : t) ++fill2[{k.face(s, 2), k.face(s, 0)}];
  for (const auto& a : e) {
    for (const auto& b : e) {
      if (k.face(a, 0) != k.face(b, 1)) continue;
      const auto it = fill2.find({a, b});
      if (it == fill2.end() || it->second != 1) return fail("horn (1,2) on " + describe(k, a) + ", " + describe(k, b));
    }
  }

  std::map<std::vector<Simplex>, int> fill31;
  std::map<std::vector<Simplex>, int> fill32;
  for (const auto& s : q) {
    ++fill31[{k.face(s, 0), k.face(s, 2), k.face(s, 3)}];
    ++fill32[{k.face(s, 0), k.face(s, 1), k.face(s, 3)}];
  }
  for (const auto& t0 : t) {
    for (const auto& t3 : t) {
      if (k.face(t3, 0) != k.face(t0, 2)) continue;
      for (const auto& t2 : t) {
        if (k.face(t2, 0) == k.face(t0, 1) && k.face(t2, 2) == k.face(t3, 2)) {
          const auto it = fill31.find({t0, t2, t3});
          if (it == fill31.end() || it->second != 1) return fail("horn (1,3) at " + describe(k, t0) + ", " + describe(k, t2) + ", " + describe(k, t3));
        }
        const Simplex& t1 = t2;
        if (k.face(t1, 0) == k.face(t0, 0) && k.face(t3, 1) == k.face(t1, 2)) {
          const auto it = fill32.find({t0, t1, t3});
          if (it == fill32.end() || it->second != 1) return fail("horn (2,3) at " + describe(k, t0) + ", " + describe(k, t1) + ", " + describe(k, t3));
        }
      }
    }
  }
  return r;
}

bool initial_by_lifting(const TruncSSet& k, int x, int nmax) {
  if (x < 0 || x >= k.count(0)) throw Error(ErrorCode::UnknownObject, "no vertex " + std::to_string(x));
  if (const auto h = inner_horn_check(k); !h.unique) throw Error(ErrorCode::NotANerve, h.detail);
  for (int n = 1; n <= std::min(nmax, TruncSSet::kTop); ++n) {
    const auto lower = k.all_simplices(n - 1);
    std::set<std::vector<Simplex>> fillers;
    for (const auto& s : k.all_simplices(n)) {
      std::vector<Simplex> fs;
      for (int i = 0; i <= n; ++i) fs.push_back(k.face(s, i));
      fillers.insert(std::move(fs));
    }
    std::vector<Simplex> tau;
    // assign τ_0 .. τ_n with d_i τ_j = d_{j-1} τ_i for i < j
    std::function<bool()> extend = [&]() -> bool {
      const int j = static_cast<int>(tau.size());
      if (j == n + 1) return fillers.count(tau) > 0;
      for (const auto& c : lower) {
        if (j == 1 && k.vertices(c)[0] != x) continue;
        bool ok = true;
        for (int i = 0; i < j && ok && n >= 2; ++i) ok = k.face(c, i) == k.face(tau[static_cast<size_t>(i)], j - 1);
        if (!ok) continue;
        tau.push_back(c);
        const bool filled = extend();
        tau.pop_back();
        if (!filled) return false;
      }
      return true;
    };
    if (!extend()) return false;
  }
  return true;
}

bool isomorphic(const TruncSSet& a, const TruncSSet& b) {
  for (int n = 0; n <= TruncSSet::kTop; ++n) {
    if (a.count(n) != b.count(n)) return false;
  }
  std::array<std::vector<int>, 4> pi;
  std::array<std::vector<bool>, 4> taken;
  for (int n = 0; n <= TruncSSet::kTop; ++n) {
    pi[n].assign(static_cast<size_t>(a.count(n)), -1);
    taken[n].assign(static_cast<size_t>(b.count(n)), false);
  }
  auto image = [&](const Simplex& s) { return Simplex{s.dim, pi[static_cast<size_t>(s.dim)][static_cast<size_t>(s.index)], s.map}; };
  std::function<bool(int, int)> go = [&](int n, int s) -> bool {
    if (n > TruncSSet::kTop) return true;
    if (s == a.count(n)) return go(n + 1, 0);
    for (int t = 0; t < b.count(n); ++t) {
      if (taken[n][t]) continue;
      bool ok = true;
      for (int i = 0; i <= n && ok && n > 0; ++i) ok = image(a.faces(n, s)[static_cast<size_t>(i)]) == b.faces(n, t)[static_cast<size_t>(i)];
      if (!ok) continue;
      pi[n][s] = t;
      taken[n][t] = true;
      if (go(n, s + 1)) return true;
      taken[n][t] = false;
      pi[n][s] = -1;
    }
    return false;
  };
  return go(0, 0);
}

}  // namespace adjunct
