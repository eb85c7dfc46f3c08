#include "adjunct/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "adjunct/error.hpp"

namespace adjunct::io {

using nlohmann::json;

struct Loader::Document {
  std::string path;
  std::string text;
  json root;
};

namespace {

using Document = Loader::Document;

int line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

// The first occurrence of the quoted key; good enough to point a reader at
// the right region of a hand-written file.
int line_of_key(const std::string& text, std::string_view key) {
  const auto pos = text.find("\"" + std::string(key) + "\"");
  return pos == std::string::npos ? 1 : line_of(text, pos);
}

[[noreturn]] void fail(const Document& doc, std::string_view key, const std::string& msg) {
  throw Error(ErrorCode::ParseError,
              doc.path + ":" + std::to_string(line_of_key(doc.text, key)) + ": key '" + std::string(key) + "': " + msg);
}

std::string strip_code(const Error& e) {
  const std::string what = e.what();
  const std::string prefix = std::string(to_string(e.code())) + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

// Engine errors raised while building a value from a file keep their code
// and gain the file name.
template <typename F>
auto in_file(const Document& doc, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(e.code(), doc.path + ": " + strip_code(e));
  }
}

const json& member(const Document& doc, const json& obj, std::string_view key) {
  if (!obj.is_object()) fail(doc, key, "expected an enclosing object");
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) fail(doc, key, "missing");
  return *it;
}

const json* optional_member(const Document& doc, const json& obj, std::string_view key) {
  if (!obj.is_object()) fail(doc, key, "expected an enclosing object");
  const auto it = obj.find(std::string(key));
  return it == obj.end() ? nullptr : &*it;
}

std::string as_string(const Document& doc, const json& v, std::string_view key) {
  if (!v.is_string()) fail(doc, key, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const Document& doc, const json& v, std::string_view key) {
  if (!v.is_array()) fail(doc, key, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(as_string(doc, e, key));
  return out;
}

std::map<std::string, std::string> string_map(const Document& doc, const json& v, std::string_view key) {
  if (!v.is_object()) fail(doc, key, "expected an object of strings");
  std::map<std::string, std::string> out;
  for (const auto& [k, e] : v.items()) out[k] = as_string(doc, e, k);
  return out;
}

std::vector<std::array<std::string, 3>> triples(const Document& doc, const json& v, std::string_view key) {
  if (!v.is_array()) fail(doc, key, "expected an array of [g, f, composite] triples");
  std::vector<std::array<std::string, 3>> out;
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 3) fail(doc, key, "expected an array of [g, f, composite] triples");
    out.push_back({as_string(doc, e[0], key), as_string(doc, e[1], key), as_string(doc, e[2], key)});
  }
  return out;
}

std::vector<RawMorphism> raw_morphisms(const Document& doc, const json& v, std::string_view key) {
  if (!v.is_array()) fail(doc, key, "expected an array of {id, src, dst}");
  std::vector<RawMorphism> out;
  for (const auto& e : v) {
    out.push_back({as_string(doc, member(doc, e, "id"), "id"), as_string(doc, member(doc, e, "src"), "src"),
                   as_string(doc, member(doc, e, "dst"), "dst")});
  }
  return out;
}

FinCategory category_from(const Document& doc, const json& node, const ValidateOptions& options) {
  RawCategory raw;
  raw.objects = string_list(doc, member(doc, node, "objects"), "objects");
  if (const auto* m = optional_member(doc, node, "morphisms")) raw.morphisms = raw_morphisms(doc, *m, "morphisms");
  if (const auto* i = optional_member(doc, node, "identities")) raw.identities = string_map(doc, *i, "identities");
  if (const auto* c = optional_member(doc, node, "compose")) raw.compose = triples(doc, *c, "compose");
  if (const auto* c = optional_member(doc, node, "closure")) {
    if (!c->is_boolean()) fail(doc, "closure", "expected a boolean");
    raw.closure = c->get<bool>();
  }
  return in_file(doc, [&] { return validate_category(raw, options); });
}

std::string sibling(const Document& doc, const std::string& rel) {
  const std::filesystem::path p(rel);
  if (p.is_absolute()) return p.lexically_normal().string();
  return (std::filesystem::path(doc.path).parent_path() / p).lexically_normal().string();
}

int index_in(const std::vector<std::string>& names, const std::string& name) {
  const auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

const Loader::Document& Loader::load(const std::string& path) {
  if (auto it = documents_.find(path); it != documents_.end()) return *it->second;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  auto doc = std::make_shared<Document>();
  doc->path = path;
  doc->text = buf.str();
  try {
    doc->root = json::parse(doc->text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ":" + std::to_string(line_of(doc->text, e.byte)) + ": invalid JSON");
  }
  inputs_.push_back({path, sha256_hex(doc->text)});
  return *documents_.emplace(path, std::move(doc)).first->second;
}

CategoryRef Loader::category(const std::string& path) {
  if (auto it = categories_.find(path); it != categories_.end()) return it->second;
  const Document& doc = load(path);
  auto c = share(category_from(doc, doc.root, options_));
  categories_.emplace(path, c);
  return c;
}

FinFunctor Loader::functor(const std::string& path) {
  const Document& doc = load(path);
  auto side = [&](std::string_view key) {
    const json& v = member(doc, doc.root, key);
    if (v.is_string()) return category(sibling(doc, v.get<std::string>()));
    if (v.is_object()) return share(category_from(doc, v, options_));
    fail(doc, key, "expected a path or an inline category");
  };
  const CategoryRef source = side("source");
  const CategoryRef target = side("target");
  RawFunctor raw;
  raw.obj_map = string_map(doc, member(doc, doc.root, "obj_map"), "obj_map");
  if (const auto* m = optional_member(doc, doc.root, "mor_map")) raw.mor_map = string_map(doc, *m, "mor_map");
  return in_file(doc, [&] { return validate_functor(raw, source, target); });
}

GpdRef Loader::gcat(const std::string& path) {
  if (auto it = gcats_.find(path); it != gcats_.end()) return it->second;
  const Document& doc = load(path);
  const json& root = doc.root;
  const auto objects = string_list(doc, member(doc, root, "objects"), "objects");
  const int n = static_cast<int>(objects.size());
  const json& homs_node = member(doc, root, "homs");
  if (!homs_node.is_object()) fail(doc, "homs", "expected an object keyed by \"x|y\"");
  for (const auto& [key, value] : homs_node.items()) {
    const auto bar = key.find('|');
    if (bar == std::string::npos || index_in(objects, key.substr(0, bar)) < 0 ||
        index_in(objects, key.substr(bar + 1)) < 0) {
      fail(doc, key, "hom keys are \"x|y\" for declared objects x and y");
    }
  }

  std::vector<CategoryRef> homs;
  std::map<std::string, std::pair<int, int>> cell_at;     // name -> (position, cell)
  std::map<std::string, std::pair<int, int>> twocell_at;  // name -> (position, 2-cell)
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const std::string key = objects[x] + "|" + objects[y];
      RawCategory raw;
      if (const auto* h = optional_member(doc, homs_node, key)) {
        raw.objects = string_list(doc, member(doc, *h, "cells"), "cells");
        if (const auto* t = optional_member(doc, *h, "twocells")) raw.morphisms = raw_morphisms(doc, *t, "twocells");
        if (const auto* i = optional_member(doc, *h, "identities")) raw.identities = string_map(doc, *i, "identities");
        if (const auto* c = optional_member(doc, *h, "compose2")) raw.compose = triples(doc, *c, "compose2");
      }
      auto hom = in_file(doc, [&] { return share(validate_category(raw, options_)); });
      const int pos = x * n + y;
      for (int a = 0; a < hom->object_count(); ++a) {
        if (!cell_at.emplace(hom->object(a), std::pair{pos, a}).second) fail(doc, hom->object(a), "cell names must be unique");
      }
      for (int t = 0; t < hom->morphism_count(); ++t) {
        if (!twocell_at.emplace(hom->name(t), std::pair{pos, t}).second) fail(doc, hom->name(t), "2-cell names must be unique");
      }
      homs.push_back(std::move(hom));
    }
  }

  std::map<std::string, std::string> id_names;
  if (const auto* i = optional_member(doc, root, "identities")) id_names = string_map(doc, *i, "identities");
  std::vector<int> identity_cells;
  for (int x = 0; x < n; ++x) {
    const auto it = id_names.find(objects[x]);
    const std::string name = it == id_names.end() ? "id_" + objects[x] : it->second;
    const auto c = homs[x * n + x]->find_object(name);
    if (!c) fail(doc, "identities", "identity cell '" + name + "' of " + objects[x] + " is not declared in " + objects[x] + "|" + objects[x]);
    identity_cells.push_back(*c);
  }

  using Key = std::tuple<int, int, int, int>;  // (position of g, g, position of f, f)
  std::map<Key, int> cell_table, twocell_table;
  auto read_table = [&](const char* key, const std::map<std::string, std::pair<int, int>>& at, std::map<Key, int>& table) {
    const json* hc = optional_member(doc, root, "hcompose");
    if (!hc) return;
    const json* entries = optional_member(doc, *hc, key);
    if (!entries) return;
    for (const auto& [g, f, gf] : triples(doc, *entries, key)) {
      const auto ig = at.find(g), jf = at.find(f), kgf = at.find(gf);
      if (ig == at.end() || jf == at.end() || kgf == at.end()) fail(doc, key, "entry " + g + " * " + f + " names an unknown cell");
      const int py = ig->second.first, px = jf->second.first;
      if (px % n != py / n || kgf->second.first != (px / n) * n + py % n) {
        fail(doc, key, "entry " + g + " * " + f + " = " + gf + " is ill-typed");
      }
      if (!table.emplace(Key{py, ig->second.second, px, jf->second.second}, kgf->second.second).second) {
        fail(doc, key, "duplicate entry for " + g + " * " + f);
      }
    }
  };
  read_table("cells", cell_at, cell_table);
  read_table("twocells", twocell_at, twocell_table);

  auto unit_cell = [&](int x, int y, int f) { return x == y && identity_cells[x] == f; };
  auto unit_twocell = [&](int x, int y, int a) {
    return x == y && a == homs[x * n + x]->identity(identity_cells[x]);
  };
  auto cells = [&](int x, int y, int z, int g, int f) {
    if (auto it = cell_table.find(Key{y * n + z, g, x * n + y, f}); it != cell_table.end()) return it->second;
    if (unit_cell(x, y, f)) return g;
    if (unit_cell(y, z, g)) return f;
    throw Error(ErrorCode::MissingComposite, "no hcompose entry for " + homs[y * n + z]->object(g) + " * " + homs[x * n + y]->object(f));
  };
  auto twocells = [&](int x, int y, int z, int b, int a) {
    if (auto it = twocell_table.find(Key{y * n + z, b, x * n + y, a}); it != twocell_table.end()) return it->second;
    if (unit_twocell(x, y, a)) return b;
    if (unit_twocell(y, z, b)) return a;
    throw Error(ErrorCode::MissingComposite, "no hcompose entry for " + homs[y * n + z]->name(b) + " * " + homs[x * n + y]->name(a));
  };
  auto g = in_file(doc, [&] { return share(GpdCategory::build(objects, homs, identity_cells, cells, twocells)); });
  gcats_.emplace(path, g);
  return g;
}

GpdFunctor Loader::gfunctor(const std::string& path) {
  const Document& doc = load(path);
  const json& root = doc.root;
  auto side = [&](std::string_view key) {
    const json& v = member(doc, root, key);
    if (!v.is_string()) fail(doc, key, "expected a path to an enriched category file");
    return gcat(sibling(doc, v.get<std::string>()));
  };
  const GpdRef s = side("source");
  const GpdRef t = side("target");
  const auto objs = string_map(doc, member(doc, root, "obj_map"), "obj_map");
  std::map<std::string, std::string> cells, twocells;
  if (const auto* c = optional_member(doc, root, "cell_map")) cells = string_map(doc, *c, "cell_map");
  if (const auto* c = optional_member(doc, root, "twocell_map")) twocells = string_map(doc, *c, "twocell_map");

  const int n = s->object_count();
  std::vector<int> obj(static_cast<std::size_t>(n), -1);
  for (const auto& [a, b] : objs) {
    const auto x = s->find_object(a);
    const auto y = t->find_object(b);
    if (!x || !y) fail(doc, a, "object map entry " + a + " -> " + b + " names an unknown object");
    obj[*x] = *y;
  }
  for (int x = 0; x < n; ++x) {
    if (obj[x] < 0) fail(doc, "obj_map", "object " + s->object(x) + " has no image");
  }
  std::vector<std::vector<int>> cell_map, twocell_map;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const FinCategory& from = s->hom(x, y);
      const FinCategory& to = t->hom(obj[x], obj[y]);
      std::vector<int> cm;
      for (int a = 0; a < from.object_count(); ++a) {
        const std::string& name = from.object(a);
        int image = -1;
        if (auto it = cells.find(name); it != cells.end()) {
          image = to.find_object(it->second).value_or(-1);
          if (image < 0) fail(doc, name, "image " + it->second + " is not a cell of the target hom");
        } else if (x == y && a == s->identity_cell(x)) {
          image = t->identity_cell(obj[x]);
        } else if (to.object_count() == 1) {
          image = 0;
        } else {
          fail(doc, "cell_map", "cell " + name + " has no image");
        }
        cm.push_back(image);
      }
      std::vector<int> tm;
      for (int m = 0; m < from.morphism_count(); ++m) {
        const std::string& name = from.name(m);
        int image = -1;
        if (auto it = twocells.find(name); it != twocells.end()) {
          image = to.find_morphism(it->second).value_or(-1);
          if (image < 0) fail(doc, name, "image " + it->second + " is not a 2-cell of the target hom");
        } else if (from.is_identity(m)) {
          image = to.identity(cm[from.src(m)]);
        } else if (const auto h = to.hom(cm[from.src(m)], cm[from.dst(m)]); h.size() == 1) {
          image = h[0];
        } else {
          fail(doc, "twocell_map", "2-cell " + name + " has no image");
        }
        tm.push_back(image);
      }
      cell_map.push_back(std::move(cm));
      twocell_map.push_back(std::move(tm));
    }
  }
  return in_file(doc, [&] { return make_gpd_functor(s, t, obj, cell_map, twocell_map); });
}

TruncSSet Loader::sset(const std::string& path) {
  const Document& doc = load(path);
  const json& simplices = member(doc, doc.root, "simplices");
  if (!simplices.is_object()) fail(doc, "simplices", "expected an object keyed by dimension");
  std::array<std::vector<std::string>, 4> names;
  for (const auto& [key, value] : simplices.items()) {
    if (key.size() != 1 || key[0] < '0' || key[0] > '3') fail(doc, key, "dimensions are \"0\" to \"3\"");
    names[static_cast<std::size_t>(key[0] - '0')] = string_list(doc, value, key);
  }
  auto find = [&](int d, const std::string& name) { return index_in(names[static_cast<std::size_t>(d)], name); };

  std::array<std::vector<std::vector<Simplex>>, 4> faces;
  const json* face_node = optional_member(doc, doc.root, "faces");
  for (int d = 1; d <= 3; ++d) {
    const json* level = nullptr;
    if (face_node) level = optional_member(doc, *face_node, std::to_string(d));
    for (const auto& name : names[d]) {
      if (!level) fail(doc, "faces", "dimension " + std::to_string(d) + " has no face table");
      const json& list = member(doc, *level, name);
      if (!list.is_array() || static_cast<int>(list.size()) != d + 1) {
        fail(doc, name, "expected " + std::to_string(d + 1) + " faces");
      }
      std::vector<Simplex> fs;
      for (const auto& f : list) {
        if (f.is_string()) {
          const int s = find(d - 1, f.get<std::string>());
          if (s < 0) fail(doc, name, "face " + f.get<std::string>() + " is not a " + std::to_string(d - 1) + "-simplex");
          fs.push_back(nondegenerate(d - 1, s));
          continue;
        }
        const std::string of = as_string(doc, member(doc, f, "degenerate_of"), "degenerate_of");
        int k = d - 2;
        while (k >= 0 && find(k, of) < 0) --k;
        if (k < 0) fail(doc, "degenerate_of", of + " is not a simplex below dimension " + std::to_string(d - 1));
        std::vector<int> map(static_cast<std::size_t>(d), 0);
        if (const auto* m = optional_member(doc, f, "map")) {
          if (!m->is_array() || static_cast<int>(m->size()) != d) fail(doc, "map", "expected " + std::to_string(d) + " entries");
          for (std::size_t i = 0; i < map.size(); ++i) {
            if (!(*m)[i].is_number_integer()) fail(doc, "map", "expected integers");
            map[i] = (*m)[i].get<int>();
          }
        } else if (k != 0) {
          fail(doc, "degenerate_of", "a map is required unless the face degenerates to a vertex");
        }
        fs.push_back(Simplex{k, find(k, of), std::move(map)});
      }
      faces[static_cast<std::size_t>(d)].push_back(std::move(fs));
    }
  }
  return in_file(doc, [&] { return TruncSSet::build(names, faces); });
}

SetFunctor Loader::set_functor(const std::string& path, const CategoryRef& base) {
  const Document& doc = load(path);
  const FinCategory& c = *base;
  const json& objs = member(doc, doc.root, "on_objects");
  std::vector<std::vector<std::string>> sets;
  for (int x = 0; x < c.object_count(); ++x) sets.push_back(string_list(doc, member(doc, objs, c.object(x)), c.object(x)));
  std::vector<std::vector<int>> maps(static_cast<std::size_t>(c.morphism_count()));
  const json* mors = optional_member(doc, doc.root, "on_morphisms");
  for (int f = 0; f < c.morphism_count(); ++f) {
    const auto& from = sets[c.dst(f)];
    const auto& to = sets[c.src(f)];
    const json* table = mors ? optional_member(doc, *mors, c.name(f)) : nullptr;
    if (!table) {
      if (c.is_identity(f)) {
        for (int e = 0; e < static_cast<int>(from.size()); ++e) maps[f].push_back(e);
      } else if (!from.empty()) {
        fail(doc, "on_morphisms", "morphism " + c.name(f) + " has no table");
      }
      continue;
    }
    const auto m = string_map(doc, *table, c.name(f));
    for (const auto& e : from) {
      const auto it = m.find(e);
      if (it == m.end()) fail(doc, c.name(f), "element " + e + " has no image");
      const int v = index_in(to, it->second);
      if (v < 0) fail(doc, c.name(f), "image " + it->second + " is not an element of F(" + c.object(c.src(f)) + ")");
      maps[f].push_back(v);
    }
  }
  return in_file(doc, [&] { return make_set_functor(base, sets, maps); });
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

ordered_json to_json(const FinCategory& c) {
  ordered_json j;
  j["objects"] = c.objects();
  j["morphisms"] = ordered_json::array();
  for (const auto& m : c.morphisms()) {
    j["morphisms"].push_back({{"id", m.id}, {"src", c.object(m.src)}, {"dst", c.object(m.dst)}});
  }
  j["identities"] = ordered_json::object();
  for (int x = 0; x < c.object_count(); ++x) j["identities"][c.object(x)] = c.name(c.identity(x));
  j["compose"] = ordered_json::array();
  for (int f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f)) continue;
    for (int g : c.out(c.dst(f))) {
      if (!c.is_identity(g)) j["compose"].push_back({c.name(g), c.name(f), c.name(c.compose(g, f))});
    }
  }
  return j;
}

ordered_json to_json(const FinFunctor& f) {
  ordered_json j;
  j["obj_map"] = ordered_json::object();
  for (int x = 0; x < f.source->object_count(); ++x) j["obj_map"][f.source->object(x)] = f.target->object(f.obj(x));
  j["mor_map"] = ordered_json::object();
  for (int m = 0; m < f.source->morphism_count(); ++m) {
    if (!f.source->is_identity(m)) j["mor_map"][f.source->name(m)] = f.target->name(f.mor(m));
  }
  return j;
}

ordered_json to_json(const GpdCategory& c) {
  const int n = c.object_count();
  ordered_json j;
  j["objects"] = c.objects();
  j["identities"] = ordered_json::object();
  for (int x = 0; x < n; ++x) j["identities"][c.object(x)] = c.hom(x, x).object(c.identity_cell(x));
  j["homs"] = ordered_json::object();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const FinCategory& h = c.hom(x, y);
      if (h.object_count() == 0) continue;
      ordered_json hj = to_json(h);
      ordered_json out;
      out["cells"] = hj["objects"];
      out["twocells"] = hj["morphisms"];
      out["identities"] = hj["identities"];
      out["compose2"] = hj["compose"];
      j["homs"][c.object(x) + "|" + c.object(y)] = std::move(out);
    }
  }
  ordered_json cells = ordered_json::array(), twocells = ordered_json::array();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const FinCategory& f_hom = c.hom(x, y);
        const FinCategory& g_hom = c.hom(y, z);
        const FinCategory& gf_hom = c.hom(x, z);
        for (int g = 0; g < g_hom.object_count(); ++g) {
          if (y == z && g == c.identity_cell(y)) continue;
          for (int f = 0; f < f_hom.object_count(); ++f) {
            if (x == y && f == c.identity_cell(x)) continue;
            cells.push_back({g_hom.object(g), f_hom.object(f), gf_hom.object(c.compose_cells(x, y, z, g, f))});
          }
        }
        for (int b = 0; b < g_hom.morphism_count(); ++b) {
          if (y == z && b == g_hom.identity(c.identity_cell(y))) continue;
          for (int a = 0; a < f_hom.morphism_count(); ++a) {
            if (x == y && a == f_hom.identity(c.identity_cell(x))) continue;
            twocells.push_back({g_hom.name(b), f_hom.name(a), gf_hom.name(c.compose_twocells(x, y, z, b, a))});
          }
        }
      }
    }
  }
  j["hcompose"] = {{"cells", std::move(cells)}, {"twocells", std::move(twocells)}};
  return j;
}

ordered_json to_json(const TruncSSet& k) {
  ordered_json j;
  j["simplices"] = ordered_json::object();
  const int top = k.top_dimension();
  for (int d = 0; d <= top; ++d) {
    ordered_json names = ordered_json::array();
    for (int s = 0; s < k.count(d); ++s) names.push_back(k.name(d, s));
    j["simplices"][std::to_string(d)] = std::move(names);
  }
  j["faces"] = ordered_json::object();
  for (int d = 1; d <= top; ++d) {
    ordered_json level = ordered_json::object();
    for (int s = 0; s < k.count(d); ++s) {
      ordered_json fs = ordered_json::array();
      for (const auto& f : k.faces(d, s)) {
        if (!f.degenerate()) {
          fs.push_back(k.name(f.dim, f.index));
        } else {
          fs.push_back({{"degenerate_of", k.name(f.dim, f.index)}, {"map", f.map}});
        }
      }
      level[k.name(d, s)] = std::move(fs);
    }
    j["faces"][std::to_string(d)] = std::move(level);
  }
  return j;
}

ordered_json to_json(const SetFunctor& f) {
  const FinCategory& c = *f.base;
  ordered_json j;
  j["on_objects"] = ordered_json::object();
  for (int x = 0; x < c.object_count(); ++x) j["on_objects"][c.object(x)] = f.sets[x];
  j["on_morphisms"] = ordered_json::object();
  for (int m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    ordered_json t = ordered_json::object();
    for (int e = 0; e < f.size(c.dst(m)); ++e) t[f.sets[c.dst(m)][e]] = f.sets[c.src(m)][f.apply(m, e)];
    j["on_morphisms"][c.name(m)] = std::move(t);
  }
  return j;
}

ordered_json certificate(std::string_view operation, ordered_json body, const std::vector<Input>& inputs) {
  ordered_json files = ordered_json::array();
  for (const auto& in : inputs) files.push_back({{"path", in.path}, {"sha256", in.sha256}});
  body["provenance"] = {{"operation", operation}, {"inputs", std::move(files)}, {"engine_version", kEngineVersion}};
  return body;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace adjunct::io
