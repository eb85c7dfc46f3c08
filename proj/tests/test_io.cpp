#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>

#include <unistd.h>

#include "adjunct/catalog.hpp"
#include "adjunct/error.hpp"
#include "adjunct/io.hpp"

using namespace adjunct;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("adjunct_io_" + std::to_string(::getpid()))) { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = (path / name).string();
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }
};

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::MalformedInput;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("sha256") {
  CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(io::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("categories round-trip") {
  TempDir tmp;
  for (const auto& [id, c] : catalog::corpus()) {
    CAPTURE(id);
    const auto p = tmp.write(id + ".json", io::dump(io::to_json(*c)));
    io::Loader loader;
    const auto back = loader.category(p);
    CHECK(structurally_equal(*back, *c));
    REQUIRE(back->morphism_count() == c->morphism_count());
    for (int m = 0; m < c->morphism_count(); ++m) {
      CHECK(back->name(m) == c->name(m));
      CHECK(back->src(m) == c->src(m));
      CHECK(back->dst(m) == c->dst(m));
    }
    REQUIRE(loader.inputs().size() == 1);
    CHECK(loader.inputs()[0].sha256.size() == 64);
  }
}

TEST_CASE("closure input") {
  TempDir tmp;
  const auto p = tmp.write("b.json", R"({"objects": ["0", "1", "2"],
    "morphisms": [{"id": "f", "src": "0", "dst": "1"}, {"id": "g", "src": "1", "dst": "2"}],
    "closure": true})");
  io::Loader loader;
  const auto c = loader.category(p);
  CHECK(c->hom(0, 2).size() == 1);
  CHECK(c->name(c->hom(0, 2)[0]) == "g.f");
}

TEST_CASE("functor files with relative and inline categories") {
  TempDir tmp;
  tmp.write("chain3.json", io::dump(io::to_json(*catalog::chain3())));
  tmp.write("two.json", io::dump(io::to_json(*catalog::two())));
  const auto g = tmp.write("g.json", R"({"source": "chain3.json", "target": "two.json",
    "obj_map": {"0": "0", "1": "1", "2": "1"}})");
  io::Loader loader;
  const auto f = loader.functor(g);
  CHECK(f.obj_map == std::vector<int>{0, 1, 1});
  CHECK(loader.inputs().size() == 3);

  io::ordered_json inline_doc;
  inline_doc["source"] = io::to_json(*catalog::two());
  inline_doc["target"] = io::to_json(*catalog::terminal());
  inline_doc["obj_map"] = {{"0", "*"}, {"1", "*"}};
  const auto h = io::Loader().functor(tmp.write("h.json", io::dump(inline_doc)));
  CHECK(h.obj_map == std::vector<int>{0, 0});

  const auto bad = tmp.write("bad.json", R"({"source": "two.json", "target": "two.json",
    "obj_map": {"0": "1", "1": "0"}})");
  CHECK(code_of([&] { io::Loader().functor(bad); }) == ErrorCode::NotFunctorial);
}

TEST_CASE("parse errors cite file, line and key") {
  TempDir tmp;
  const auto syntax = tmp.write("syntax.json", "{\n  \"objects\": [\"a\",\n  ]\n}");
  const auto m1 = message_of([&] { io::Loader().category(syntax); });
  CHECK(m1.find("syntax.json:3") != std::string::npos);

  const auto missing = tmp.write("missing.json", "{\n  \"objects\": [\"a\"],\n  \"morphisms\": [\n    {\"id\": \"f\", \"src\": \"a\"}\n  ]\n}");
  const auto m2 = message_of([&] { io::Loader().category(missing); });
  CHECK(m2.find("ParseError") == 0);
  CHECK(m2.find("key 'dst'") != std::string::npos);

  const auto typed = tmp.write("typed.json", "{\n\n  \"objects\": 3\n}");
  const auto m3 = message_of([&] { io::Loader().category(typed); });
  CHECK(m3.find("typed.json:3: key 'objects'") != std::string::npos);

  CHECK(code_of([&] { io::Loader().category((tmp.path / "nope.json").string()); }) == ErrorCode::ParseError);

  const auto assoc = tmp.write("law.json", R"({"objects": ["a"], "morphisms": [{"id": "e", "src": "a", "dst": "a"}],
    "compose": []})");
  CHECK(code_of([&] { io::Loader().category(assoc); }) == ErrorCode::MissingComposite);
}

TEST_CASE("enriched categories round-trip") {
  TempDir tmp;
  for (const auto& [id, g] : enriched_corpus()) {
    CAPTURE(id);
    const auto p = tmp.write(id + ".json", io::dump(io::to_json(*g)));
    const auto back = io::Loader().gcat(p);
    CHECK(io::to_json(*back) == io::to_json(*g));
  }
  const auto pz = tmp.write("pz2.json", io::dump(io::to_json(*pz2())));
  const auto id = tmp.write("id.json", R"({"source": "pz2.json", "target": "pz2.json",
    "obj_map": {"x": "x", "y": "y"}, "twocell_map": {"alpha": "alpha"}})");
  io::Loader loader;
  const auto f = loader.gfunctor(id);
  CHECK(f.obj_map == std::vector<int>{0, 1});
  CHECK(f.twocell_map == identity_gpd_functor(loader.gcat(pz)).twocell_map);
}

TEST_CASE("simplicial sets round-trip") {
  TempDir tmp;
  for (const auto& [id, c] : catalog::corpus()) {
    CAPTURE(id);
    const auto k = nerve(*c);
    CHECK(io::Loader().sset(tmp.write(id + ".json", io::dump(io::to_json(k)))) == k);
  }
  const auto b = tmp.write("b.json", R"({"simplices": {"0": ["0", "1", "2"], "1": ["a", "b", "c"]},
    "faces": {"1": {"a": ["1", "0"], "b": ["2", "1"], "c": ["2", "0"]}}})");
  CHECK(isomorphic(io::Loader().sset(b), boundary(2)));
  const auto d = tmp.write("d.json", R"({"simplices": {"0": ["v"], "1": ["l"], "2": ["s"]},
    "faces": {"1": {"l": ["v", "v"]}, "2": {"s": ["l", "l", {"degenerate_of": "v"}]}}})");
  const auto k = io::Loader().sset(d);
  CHECK(k.faces(2, 0)[2].degenerate());
}

TEST_CASE("set functors") {
  TempDir tmp;
  const auto two = catalog::two();
  const auto p = tmp.write("f.json", R"({"on_objects": {"0": ["*"], "1": ["a", "b"]},
    "on_morphisms": {"0->1": {"a": "*", "b": "*"}}})");
  const auto f = io::Loader().set_functor(p, two);
  CHECK(f.size(1) == 2);
  CHECK_FALSE(check_B2(f).holds);
  const auto again = io::Loader().set_functor(tmp.write("g.json", io::dump(io::to_json(f))), two);
  CHECK(again.maps == f.maps);
  const auto bad = tmp.write("bad.json", R"({"on_objects": {"0": ["*"], "1": ["a"]},
    "on_morphisms": {"0->1": {"a": "q"}}})");
  CHECK(code_of([&] { io::Loader().set_functor(bad, two); }) == ErrorCode::ParseError);
}

TEST_CASE("certificates") {
  io::ordered_json body;
  body["verdict"] = true;
  body["witness"] = nullptr;
  const auto c = io::certificate("initial", body, {{"a.json", io::sha256_hex("x")}});
  CHECK(c.begin().key() == "verdict");
  CHECK(c["provenance"]["operation"] == "initial");
  CHECK(c["provenance"]["inputs"][0]["sha256"] == io::sha256_hex("x"));
  CHECK(io::dump(c) == io::dump(io::certificate("initial", body, {{"a.json", io::sha256_hex("x")}})));
}
