#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "adjunct/brown.hpp"
#include "adjunct/category.hpp"
#include "adjunct/simplicial.hpp"
#include "adjunct/trunc2.hpp"

namespace adjunct::io {

using ordered_json = nlohmann::ordered_json;

inline constexpr std::string_view kEngineVersion = "adjunct 0.1.0";

std::string sha256_hex(std::string_view bytes);

struct Input {
  std::string path;
  std::string sha256;
};

/// Reads the JSON file formats. Every file read (including categories
/// referenced from functor files) is hashed and recorded. Syntax errors and
/// missing or ill-typed keys raise ParseError citing the file, an
/// approximate line and the key; law failures keep their own error codes.
class Loader {
 public:
  explicit Loader(ValidateOptions options = {}) : options_(options) {}

  /// {"objects", "morphisms": [{"id", "src", "dst"}], "identities",
  ///  "compose": [[g, f, g∘f]], optional "closure"}
  CategoryRef category(const std::string& path);
  /// {"source", "target", "obj_map", "mor_map"}; source and target are
  /// paths relative to the file or inline category objects.
  FinFunctor functor(const std::string& path);
  /// {"objects", "identities": {obj: cell},
  ///  "homs": {"x|y": {"cells", "twocells", "identities", "compose2"}},
  ///  "hcompose": {"cells": [[g, f, g∘f]], "twocells": [[b, a, b*a]]}}
  /// Cell and 2-cell names are unique across all homs.
  GpdRef gcat(const std::string& path);
  /// {"source", "target", "obj_map", "cell_map", "twocell_map"}
  GpdFunctor gfunctor(const std::string& path);
  /// {"simplices": {"0": [...], ...}, "faces": {"1": {name: [face, ...]}, ...}}
  /// A face is a name one dimension down or {"degenerate_of": name, "map"}.
  TruncSSet sset(const std::string& path);
  /// {"on_objects": {obj: [elt]}, "on_morphisms": {mor: {elt: elt}}} over
  /// `base`; contravariant, identities may be omitted.
  SetFunctor set_functor(const std::string& path, const CategoryRef& base);

  const std::vector<Input>& inputs() const { return inputs_; }

  struct Document;  // opaque

 private:
  const Document& load(const std::string& path);

  ValidateOptions options_;
  std::vector<Input> inputs_;
  std::map<std::string, std::shared_ptr<Document>> documents_;
  std::map<std::string, CategoryRef> categories_;
  std::map<std::string, GpdRef> gcats_;
};

ordered_json to_json(const FinCategory& c);
ordered_json to_json(const FinFunctor& f);  // maps only, by name
ordered_json to_json(const GpdCategory& c);
ordered_json to_json(const TruncSSet& k);
ordered_json to_json(const SetFunctor& f);

/// `body` followed by {"provenance": {"operation", "inputs", "engine_version"}}.
ordered_json certificate(std::string_view operation, ordered_json body, const std::vector<Input>& inputs);

/// Two-space indentation and a trailing newline.
std::string dump(const ordered_json& j);

}  // namespace adjunct::io
