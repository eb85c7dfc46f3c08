#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "adjunct/error.hpp"

namespace adjunct {

struct Morphism {
  std::string id;
  int src = 0;
  int dst = 0;
};

/// A finite category stored as object list, morphism records and a total
/// composition table. Objects and morphisms are addressed by their position
/// in declaration order; names are kept for I/O and diagnostics.
///
/// Instances are immutable once built. The only way to obtain one is through
/// `FinCategory::build` (or the validators built on it), which checks typing
/// and all category laws exhaustively.
class FinCategory {
 public:
  FinCategory() = default;

  /// `compose(g, f)` is queried for every pair with dst(f) == src(g) and must
  /// return the index of g∘f.
  static FinCategory build(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                           std::vector<int> identities,
                           const std::function<int(int, int)>& compose);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }

  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& object(int x) const { return objects_.at(static_cast<std::size_t>(x)); }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  const Morphism& morphism(int m) const { return morphisms_.at(static_cast<std::size_t>(m)); }
  const std::string& name(int m) const { return morphism(m).id; }
  int src(int m) const { return morphisms_[static_cast<std::size_t>(m)].src; }
  int dst(int m) const { return morphisms_[static_cast<std::size_t>(m)].dst; }
  int identity(int x) const { return identities_[static_cast<std::size_t>(x)]; }
  bool is_identity(int m) const { return identities_[static_cast<std::size_t>(src(m))] == m; }

  /// g∘f; throws MalformedInput when dst(f) != src(g).
  int compose(int g, int f) const;

  std::span<const int> hom(int x, int y) const {
    return homs_[static_cast<std::size_t>(x * object_count() + y)];
  }
  std::span<const int> out(int x) const { return out_[static_cast<std::size_t>(x)]; }
  std::span<const int> in(int y) const { return in_[static_cast<std::size_t>(y)]; }

  std::optional<int> find_object(std::string_view name) const;
  std::optional<int> find_morphism(std::string_view name) const;
  int object_index(std::string_view name) const;  // throws UnknownObject

  std::optional<int> inverse(int m) const;
  bool is_iso(int m) const { return inverse(m).has_value(); }

  /// True when every hom-set has at most one element.
  bool is_thin() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  std::vector<std::vector<int>> homs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<int> out_pos_;                // position of g within out_[src g]
  std::vector<std::vector<int>> composite_; // composite_[f][out_pos_[g]] = g∘f
  std::unordered_map<std::string, int> object_lookup_;
  std::unordered_map<std::string, int> morphism_lookup_;
};

using CategoryRef = std::shared_ptr<const FinCategory>;

inline CategoryRef share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

struct FinFunctor {
  CategoryRef source;
  CategoryRef target;
  std::vector<int> obj_map;
  std::vector<int> mor_map;

  int obj(int x) const { return obj_map[static_cast<std::size_t>(x)]; }
  int mor(int m) const { return mor_map[static_cast<std::size_t>(m)]; }
};

/// Returns a description of the first violated functor law, or nothing.
std::optional<std::string> functor_violation(const FinCategory& source, const FinCategory& target,
                                             std::span<const int> obj_map,
                                             std::span<const int> mor_map);

/// Checked construction; throws NotFunctorial.
FinFunctor make_functor(CategoryRef source, CategoryRef target, std::vector<int> obj_map,
                        std::vector<int> mor_map);

FinFunctor identity_functor(CategoryRef c);
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);  // g∘f

// ---------------------------------------------------------------------------
// Raw descriptions and validation
// ---------------------------------------------------------------------------

struct RawMorphism {
  std::string id;
  std::string src;
  std::string dst;
};

struct RawCategory {
  std::vector<std::string> objects;
  std::vector<RawMorphism> morphisms;
  std::map<std::string, std::string> identities;
  std::vector<std::array<std::string, 3>> compose;  // (g, f, g∘f)
  /// When set, the declared morphisms are generators and `compose` entries
  /// are relations; the table is completed by closure.
  bool closure = false;
};

struct ValidateOptions {
  std::size_t closure_cap = 10000;
};

FinCategory validate_category(const RawCategory& raw, const ValidateOptions& options = {});

struct RawFunctor {
  std::map<std::string, std::string> obj_map;
  std::map<std::string, std::string> mor_map;
};

/// `mor_map` may cover only generators; the remaining morphisms are derived
/// from identities, one-element target homs and composites before the laws
/// are checked.
FinFunctor validate_functor(const RawFunctor& raw, CategoryRef source, CategoryRef target);

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

FinCategory opposite(const FinCategory& c);
FinFunctor opposite(const FinFunctor& f);  // F^op : C^op -> D^op

/// Morphisms x -> y by name lookup; throws UnknownObject.
std::vector<int> hom_set(const FinCategory& c, std::string_view x, std::string_view y);

struct FunctorProfile {
  bool surjective_on_objects = false;
  bool full = false;
  bool faithful = false;
  bool conservative = false;
  bool equalizing_pairs = false;
};

FunctorProfile functor_profile(const FinFunctor& f);

/// Enumerates every functor source -> target. The callback receives the
/// object and morphism maps and returns false to stop early.
using FunctorVisitor = std::function<bool(const std::vector<int>&, const std::vector<int>&)>;
void enumerate_functors(const FinCategory& source, const FinCategory& target,
                        const FunctorVisitor& visit);

/// An isomorphism of categories, found by exhaustive search.
std::optional<FinFunctor> find_isomorphism(CategoryRef a, CategoryRef b);

/// Same object names in the same order, same non-identity morphism names with
/// the same endpoints, and the same composition. Identity names may differ.
bool structurally_equal(const FinCategory& a, const FinCategory& b);

/// Renames and reorders objects and morphisms through the given permutations
/// (`object_order[i]` is the old index placed at position i) and returns the
/// new category together with the isomorphism old -> new.
std::pair<CategoryRef, FinFunctor> relabel(CategoryRef c, const std::vector<int>& object_order,
                                           const std::vector<int>& morphism_order,
                                           const std::string& prefix);

}  // namespace adjunct
