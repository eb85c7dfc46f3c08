#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjunct/adjoint.hpp"
#include "adjunct/category.hpp"

namespace adjunct {

/// Strict groupoid-enriched category. hom(x, y) is a finite groupoid stored
/// as a FinCategory whose objects are the 1-cells and whose morphisms are the
/// 2-cells. Horizontal composition is tabulated per triple (x, y, z) for
/// both 1-cells and 2-cells.
class GpdCategory {
 public:
  /// (x, y, z, g, f) -> g∘f with g in hom(y, z), f in hom(x, y); the same
  /// signature serves for 2-cells.
  using Horizontal = std::function<int(int, int, int, int, int)>;

  GpdCategory() = default;

  /// Checks every enriched law exhaustively; throws LawViolation naming the
  /// first one that fails.
  static GpdCategory build(std::vector<std::string> objects, std::vector<CategoryRef> homs,
                           std::vector<int> identity_cells, const Horizontal& cells, const Horizontal& twocells);

  int object_count() const { return static_cast<int>(objects_.size()); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& object(int x) const { return objects_.at(static_cast<std::size_t>(x)); }
  std::optional<int> find_object(const std::string& name) const;
  int object_index(const std::string& name) const;  // throws UnknownObject

  const FinCategory& hom(int x, int y) const { return *homs_[index(x, y)]; }
  const CategoryRef& hom_ref(int x, int y) const { return homs_[index(x, y)]; }
  int identity_cell(int x) const { return identity_cells_[static_cast<std::size_t>(x)]; }

  int compose_cells(int x, int y, int z, int g, int f) const;
  int compose_twocells(int x, int y, int z, int beta, int alpha) const;

  /// True when every hom groupoid has identity 2-cells only.
  bool discrete_homs() const;

 private:
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(x * object_count() + y); }
  std::size_t triple(int x, int y, int z) const {
    return static_cast<std::size_t>((x * object_count() + y) * object_count() + z);
  }

  std::vector<std::string> objects_;
  std::vector<CategoryRef> homs_;
  std::vector<int> identity_cells_;
  std::vector<std::vector<int>> cell_table_;     // per triple, g * |hom(x,y)| + f
  std::vector<std::vector<int>> twocell_table_;  // per triple, b * |2cells(x,y)| + a
};

using GpdRef = std::shared_ptr<const GpdCategory>;

inline GpdRef share(GpdCategory c) { return std::make_shared<const GpdCategory>(std::move(c)); }

/// Strict enriched functor. Maps are indexed by hom position x * n + y of the
/// source.
struct GpdFunctor {
  GpdRef source;
  GpdRef target;
  std::vector<int> obj_map;
  std::vector<std::vector<int>> cell_map;
  std::vector<std::vector<int>> twocell_map;

  int obj(int x) const { return obj_map[static_cast<std::size_t>(x)]; }
  int cell(int x, int y, int f) const;
  int twocell(int x, int y, int a) const;
};

/// Checked construction; throws NotFunctorial.
GpdFunctor make_gpd_functor(GpdRef source, GpdRef target, std::vector<int> obj_map,
                            std::vector<std::vector<int>> cell_map, std::vector<std::vector<int>> twocell_map);
GpdFunctor identity_gpd_functor(GpdRef c);
GpdFunctor compose(const GpdFunctor& g, const GpdFunctor& f);  // g∘f

/// Every strict functor source -> target, in canonical order. Stops after
/// `limit` results when limit > 0.
std::vector<GpdFunctor> enumerate_gpd_functors(const GpdRef& source, const GpdRef& target, std::size_t limit = 0);

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// Discrete-hom enrichment: 1-cells are the morphisms of C, the only 2-cells
/// are identities, named "1_<m>".
GpdRef embed(const CategoryRef& c);
GpdFunctor embed(const FinFunctor& f, const GpdRef& source, const GpdRef& target);

enum class LabelKind { None, Uniform, OffDiagonal };

struct Decoration {
  /// Pairs of parallel morphisms to identify; the generated congruence
  /// supplies one 2-cell family between any two equivalent morphisms.
  std::vector<std::pair<int, int>> merges;
  LabelKind labels = LabelKind::None;
  int order = 1;  // Z/order labels on 2-cells
};

/// 1-cells are the morphisms of `base`; 2-cells f => g exist for f ~ g and
/// carry a label in Z/order (all homs for Uniform; homs between distinct
/// objects only for OffDiagonal, which requires no two distinct objects to
/// map to each other in both directions).
GpdRef decorated(const CategoryRef& base, const Decoration& d);

/// Objects x, y; hom(x, y) has one 1-cell f whose automorphism group is Z/2
/// {1_f, alpha}; hom(y, x) is empty.
GpdRef pz2();

// ---------------------------------------------------------------------------
// Homotopy category and mapping data
// ---------------------------------------------------------------------------

struct Homotopy {
  CategoryRef category;
  std::vector<std::vector<int>> class_of;  // hom position -> 1-cell -> morphism of h
  std::vector<int> representative;         // morphism of h -> least 1-cell in its class
};

/// Objects unchanged, hom(x, y) = components of the hom groupoid, each named
/// after its least 1-cell.
Homotopy homotopy_category(const GpdCategory& c);
FinFunctor homotopy_functor(const GpdFunctor& g, const Homotopy& hs, const Homotopy& ht);

struct MappingInvariants {
  int components = 0;
  std::vector<int> automorphism_orders;  // per component, in order of least 1-cell

  bool contractible() const { return components == 1 && automorphism_orders[0] == 1; }
  bool connected() const { return components == 1; }
};

MappingInvariants mapping_invariants(const GpdCategory& c, int x, int y);

struct ObjectClass {
  bool initial = false;
  bool h_initial = false;
  bool weakly_initial_singleton = false;
};

ObjectClass classify_object(const GpdCategory& c, int x);

// ---------------------------------------------------------------------------
// Enriched commas and decisions
// ---------------------------------------------------------------------------

struct GpdComma {
  GpdRef category;
  int anchor = 0;
  std::vector<std::pair<int, int>> entries;  // object -> (d, u ∈ hom(c, G d))
  std::vector<std::vector<int>> cell_base;   // hom position -> 1-cell -> φ
};

/// Objects (d, u: c -> G d); 1-cells (φ, α: G(φ)∘u => u'); 2-cells θ: φ => φ'
/// with α'∘(G θ * 1_u) = α.
GpdComma enriched_comma_under(const GpdFunctor& g, int c);

struct HInitialReport {
  bool holds = true;
  std::vector<std::optional<int>> witness;  // per c, an h-initial comma object
};

HInitialReport h_initial_condition(const GpdFunctor& g);

struct GaftFinRow {
  int anchor = 0;
  std::optional<int> initial;    // least comma object classified initial
  std::optional<int> h_initial;  // least comma object classified h-initial
  bool differs = false;
};

struct GaftFinResult {
  bool exists = false;               // every comma has an initial object
  bool h_initial_condition = false;  // every comma has an h-initial object
  bool divergent = false;
  std::vector<GaftFinRow> table;
};

GaftFinResult gaft_fin_decide(const GpdFunctor& g);

struct Comparison {
  Homotopy source;   // of the enriched comma
  Comma target;      // (hG)_{c/}
  GpdComma enriched;
  FinFunctor functor;
  FunctorProfile profile;
};

/// h(G_{c/}) -> (hG)_{c/}, (d, u) ↦ (d, [u]). Throws InvariantViolation if
/// the functor fails to be surjective on objects, full or conservative.
Comparison comparison_functor(const GpdFunctor& g, int c);

struct Reflection {
  bool applies = false;
  bool reflects = false;
  std::optional<int> witness;  // source object where reflection fails
  FunctorProfile profile;
};

/// When F is surjective on objects, full, conservative and every parallel
/// pair is equalized, checks that x is initial iff F x is initial.
Reflection initial_reflection_check(const FinFunctor& f);

enum class Consistency { Consistent, Inconsistent, NotApplicable };
std::string_view to_string(Consistency c);

struct AdjointComparison {
  bool h_adjoint = false;
  bool full_adjoint = false;
  Consistency consistent = Consistency::NotApplicable;
  std::optional<bool> preserves_finite_limits;  // the flag used, when any
  bool flag_derived = false;                    // computed for discrete homs
};

/// `flag` asserts that the source has finite limits preserved by G. Without
/// it, discrete-hom instances are flagged through the limits module and all
/// others are reported as not applicable.
AdjointComparison homotopy_adjoint_compare(const GpdFunctor& g, std::optional<bool> flag = std::nullopt);

struct SolutionTransfer {
  bool enriched_has = false;  // the enriched comma has a weakly initial set
  bool homotopy_has = false;  // (hG)_{c/} has one
  bool lifted = true;         // representatives of every minimal h-set are weakly initial upstairs
  bool pushed = true;         // images of every minimal enriched set are weakly initial downstairs
};

SolutionTransfer solution_set_transfer(const GpdFunctor& g, int c);

// ---------------------------------------------------------------------------
// Enriched corpus
// ---------------------------------------------------------------------------

struct NamedGpd {
  std::string id;
  GpdRef category;
};

/// Embedded small categories, pz2 and a handful of decorated instances.
std::vector<NamedGpd> enriched_corpus();

/// Strict functors between every ordered pair of corpus members, at most
/// `per_pair` each, in corpus order.
std::vector<std::pair<std::string, GpdFunctor>> enriched_functors(std::size_t per_pair = 8);

}  // namespace adjunct
