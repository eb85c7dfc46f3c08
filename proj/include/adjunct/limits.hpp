#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adjunct/category.hpp"

namespace adjunct {

/// A cone over a diagram J -> C: legs[j] is a morphism apex -> D(j). The same
/// record describes cocones, with legs D(j) -> apex.
struct Cone {
  int apex = 0;
  std::vector<int> legs;

  friend bool operator==(const Cone&, const Cone&) = default;
};

std::vector<int> initial_objects(const FinCategory& c);
std::vector<int> terminal_objects(const FinCategory& c);

/// Every cone over the diagram, by exhaustive enumeration (apex order, then
/// leg order).
std::vector<Cone> cones(const FinFunctor& diagram);
bool is_limit_cone(const FinFunctor& diagram, const Cone& cone);
/// Limit cones: the terminal objects of the category of cones, all of them.
std::vector<Cone> limit(const FinFunctor& diagram);

std::vector<Cone> cocones(const FinFunctor& diagram);
bool is_colimit_cocone(const FinFunctor& diagram, const Cone& cocone);
/// Cocone through which every other cocone factors, not necessarily uniquely.
bool is_weak_colimit_cocone(const FinFunctor& diagram, const Cone& cocone);
std::vector<Cone> colimit(const FinFunctor& diagram);

FinFunctor identity_diagram(CategoryRef c);
std::optional<Cone> limit_of_identity(CategoryRef c);
std::vector<Cone> identity_limits(CategoryRef c);

namespace shapes {
CategoryRef pair();      // objects 0, 1
CategoryRef parallel();  // s => t via a, b
CategoryRef cospan();    // x -> t <- y
CategoryRef span();      // l <- o -> r
}  // namespace shapes

/// `arrows` lists the images of the shape's non-identity morphisms in order.
FinFunctor diagram(CategoryRef shape, CategoryRef target, std::vector<int> objects, std::vector<int> arrows);
FinFunctor empty_diagram(CategoryRef c);
FinFunctor pair_diagram(CategoryRef c, int x, int y);
FinFunctor parallel_diagram(CategoryRef c, int f, int g);
FinFunctor cospan_diagram(CategoryRef c, int f, int g);  // f: x -> t, g: y -> t
FinFunctor span_diagram(CategoryRef c, int f, int g);    // f: o -> l, g: o -> r

struct LimitGap {
  std::string kind;    // "terminal", "product", "equalizer"
  std::string detail;  // the offending objects or pair
};

struct FiniteLimitsReport {
  bool has_finite_limits = false;
  std::optional<LimitGap> first_missing;
  std::optional<LimitGap> missing_terminal;
  std::optional<LimitGap> missing_product;
  std::optional<LimitGap> missing_equalizer;
};

/// Terminal object, binary products and equalizers, each checked over all
/// instances in the category.
FiniteLimitsReport has_finite_limits(CategoryRef c);

struct ColimitSupport {
  bool initial = false;
  bool binary_coproducts = false;
  bool pushouts = false;
};
ColimitSupport colimit_support(CategoryRef c);

enum class LimitKind { Terminal, Products, Equalizers, Pullbacks, AllFinite };

struct PreservationReport {
  bool preserves = true;
  std::optional<std::string> counterexample;
};

/// Whether the images of the source's limit cones of the given kind are
/// limit cones. Throws LimitAbsentInSource when the source lacks one.
PreservationReport preserves_limits(const FinFunctor& g, LimitKind kind);

bool is_weakly_initial(const FinCategory& c, std::span<const int> members);
/// All inclusion-minimal weakly initial sets, sorted lexicographically.
std::vector<std::vector<int>> weakly_initial_sets(const FinCategory& c);

/// Cocones over the span y <-f- x -g-> z through which every cocone factors.
/// Legs are indexed by the span shape's objects (o, l, r).
std::vector<Cone> weak_pushouts(CategoryRef c, int f, int g);
std::vector<Cone> pushouts(CategoryRef c, int f, int g);

}  // namespace adjunct
