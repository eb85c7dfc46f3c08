#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adjunct/category.hpp"

namespace adjunct {

/// Contravariant functor C^op -> Set with finite values. For f: x -> y,
/// `maps[f]` sends elements of F(y) to elements of F(x).
struct SetFunctor {
  CategoryRef base;
  std::vector<std::vector<std::string>> sets;  // per object
  std::vector<std::vector<int>> maps;          // per morphism

  int size(int x) const { return static_cast<int>(sets[static_cast<std::size_t>(x)].size()); }
  int apply(int f, int e) const { return maps[static_cast<std::size_t>(f)][static_cast<std::size_t>(e)]; }
};

/// Checked construction; throws NotFunctorial.
SetFunctor make_set_functor(CategoryRef base, std::vector<std::vector<std::string>> sets,
                            std::vector<std::vector<int>> maps);

/// hom(-, a), elements named after morphisms.
SetFunctor representable(const CategoryRef& c, int a);

/// c ↦ hom_D(F c, d) for F: C -> D.
SetFunctor hom_into(const FinFunctor& f, int d);

struct BrownWitness {
  std::string kind;           // "empty coproduct", "binary coproduct", "pushout"
  std::vector<int> objects;   // coproduct summands, or the square x, y, z, w
  std::vector<int> morphisms; // the span f, g and the legs, for squares
};

struct BrownReport {
  bool holds = true;
  std::optional<BrownWitness> witness;
};

/// F(∐ x_i) -> ∏ F(x_i) is bijective for the empty coproduct and for every
/// binary coproduct cocone. Throws CoproductAbsent.
BrownReport check_B1(const SetFunctor& f);

/// F(w) -> F(y) ×_{F(x)} F(z) is surjective for every pushout square over
/// every span y <- x -> z. Throws PushoutAbsent.
BrownReport check_B2(const SetFunctor& f);

struct Representation {
  bool representable = false;
  int object = -1;
  int element = -1;                           // universal element of F(object)
  std::vector<std::vector<int>> components;   // per y: hom(y, object) position -> F(y)
  std::vector<std::string> obstructions;      // per object, when not representable by it
};

/// Searches objects x in order and, for each, the candidate transformations
/// hom(-, x) => F given by elements of F(x).
Representation representability_search(const SetFunctor& f);

/// Minimal object sets that jointly detect isomorphisms through covariant
/// hom-functors, sorted.
std::vector<std::vector<int>> weak_generators(const FinCategory& c);

struct PreservationWitness {
  std::string kind;  // "empty coproduct", "binary coproduct", "pushout"
  std::vector<int> objects;
  std::vector<int> morphisms;
};

struct BrownPrimeReport {
  bool holds = true;
  bool b1 = true;
  bool b2 = true;
  std::optional<PreservationWitness> witness;
};

/// F sends coproduct cocones to coproduct cocones and pushout squares to
/// weak pushouts. Throws ColimitAbsent when the source lacks one.
BrownPrimeReport check_B1p_B2p(const FinFunctor& f);

struct ExperimentalBrown {
  bool holds = true;  // every B1+B2 functor enumerated is representable
  std::size_t enumerated = 0;
  std::size_t satisfying = 0;
  std::optional<SetFunctor> counterexample;
};

/// Exhaustive over set functors with |F(x)| <= max_size. Experimental:
/// nothing downstream relies on it.
ExperimentalBrown brown_property_experimental(const CategoryRef& c, int max_size = 2);

}  // namespace adjunct
