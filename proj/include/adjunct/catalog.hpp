#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "adjunct/category.hpp"

/// Stock categories and small constructors used by tests, fixtures and the
/// corpus sweeps. Thin categories name identities "id_x" and the unique
/// morphism x -> y "x->y".
namespace adjunct::catalog {

CategoryRef empty();
CategoryRef terminal();  // single object "*"
CategoryRef discrete(const std::vector<std::string>& names);
CategoryRef disc2();     // objects x, y

/// Thin category on `names` generated by the relation (reflexive-transitive
/// closure is taken, so any relation gives a preorder).
CategoryRef preorder(const std::vector<std::string>& names, const std::function<bool(int, int)>& rel);

CategoryRef chain(int n);  // 0 <= 1 <= ... <= n-1
CategoryRef two();         // chain(2)
CategoryRef chain3();      // chain(3)
CategoryRef diamond();     // bot <= a, b <= top
CategoryRef cospan();      // x -> t <- y
CategoryRef span();        // l <- o -> r

/// s => t with two parallel arrows a, b.
CategoryRef parallel_pair();
/// Free category on 0 -> 1 -> 2 and 0 -> 2, so hom(0, 2) has two elements.
CategoryRef free_boundary2();
/// One object whose endomorphisms form the cyclic group of order n.
CategoryRef cyclic_group(int n);
/// One object with endomorphisms {1, e}, e∘e = e.
CategoryRef idempotent_monoid();
/// Two objects and a pair of mutually inverse arrows.
CategoryRef walking_iso();
/// a -> b with an idempotent endomorphism e on a and f∘e = f.
CategoryRef arrow_with_idempotent();
/// s => t -> q with q∘a = q∘b, so the pair has a coequalizer.
CategoryRef coequalized_pair();

CategoryRef product(const FinCategory& a, const FinCategory& b);

/// All partial orders on n elements up to isomorphism, each naturally
/// labelled with elements "0".."n-1" and canonically ordered.
std::vector<CategoryRef> posets_up_to_iso(int n);

struct NamedCategory {
  std::string id;
  CategoryRef category;
};

/// Every poset with at most four elements (up to isomorphism) followed by the
/// curated non-poset categories. Order and ids are stable.
std::vector<NamedCategory> corpus();
std::vector<NamedCategory> curated();

/// Functor between thin categories determined by its object map; throws
/// NotFunctorial when the map is not monotone.
FinFunctor thin_functor(CategoryRef source, CategoryRef target, std::vector<int> obj_map);

/// Functor given by object and (non-identity) morphism names.
FinFunctor named_functor(CategoryRef source, CategoryRef target,
                         const std::vector<std::pair<std::string, std::string>>& objects,
                         const std::vector<std::pair<std::string, std::string>>& morphisms = {});

/// Full subcategory inclusion on the listed objects.
FinFunctor full_inclusion(CategoryRef c, const std::vector<int>& objects);

}  // namespace adjunct::catalog
