#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "adjunct/category.hpp"

namespace adjunct {

/// A simplex in Eilenberg-Zilber form: a nondegenerate simplex `index` of
/// dimension `dim`, pulled back along the monotone surjection `map` from
/// [n] onto [dim]. Nondegenerate simplices carry the identity map.
struct Simplex {
  int dim = 0;
  int index = 0;
  std::vector<int> map;

  int degree() const { return static_cast<int>(map.size()) - 1; }
  bool degenerate() const { return degree() != dim; }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

Simplex nondegenerate(int dim, int index);

/// Simplicial set truncated at dimension 3. Only nondegenerate simplices are
/// stored; their faces are given in Eilenberg-Zilber form.
class TruncSSet {
 public:
  static constexpr int kTop = 3;

  TruncSSet() = default;

  /// faces[n][s] lists d_0 .. d_n of the s-th nondegenerate n-simplex
  /// (faces[0] is ignored). Throws MalformedInput on ill-typed faces and
  /// LawViolation when a simplicial identity fails.
  static TruncSSet build(std::array<std::vector<std::string>, 4> names,
                         std::array<std::vector<std::vector<Simplex>>, 4> faces);

  int count(int n) const { return static_cast<int>(names_[static_cast<std::size_t>(n)].size()); }
  int top_dimension() const;  // -1 when empty
  const std::string& name(int n, int s) const { return names_[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)]; }
  const std::vector<Simplex>& faces(int n, int s) const {
    return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)];
  }
  int find(int n, const std::string& name) const;  // -1 when absent

  /// d_i of an arbitrary simplex, returned in Eilenberg-Zilber form.
  Simplex face(const Simplex& s, int i) const;
  std::vector<int> vertices(const Simplex& s) const;
  /// Every n-simplex, degenerate ones included, in canonical order.
  std::vector<Simplex> all_simplices(int n) const;

  friend bool operator==(const TruncSSet&, const TruncSSet&) = default;

 private:
  std::array<std::vector<std::string>, 4> names_;
  std::array<std::vector<std::vector<Simplex>>, 4> faces_;
};

/// Chains of nonidentity morphisms of length <= 3, named "f1|f2|..." in
/// order of application; vertices carry the object names.
TruncSSet nerve(const FinCategory& c);

/// Δ^n and its boundary, as nerves of chain(n + 1) (n <= 3).
TruncSSet standard_simplex(int n);
TruncSSet boundary(int n);
/// Drops everything above dimension k.
TruncSSet skeleton(const TruncSSet& k, int dim);
/// Reverses vertex order (d_i becomes d_{n-i}).
TruncSSet opposite(const TruncSSet& k);

struct Join {
  TruncSSet sset;
  bool truncation_loss = false;  // cones over 3-simplices were dropped
};

/// Δ^0 ⋆ K with apex vertex "apex" first; cone simplices are named
/// "apex*<name>".
Join join_point(const TruncSSet& k);

/// Fundamental category: free on the edges modulo d1σ = d0σ∘d2σ for every
/// 2-simplex. Identities are named "id_<vertex>", composites "g.f". Throws
/// ClosureBoundExceeded.
FinCategory tau1(const TruncSSet& k, std::size_t closure_cap = 10000);

/// Over-slice K_{/x} (simplices whose last vertex is x) truncated at 2; the
/// under-slice uses first vertices instead.
TruncSSet vertex_slice(const TruncSSet& k, int x, bool under = false);

struct HornReport {
  bool unique = true;
  std::string detail;  // first horn with zero or several fillers
};

/// Λ²₁, Λ³₁ and Λ³₂ each have exactly one filler.
HornReport inner_horn_check(const TruncSSet& k);

/// Every ∂Δ^n -> K with vertex 0 at x extends to Δ^n, for 1 <= n <= nmax.
/// Throws NotANerve when the inner-horn check fails.
bool initial_by_lifting(const TruncSSet& k, int x, int nmax = 3);

/// Isomorphism of truncated simplicial sets, by exhaustive vertex search.
bool isomorphic(const TruncSSet& a, const TruncSSet& b);

}  // namespace adjunct
