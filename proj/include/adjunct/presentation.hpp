#pragma once

#include <cstddef>
#include <vector>

namespace adjunct {

/// A finitely presented category: objects 0..n-1, generating arrows, and
/// relations between paths. A path lists generator indices in order of
/// application, so {a, b} denotes b∘a; the empty path is an identity.
struct Presentation {
  struct Generator {
    int src = 0;
    int dst = 0;
  };
  struct Relation {
    int src = 0;
    std::vector<int> lhs;
    std::vector<int> rhs;
  };

  int object_count = 0;
  std::vector<Generator> generators;
  std::vector<Relation> relations;
};

/// The finite category presented, obtained by coset enumeration: one HLT
/// enumeration per source object, with coincidence processing. Elements are
/// numbered per source object in breadth-first order from the identity, so
/// element paths are shortlex minimal.
class PresentedCategory {
 public:
  struct Element {
    int src = 0;
    int dst = 0;
    std::vector<int> path;  // shortlex representative
  };

  /// Throws ClosureBoundExceeded when more than `cap` distinct morphisms
  /// survive (or the enumeration itself grows past a fixed multiple of it).
  static PresentedCategory close(const Presentation& p, std::size_t cap);

  const std::vector<Element>& elements() const { return elements_; }
  int identity(int x) const { return identity_[static_cast<std::size_t>(x)]; }
  int generator(int s) const { return generator_[static_cast<std::size_t>(s)]; }
  int compose(int g, int f) const;  // g∘f, requires dst f == src g

 private:
  struct Node {
    int at = 0;
    std::vector<int> next;  // indexed by position in the out-list of `at`
  };
  std::vector<Element> elements_;
  std::vector<int> identity_;
  std::vector<int> generator_;
  std::vector<std::vector<int>> gens_from_;   // object -> generator indices
  std::vector<int> gen_pos_;                  // generator -> position in gens_from_[src]
  std::vector<std::vector<Node>> tables_;     // per source object, compacted
  std::vector<std::vector<int>> node_element_;
  std::vector<int> element_node_;
};

}  // namespace adjunct
