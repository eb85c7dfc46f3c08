#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjunct/category.hpp"

namespace adjunct {

/// Comma category G_{c/} (or F_{/d}). Objects are pairs (d, u) and are named
/// "(d,u)"; a morphism φ out of (d, u) is named "φ@(d,u)" (for the over
/// comma the pair named is the target).
struct Comma {
  CategoryRef category;
  FinFunctor projection;                  // forgets u
  int anchor = 0;
  std::vector<std::pair<int, int>> entries;  // comma object -> (d, u)
  std::vector<int> base;                  // comma morphism -> underlying morphism
};

/// G: D -> C, c in C. Objects (d, u: c -> G d); morphisms φ: d -> d' with
/// G(φ)∘u = u'.
Comma comma_under(const FinFunctor& g, int c);
/// F: C -> D, d in D. Objects (a, v: F a -> d); morphisms α: a -> a' with
/// v'∘F(α) = v.
Comma comma_over(const FinFunctor& f, int d);

struct SolutionSet {
  int anchor = 0;
  std::vector<std::vector<int>> minimal_sets;  // comma object indices
};

struct SolutionSetReport {
  bool satisfied = true;  // always, for finite instances
  std::vector<SolutionSet> per_object;
};

SolutionSetReport solution_set_condition(const FinFunctor& g);

struct HomBijection {
  int c = 0;
  int d = 0;
  std::vector<std::pair<int, int>> pairs;  // g: F c -> d  ↦  G(g)∘u_c
};

struct AdjunctionCertificate {
  FinFunctor left;   // F: C -> D
  FinFunctor right;  // G: D -> C
  std::vector<int> unit;  // u_c: c -> G F c
  std::vector<HomBijection> bijections;
  // The finite decision uses comma initiality only; continuity and size
  // hypotheses of the general theorem are never consulted.
  bool hypotheses_consulted = false;
};

struct Verification {
  bool ok = true;
  std::optional<std::string> violated;
};

/// Unit naturality, hom bijections and agreement with recorded bijections.
Verification verify_adjunction(const AdjunctionCertificate& cert);

/// Builds F from initial comma objects (d_c, u_c), one per object of C.
/// Throws WitnessNotInitial.
AdjunctionCertificate construct_left_adjoint(const FinFunctor& g, const std::vector<std::pair<int, int>>& witnesses);

struct GaftResult {
  bool exists = false;
  std::optional<AdjunctionCertificate> certificate;
  std::optional<int> witness_failure;          // c whose comma has no initial object
  std::vector<std::pair<int, int>> witnesses;  // chosen (d_c, u_c)
};

/// Left adjoint exists iff every G_{c/} has an initial object; the
/// canonically least one is chosen at each c.
GaftResult gaft_decide(const FinFunctor& g);

/// Right adjoint of F decided directly: every F_{/d} has a terminal object.
struct RightAdjointResult {
  bool exists = false;
  std::optional<int> witness_failure;
  std::vector<std::pair<int, int>> witnesses;  // chosen (c_d, ε_d)
};
RightAdjointResult decide_right_adjoint(const FinFunctor& f);

struct OracleBounds {
  int max_objects = 4;     // objects of C
  int max_morphisms = 16;  // morphisms of D
};

struct BruteForceResult {
  bool exists = false;
  std::vector<std::pair<FinFunctor, std::vector<int>>> adjoints;  // (F, unit)
};

/// Every functor F: C -> D and every unit candidate, checked exhaustively.
/// Throws OracleBoundExceeded.
BruteForceResult brute_force_left_adjoint(const FinFunctor& g, const OracleBounds& bounds = {});

struct CoinitialityRecord {
  bool nonempty = false;
  bool connected = false;
  bool has_initial = false;
};

/// Per object d of B, the shape of F_{/d}.
std::vector<CoinitialityRecord> coinitiality_profile(const FinFunctor& f);

/// Undirected connectivity of the object graph; the empty category is not
/// connected.
bool is_connected(const FinCategory& c);

}  // namespace adjunct
