#ifndef IRK_ORBITS_HPP
#define IRK_ORBITS_HPP

#include <vector>

#include "irk/subsemigroup.hpp"

namespace irk {

bool is_atom(const InverseAlgebra& A, const Element& a);
bool is_primitive_idempotent(const InverseAlgebra& A, const Element& a);

/// The partial equivalence on primitive idempotents: p ~ q iff p s q != 0
/// for some s in S. Reflexive exactly on dom = {p : pS != {0}}.
struct TRelation {
  std::vector<Element> primitives;            // ambient primitive set, canonical order
  std::vector<int> class_index;               // per primitive; -1 outside dom
  std::vector<std::vector<Element>> classes;  // P_i, ordered by least member

  bool in_domain(std::size_t primitive_pos) const {
    return class_index[primitive_pos] >= 0;
  }
  bool related(std::size_t a, std::size_t b) const {
    return class_index[a] >= 0 && class_index[a] == class_index[b];
  }
};

/// Builds the relation over the full primitive set of S's algebra.
TRelation build_T(const Subsemigroup& S);

/// Builds the relation over an explicit primitive set (used for local
/// algebras e A e, whose primitives are the ambient ones below e).
TRelation build_T_over(const Subsemigroup& S, const std::vector<Element>& primitives);

/// The four equivalent conditions relating primitives p, q through s.
struct TfaeFlags {
  bool conjugate;         // q = s^-1 p s
  bool translate;         // ps = sq != 0
  bool three_way;         // psq = ps = sq != 0
  bool sandwich_nonzero;  // psq != 0

  bool all_agree() const {
    return conjugate == translate && translate == three_way &&
           three_way == sandwich_nonzero;
  }
};

/// Evaluates all four conditions. p and q must be primitive idempotents.
TfaeFlags check_tfae(const InverseAlgebra& A, const Element& p, const Element& q,
                     const Element& s);

struct ClassifierFlags {
  bool weakly_transitive = false;
  bool transitive = false;
  bool weakly_effective = false;
  bool effective = false;
  bool disperse = false;
  Element least_local_identity;  // least e with S <= eAe
};

/// One orbit factor: the class P_i, its local identity e_i = sup P_i, the
/// projection phi_i (tabulated against S.elements()) and the image S_i.
struct OrbitFactor {
  std::vector<Element> primitives;
  Element local_identity;
  std::vector<Element> phi;
  std::vector<Element> image;
};

struct OrbitDecomposition {
  Subsemigroup S;
  TRelation t;
  std::vector<OrbitFactor> factors;
  ClassifierFlags flags;
};

/// Classifier flags of S relative to its whole algebra.
ClassifierFlags classify(const Subsemigroup& S);

/// Classifier flags of S relative to the local algebra eAe. S must lie in
/// eAe; the primitive set becomes {p in P : p <= e} and weak effectiveness
/// compares against e.
ClassifierFlags classify_in_local(const Subsemigroup& S, const Element& e);

/// Full orbit decomposition. Lemma-level identities (the four expressions
/// for phi_i, and that each phi_i is a homomorphism) are asserted while
/// building; a failure is an InternalError and indicates an algebra bug.
OrbitDecomposition decompose(const Subsemigroup& S);

struct FactorFlags {
  bool weakly_transitive = false;
  bool transitive = false;
  bool weakly_effective = false;
  bool effective = false;
};

/// Flags of the factor S_i inside A_i, computed directly from the
/// definitions and cross-checked against the orbit-set characterisations
/// ((i) always weakly effective; (ii) effective iff P cap A_i is a union
/// of classes; (iii) weakly transitive iff no other class lies in A_i;
/// (iv) transitive iff P cap A_i = P_i). Disagreement is an InternalError.
FactorFlags factor_properties(const OrbitDecomposition& d, std::size_t i);

}  // namespace irk

#endif  // IRK_ORBITS_HPP
