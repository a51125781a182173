#ifndef IRK_SCHEIN_HPP
#define IRK_SCHEIN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "irk/orbits.hpp"
#include "irk/subsemigroup.hpp"

namespace irk {

/// An indexed family of elements together with a certified upper bound.
class BoundedTuple {
public:
  /// Validates every entry against the bound; throws InputError otherwise.
  static BoundedTuple certify(AlgebraPtr algebra, std::vector<Element> entries,
                              Element bound);

  const std::vector<Element>& entries() const { return entries_; }
  const Element& bound() const { return bound_; }
  const InverseAlgebra& algebra() const { return *algebra_; }

  /// Componentwise product; the bounds multiply.
  BoundedTuple times(const BoundedTuple& rhs) const;
  BoundedTuple inverted() const;

private:
  BoundedTuple(AlgebraPtr algebra, std::vector<Element> entries, Element bound)
      : algebra_(std::move(algebra)), entries_(std::move(entries)),
        bound_(std::move(bound)) {}

  AlgebraPtr algebra_;
  std::vector<Element> entries_;
  Element bound_;
};

/// The supremum map: sup of the entries against the certificate bound.
Element omega(const BoundedTuple& t);

/// Verdicts about a product-of-projections map, with the tuple table kept
/// so every verdict can be recomputed. Failure witnesses name the minimal
/// violating pair in canonical order.
struct ScheinCertificate {
  std::vector<std::vector<Element>> tuple_table;  // aligned with the element roster
  std::vector<Element> roster;                    // domain elements, canonical order
  bool bounded = true;
  bool injective = true;
  bool homomorphism = true;  // omega is a homomorphism on the image
  bool recovery = true;      // tuple of s sups back to s
  bool orthogonal = true;    // images of distinct factors multiply to zero
  std::optional<std::string> bounded_witness;
  std::optional<std::string> injective_witness;
  std::optional<std::string> homomorphism_witness;
  std::optional<std::string> recovery_witness;
  std::optional<std::string> orthogonal_witness;

  bool schein_sum() const { return bounded && homomorphism; }
};

/// Certifies the canonical product of the orbit projections of d (which
/// must be the decomposition of S): boundedness of every tuple by its own
/// element, the homomorphism property of omega on the image, recovery, and
/// orthogonality of the factor images.
ScheinCertificate certify_schein(const Subsemigroup& S, const OrbitDecomposition& d);

/// Builds sigma: t -> (t in its own coordinate, zero elsewhere) for the
/// 0-direct sum of the given summands and certifies it injective and
/// Schein. Summands must lie in one algebra and multiply to zero pairwise;
/// a violation throws InputError naming a witness pair.
ScheinCertificate zero_direct_sigma(const std::vector<Subsemigroup>& summands);

enum class Theorem { T1, T2, T3, T4 };

Theorem theorem_from_name(const std::string& name);
std::string theorem_name(Theorem t);

struct TheoremClause {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct TheoremVerdict {
  Theorem which = Theorem::T1;
  bool applicable = true;
  std::string not_applicable_reason;
  bool holds = false;
  std::vector<TheoremClause> clauses;
};

/// Runs the decomposition the theorem talks about and checks its
/// conclusion clause by clause.
///   T1: 0-disjoint sum of irreducible weakly effective summands.
///   T2: weakly equivalent to a Schein sum of weakly effective factors.
///   T3: disperse case; factors also weakly transitive (transitive when S
///       is effective). Not applicable unless S is disperse.
///   T4: completely distributive + effective case; orthogonal Schein sum
///       of transitive factors, unique up to order. Uniqueness compares the
///       factor multiset against the supplied alternative family, or
///       against every grouping of the orbit classes when none is given.
TheoremVerdict verify_theorem(
    const Subsemigroup& S, Theorem which,
    const std::vector<Element>* alternative_identities = nullptr);

struct EquivalenceVerdict {
  bool equivalent = false;
  std::string detail;
};

/// Equivalence of two representations of the same source table. The weak
/// mode decides existence of an isomorphism theta between the images with
/// phi theta = psi; since that condition pins theta on the image, it
/// reduces to the two maps identifying the same pairs. The strong mode
/// searches exhaustively for an isomorphism between the full codomain
/// algebras extending the pinned map (guarded to n <= 4).
EquivalenceVerdict equivalent(const Subsemigroup& phi, const Subsemigroup& psi,
                              bool weak);

/// Every isomorphism from A1 onto A2, as images of A1.monoid_generators().
/// Exhaustive generator-image backtracking; guarded to n <= 4.
std::vector<std::vector<Element>> enumerate_isomorphisms(const InverseAlgebra& A1,
                                                         const InverseAlgebra& A2);

/// Expands generator images to the full map; throws InternalError if the
/// images do not define an isomorphism.
std::map<Element, Element> isomorphism_from_gen_images(
    const InverseAlgebra& A1, const InverseAlgebra& A2,
    const std::vector<Element>& gen_images);

}  // namespace irk

#endif  // IRK_SCHEIN_HPP
