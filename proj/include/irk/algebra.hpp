#ifndef IRK_ALGEBRA_HPP
#define IRK_ALGEBRA_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "irk/core.hpp"

namespace irk {

/// Abstract interface of a finite complete atomistic inverse algebra.
///
/// An instance supplies the primitive operations (compose, inverse,
/// idempotent supremum, atoms); the generic order-theoretic layer
/// (natural_leq, meet, ehresmann_sup, boolean_complement,
/// find_distributivity_violation) is built on top of them as free
/// functions and works for any instance.
///
/// All operations are pure functions of immutable values and may be called
/// concurrently without synchronization. The carrier is enumerated once,
/// on first use, and is read-only afterwards.
class InverseAlgebra {
public:
  virtual ~InverseAlgebra() = default;

  const AlgebraId& id() const { return id_; }
  int n() const { return id_.n; }
  std::string name() const { return to_string(id_); }

  const Element& zero() const { return zero_; }
  const Element& identity() const { return identity_; }
  bool is_zero(const Element& a) const { return a == zero_; }

  virtual Element compose(const Element& a, const Element& b) const = 0;
  virtual Element inverse(const Element& a) const = 0;
  virtual bool is_idempotent(const Element& a) const = 0;

  /// Least upper bound of a set of idempotents (always exists; the
  /// idempotents form a complete lattice bounded by the identity).
  /// The empty supremum is zero. Rejects non-idempotent input.
  virtual Element idempotent_sup(std::span<const Element> es) const = 0;

  /// Atoms of the natural order lying below a; empty for a = zero.
  virtual std::vector<Element> atoms_below(const Element& a) const = 0;

  virtual std::vector<Element> all_atoms() const = 0;

  /// Atoms of the idempotent lattice, in canonical order.
  virtual std::vector<Element> primitive_idempotents() const = 0;

  /// Least upper bound of an arbitrary set, or nullopt when the set has no
  /// upper bound. Empty input yields zero.
  virtual std::optional<Element> bounded_sup(std::span<const Element> xs) const = 0;

  /// A monoid generating set (closure under product alone reaches the
  /// whole carrier). Used by the exhaustive isomorphism search.
  virtual std::vector<Element> monoid_generators() const = 0;

  virtual std::string print(const Element& a) const = 0;
  virtual Element parse(std::string_view text) const = 0;

  /// Full carrier in canonical order; computed lazily and cached.
  const std::vector<Element>& carrier() const;

  /// Throws InputError unless a belongs to this algebra.
  void require_owned(const Element& a) const;

protected:
  InverseAlgebra(AlgebraId id) : id_(id) {}

  virtual std::vector<Element> enumerate_carrier() const = 0;

  Element zero_;
  Element identity_;

private:
  AlgebraId id_;
  mutable std::once_flag carrier_once_;
  mutable std::vector<Element> carrier_;
};

using AlgebraPtr = std::shared_ptr<const InverseAlgebra>;

// ---------------------------------------------------------------------------
// Generic order-theoretic operations (valid in any instance).
// ---------------------------------------------------------------------------

/// Natural partial order: a <= b iff a = (a a^-1) b.
bool natural_leq(const InverseAlgebra& A, const Element& a, const Element& b);

/// Greatest lower bound, computed as the supremum of the common atoms
/// (atomisticity makes this exact).
Element meet(const InverseAlgebra& A, const Element& a, const Element& b);

/// Least upper bound of X certified by the upper bound u, via Ehresmann's
/// formula sup X = (sup{x x^-1}) u. Empty X yields zero. Throws InputError
/// if some member of X is not below u.
Element ehresmann_sup(const InverseAlgebra& A, std::span<const Element> xs,
                      const Element& u);

/// sup{p in P : p e = 0} for an idempotent e. In a completely distributive
/// algebra the result is the Boolean complement of e.
Element boolean_complement(const InverseAlgebra& A, const Element& e);

struct DistributivityWitness {
  Element x;
  std::vector<Element> ys;
  Element sup_ys;
  Element lhs;  // x * sup(ys)
  Element rhs;  // sup{x * y}
};

/// Searches elements x and bounded subsets Y with |Y| <= max_set_size for a
/// violation of x sup(Y) = sup{x y : y in Y}. Iteration is in canonical
/// order (x outermost, then |Y|, then index tuples); the first violation
/// found is returned.
std::optional<DistributivityWitness> find_distributivity_violation(
    const InverseAlgebra& A, int max_set_size);

}  // namespace irk

#endif  // IRK_ALGEBRA_HPP
