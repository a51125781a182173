#ifndef IRK_SYM_INV_HPP
#define IRK_SYM_INV_HPP

#include <utility>
#include <vector>

#include "irk/algebra.hpp"

namespace irk {

/// The symmetric inverse monoid on {1..n}: all partial injective maps,
/// composed left to right. Elements are canonical sorted pair lists; the
/// printed notation is "[1->2, 3->3]" with "[]" for the empty map.
///
/// Zero is the empty map, the identity is the full identity map, atoms are
/// the single-pair maps and the primitive idempotents are the singleton
/// identities.
class SymInverseAlgebra final : public InverseAlgebra {
public:
  /// Ground sets beyond this size cannot be carrier-enumerated.
  static constexpr int kCarrierGuard = 7;

  explicit SymInverseAlgebra(int n);

  Element compose(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  bool is_idempotent(const Element& a) const override;
  Element idempotent_sup(std::span<const Element> es) const override;
  std::vector<Element> atoms_below(const Element& a) const override;
  std::vector<Element> all_atoms() const override;
  std::vector<Element> primitive_idempotents() const override;
  std::optional<Element> bounded_sup(std::span<const Element> xs) const override;
  std::vector<Element> monoid_generators() const override;
  std::string print(const Element& a) const override;
  Element parse(std::string_view text) const override;

  using PairList = std::vector<std::pair<int, int>>;

  Element make(PairList pairs) const;
  PairList pairs_of(const Element& a) const;

protected:
  std::vector<Element> enumerate_carrier() const override;
};

/// Returns the (memoized) instance for 1 <= n <= 7.
AlgebraPtr sym_inv_algebra(int n);

namespace detail {
/// Instance without the public size guard; carrier enumeration still
/// guards at kCarrierGuard. Used for hat-embedding targets.
AlgebraPtr sym_inv_algebra_unchecked(int n);
}  // namespace detail

}  // namespace irk

#endif  // IRK_SYM_INV_HPP
