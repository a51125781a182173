#ifndef IRK_DUAL_SYM_INV_HPP
#define IRK_DUAL_SYM_INV_HPP

#include <utility>
#include <vector>

#include "irk/algebra.hpp"

namespace irk {

/// The dual symmetric inverse monoid on {1..n}: block bijections, i.e.
/// bijections between partitions of the ground set. Zero is NABLA (the
/// one-block partition mapped to itself), the identity is DELTA (all
/// singletons), the atoms are the dichotomy-to-dichotomy maps and the
/// primitive idempotents are the dichotomies.
///
/// Composition joins the middle partitions (range of the left factor with
/// domain of the right factor) by union-find and reads off the induced
/// block pairs. The natural order is reverse refinement: beta <= alpha iff
/// beta arises from alpha by grouping blocks.
///
/// Elements print in two-line notation, e.g. "(12->13|34->24)", with the
/// idempotent shorthand "(1|234)". For n > 9 the comma form
/// "({1,10}->{2,3}|...)" is accepted and produced.
class DualSymInverseAlgebra final : public InverseAlgebra {
public:
  static constexpr int kSizeGuard = 6;

  explicit DualSymInverseAlgebra(int n);

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

  /// One (domain block, range block) pair per block of the bijection.
  using BlockPair = std::pair<std::vector<int>, std::vector<int>>;
  using BlockList = std::vector<BlockPair>;

  Element make(BlockList blocks) const;
  BlockList blocks_of(const Element& a) const;

protected:
  std::vector<Element> enumerate_carrier() const override;
};

/// Returns the (memoized) instance for 1 <= n <= 6.
AlgebraPtr dual_sym_inv_algebra(int n);

/// Parses the two-line notation against the given ground-set size.
Element parse_two_line(std::string_view text, int n);

}  // namespace irk

#endif  // IRK_DUAL_SYM_INV_HPP
