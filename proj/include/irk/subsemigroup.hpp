#ifndef IRK_SUBSEMIGROUP_HPP
#define IRK_SUBSEMIGROUP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "irk/algebra.hpp"

namespace irk {

/// An abstract finite inverse semigroup given by its multiplication and
/// inverse tables. Loaded tables are validated with
/// verify_inverse_semigroup before use.
///
/// File format (line oriented):
///   elements: a b c ...
///   inv: a->a b->c ...
///   <one row of space-separated products per element, row i listing
///    element_i * element_j for every j>
struct CayleyTable {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> product;
  std::vector<int> inverse;

  int size() const { return static_cast<int>(labels.size()); }
  int index_of(const std::string& label) const;

  static CayleyTable parse(const std::string& text);
  static CayleyTable parse_file(const std::string& path);
  std::string to_text() const;

  /// The five-element aperiodic Brandt semigroup {0, a, a', aa', a'a}.
  static CayleyTable brandt_b2();
  /// Chain semilattice e1 > e2 > ... > ek (no zero adjoined).
  static CayleyTable chain(int k);
  /// One-element group {e}.
  static CayleyTable trivial_group();
  /// Adjoins a new zero element to t.
  static CayleyTable with_zero(const CayleyTable& t);
  /// 0-direct sum: both operands must have a zero; the zeros are identified
  /// and all cross products are zero.
  static CayleyTable zero_direct_sum(const CayleyTable& a, const CayleyTable& b);
  /// B2 + 2-element semilattice with shared zero (6 elements) - the
  /// semigroup embedded in dual-sym(4) by the corpus's first example.
  static CayleyTable ex1_t6();
  /// B2 + 2-chain with shared zero (7 elements).
  static CayleyTable ex1_t7();
};

struct TableReport {
  bool valid = true;
  std::string violation;  // first violation, human readable
};

/// Checks associativity over all triples, the inverse laws
/// x x' x = x and x' x x' = x', uniqueness of inverses, and commuting
/// idempotents. Violations are report content, not errors.
TableReport verify_inverse_semigroup(const CayleyTable& table);

/// A homomorphism from a Cayley table into a concrete algebra, kept with a
/// Subsemigroup image.
struct SourceRep {
  CayleyTable table;
  std::vector<Element> rho;  // image of table element i
  bool injective = false;
};

/// A finite set of elements of one algebra, closed under product and
/// inverse. The element order is canonical, so iteration and reports are
/// deterministic. Values are immutable once built.
class Subsemigroup {
public:
  Subsemigroup(AlgebraPtr algebra, std::vector<Element> closed_elements,
               std::vector<Element> generators = {},
               std::optional<SourceRep> source = std::nullopt);

  /// Least subset containing the generators and closed under product and
  /// inverse.
  static Subsemigroup close(AlgebraPtr algebra, std::vector<Element> generators);

  const InverseAlgebra& algebra() const { return *algebra_; }
  AlgebraPtr algebra_ptr() const { return algebra_; }
  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<Element>& generators() const { return generators_; }
  const std::optional<SourceRep>& source() const { return source_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Element& x) const;

  /// Elements with the algebra's zero removed (S* in decomposition work).
  std::vector<Element> nonzero_elements() const;

private:
  AlgebraPtr algebra_;
  std::vector<Element> elements_;
  std::vector<Element> generators_;
  std::optional<SourceRep> source_;
};

/// Computes the image of the table under the assignment of elements to
/// generator labels, verifying that the assignment extends to a
/// homomorphism defined on the whole table (total check, not sampled).
/// The result carries the source table and the map rho.
Subsemigroup image_of(AlgebraPtr algebra, const CayleyTable& table,
                      const std::map<std::string, Element>& assignment);

/// Abstract copy of S: a Cayley table whose elements are labeled by their
/// canonical printed form.
CayleyTable table_of(const Subsemigroup& S);

}  // namespace irk

#endif  // IRK_SUBSEMIGROUP_HPP
