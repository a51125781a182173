#ifndef IRK_ZERO_DIRECT_HPP
#define IRK_ZERO_DIRECT_HPP

#include <vector>

#include "irk/subsemigroup.hpp"

namespace irk {

/// One matched class of the coarse decomposition: primitives Q_a, nonzero
/// elements S_a, local identity e_a = sup Q_a, and the summand flags.
struct ZeroDirectSummand {
  std::vector<Element> primitives;  // Q_a
  std::vector<Element> elements;    // S_a (zero excluded)
  Element local_identity;           // e_a
  bool irreducible = false;
  bool weakly_effective = false;
};

struct ZeroDirectDecomposition {
  Subsemigroup S;
  std::vector<ZeroDirectSummand> summands;  // ordered by least primitive
  std::vector<Element> unused_primitives;   // P minus Q
};

/// Connects primitives p and nonzero s whenever ps != 0 or ps^-1 != 0 and
/// reads the matched classes off the connected components. Asserts
/// s = e_a s = s e_a, closure of each S_a with zero, and that distinct
/// summands multiply to zero; failures are InternalErrors.
ZeroDirectDecomposition decompose_zero_direct(const Subsemigroup& S);

struct StnzVerdict {
  bool applicable = false;  // st != 0
  bool holds = true;        // s, t, st share a K-class when applicable
};

/// Checks that a nonzero product keeps s, t and st in one K-class.
StnzVerdict check_stnz(const Element& s, const Element& t, const Subsemigroup& S);

}  // namespace irk

#endif  // IRK_ZERO_DIRECT_HPP
