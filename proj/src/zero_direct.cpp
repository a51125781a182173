#include "irk/zero_direct.hpp"

#include <algorithm>
#include <map>

#include "irk/orbits.hpp"
#include "irk/union_find.hpp"

namespace irk {

namespace {

struct Components {
  std::vector<std::vector<Element>> q_classes;
  std::vector<std::vector<Element>> s_classes;
  std::vector<Element> unused_primitives;
};

// Connected components of the bipartite incidence between primitives and
// nonzero elements of S, matched classes sharing a component index and
// ordered by least primitive.
Components components_of(const Subsemigroup& S) {
  const InverseAlgebra& A = S.algebra();
  const std::vector<Element> primitives = A.primitive_idempotents();
  const std::vector<Element> stars = S.nonzero_elements();
  const std::size_t np = primitives.size();
  const std::size_t ns = stars.size();
  UnionFind uf(static_cast<int>(np + ns));
  std::vector<char> p_used(np, 0);
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t k = 0; k < ns; ++k) {
      if (!A.is_zero(A.compose(primitives[i], stars[k])) ||
          !A.is_zero(A.compose(primitives[i], A.inverse(stars[k])))) {
        uf.unite(static_cast<int>(i), static_cast<int>(np + k));
        p_used[i] = 1;
      }
    }
  }
  std::map<int, std::pair<std::vector<Element>, std::vector<Element>>> roots;
  for (std::size_t i = 0; i < np; ++i) {
    if (p_used[i]) roots[uf.find(static_cast<int>(i))].first.push_back(primitives[i]);
  }
  for (std::size_t k = 0; k < ns; ++k) {
    roots[uf.find(static_cast<int>(np + k))].second.push_back(stars[k]);
  }
  Components out;
  std::vector<std::pair<Element, int>> order;
  std::vector<std::pair<std::vector<Element>, std::vector<Element>>> classes;
  for (auto& [root, pair] : roots) {
    if (pair.first.empty()) {
      throw InternalError("zero-direct: nonzero element reaches no primitive");
    }
    order.emplace_back(pair.first.front(), static_cast<int>(classes.size()));
    classes.push_back(std::move(pair));
  }
  std::sort(order.begin(), order.end());
  for (const auto& [least, index] : order) {
    out.q_classes.push_back(std::move(classes[static_cast<std::size_t>(index)].first));
    out.s_classes.push_back(std::move(classes[static_cast<std::size_t>(index)].second));
  }
  for (std::size_t i = 0; i < np; ++i) {
    if (!p_used[i]) out.unused_primitives.push_back(primitives[i]);
  }
  return out;
}

}  // namespace

ZeroDirectDecomposition decompose_zero_direct(const Subsemigroup& S) {
  const InverseAlgebra& A = S.algebra();
  Components parts = components_of(S);
  ZeroDirectDecomposition d{S, {}, std::move(parts.unused_primitives)};

  for (std::size_t a = 0; a < parts.q_classes.size(); ++a) {
    ZeroDirectSummand summand;
    summand.primitives = parts.q_classes[a];
    summand.elements = parts.s_classes[a];
    summand.local_identity = ehresmann_sup(A, summand.primitives, A.identity());
    for (const Element& s : summand.elements) {
      if (A.compose(summand.local_identity, s) != s ||
          A.compose(s, summand.local_identity) != s) {
        throw InternalError("zero-direct: s != e_a s for s = " + A.print(s));
      }
    }
    d.summands.push_back(std::move(summand));
  }

  // Each class together with zero must be closed, and distinct classes must
  // multiply to zero.
  for (std::size_t a = 0; a < d.summands.size(); ++a) {
    for (const Element& s : d.summands[a].elements) {
      for (std::size_t b = 0; b < d.summands.size(); ++b) {
        for (const Element& t : d.summands[b].elements) {
          Element st = A.compose(s, t);
          if (a == b) {
            bool ok = A.is_zero(st) ||
                      std::binary_search(d.summands[a].elements.begin(),
                                         d.summands[a].elements.end(), st);
            if (!ok || !S.contains(st)) {
              throw InternalError("zero-direct: class not closed at " +
                                  A.print(s) + " * " + A.print(t));
            }
          } else if (!A.is_zero(st)) {
            throw InternalError("zero-direct: cross product " + A.print(s) +
                                " * " + A.print(t) + " is nonzero");
          }
        }
      }
    }
  }

  for (ZeroDirectSummand& summand : d.summands) {
    std::vector<Element> with_zero = summand.elements;
    with_zero.push_back(A.zero());
    Subsemigroup part(S.algebra_ptr(), std::move(with_zero));
    summand.irreducible = components_of(part).q_classes.size() == 1;
    std::vector<Element> idempotents;
    for (const Element& s : part.elements()) {
      idempotents.push_back(A.compose(s, A.inverse(s)));
      idempotents.push_back(A.compose(A.inverse(s), s));
    }
    summand.weakly_effective =
        A.idempotent_sup(idempotents) == summand.local_identity;
  }
  return d;
}

StnzVerdict check_stnz(const Element& s, const Element& t, const Subsemigroup& S) {
  const InverseAlgebra& A = S.algebra();
  if (!S.contains(s) || !S.contains(t)) {
    throw InputError("check_stnz: arguments must belong to S");
  }
  Element st = A.compose(s, t);
  StnzVerdict verdict;
  verdict.applicable = !A.is_zero(st);
  if (!verdict.applicable) return verdict;
  Components parts = components_of(S);
  auto class_of = [&](const Element& x) -> int {
    for (std::size_t a = 0; a < parts.s_classes.size(); ++a) {
      if (std::binary_search(parts.s_classes[a].begin(), parts.s_classes[a].end(), x)) {
        return static_cast<int>(a);
      }
    }
    return -1;
  };
  int cs = class_of(s);
  verdict.holds = cs >= 0 && cs == class_of(t) && cs == class_of(st);
  return verdict;
}

}  // namespace irk
