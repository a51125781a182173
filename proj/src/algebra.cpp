#include "irk/algebra.hpp"

#include <algorithm>

namespace irk {

std::string family_name(Family f) {
  return f == Family::sym ? "sym" : "dual-sym";
}

std::string to_string(const AlgebraId& id) {
  return family_name(id.family) + "(" + std::to_string(id.n) + ")";
}

const std::vector<Element>& InverseAlgebra::carrier() const {
  std::call_once(carrier_once_, [this] {
    carrier_ = enumerate_carrier();
    std::sort(carrier_.begin(), carrier_.end());
  });
  return carrier_;
}

void InverseAlgebra::require_owned(const Element& a) const {
  if (a.owner() != id()) {
    throw InputError("domain mismatch: element of " + to_string(a.owner()) +
                     " used with " + name());
  }
}

bool natural_leq(const InverseAlgebra& A, const Element& a, const Element& b) {
  A.require_owned(a);
  A.require_owned(b);
  return a == A.compose(A.compose(a, A.inverse(a)), b);
}

Element meet(const InverseAlgebra& A, const Element& a, const Element& b) {
  A.require_owned(a);
  A.require_owned(b);
  std::vector<Element> below_a = A.atoms_below(a);
  std::vector<Element> below_b = A.atoms_below(b);
  std::sort(below_a.begin(), below_a.end());
  std::sort(below_b.begin(), below_b.end());
  std::vector<Element> common;
  std::set_intersection(below_a.begin(), below_a.end(), below_b.begin(),
                        below_b.end(), std::back_inserter(common));
  return ehresmann_sup(A, common, a);
}

Element ehresmann_sup(const InverseAlgebra& A, std::span<const Element> xs,
                      const Element& u) {
  A.require_owned(u);
  std::vector<Element> domain_idempotents;
  domain_idempotents.reserve(xs.size());
  for (const Element& x : xs) {
    if (!natural_leq(A, x, u)) {
      throw InputError("ehresmann_sup: input " + A.print(x) +
                       " is not below the certificate bound " + A.print(u));
    }
    domain_idempotents.push_back(A.compose(x, A.inverse(x)));
  }
  if (domain_idempotents.empty()) return A.zero();
  return A.compose(A.idempotent_sup(domain_idempotents), u);
}

Element boolean_complement(const InverseAlgebra& A, const Element& e) {
  A.require_owned(e);
  if (!A.is_idempotent(e)) {
    throw InputError("boolean_complement: " + A.print(e) + " is not idempotent");
  }
  std::vector<Element> annihilators;
  for (const Element& p : A.primitive_idempotents()) {
    if (A.is_zero(A.compose(p, e))) annihilators.push_back(p);
  }
  if (annihilators.empty()) return A.zero();
  return A.idempotent_sup(annihilators);
}

namespace {

// Enumerates index combinations {i_1 < ... < i_k} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t limit) {
  std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] + (k - pos) < limit) {
      ++idx[pos];
      for (std::size_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<DistributivityWitness> find_distributivity_violation(
    const InverseAlgebra& A, int max_set_size) {
  const std::vector<Element>& all = A.carrier();
  for (const Element& x : all) {
    for (int k = 1; k <= max_set_size; ++k) {
      if (static_cast<std::size_t>(k) > all.size()) break;
      std::vector<std::size_t> idx(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = static_cast<std::size_t>(j);
      do {
        std::vector<Element> ys;
        ys.reserve(idx.size());
        for (std::size_t i : idx) ys.push_back(all[i]);
        std::optional<Element> sup_ys = A.bounded_sup(ys);
        if (!sup_ys) continue;
        Element lhs = A.compose(x, *sup_ys);
        std::vector<Element> products;
        products.reserve(ys.size());
        for (const Element& y : ys) products.push_back(A.compose(x, y));
        std::optional<Element> rhs = A.bounded_sup(products);
        if (!rhs) {
          throw InternalError("find_distributivity_violation: {x y} unbounded "
                              "although bounded by x sup(Y)");
        }
        if (lhs != *rhs) {
          return DistributivityWitness{x, std::move(ys), *sup_ys, lhs, *rhs};
        }
      } while (next_combination(idx, all.size()));
    }
  }
  return std::nullopt;
}

}  // namespace irk
