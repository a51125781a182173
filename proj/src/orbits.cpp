#include "irk/orbits.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "irk/union_find.hpp"

namespace irk {

bool is_atom(const InverseAlgebra& A, const Element& a) {
  if (A.is_zero(a)) return false;
  std::vector<Element> below = A.atoms_below(a);
  return below.size() == 1 && below.front() == a;
}

bool is_primitive_idempotent(const InverseAlgebra& A, const Element& a) {
  return A.is_idempotent(a) && is_atom(A, a);
}

TRelation build_T_over(const Subsemigroup& S, const std::vector<Element>& primitives) {
  const InverseAlgebra& A = S.algebra();
  const std::size_t m = primitives.size();
  TRelation t;
  t.primitives = primitives;
  t.class_index.assign(m, -1);

  // p s right-translates, kept for the pair scan.
  std::vector<std::vector<Element>> ps(m);
  std::vector<char> in_dom(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    ps[i].reserve(S.size());
    for (const Element& s : S.elements()) {
      Element v = A.compose(primitives[i], s);
      if (!A.is_zero(v)) in_dom[i] = 1;
      ps[i].push_back(std::move(v));
    }
  }

  UnionFind uf(static_cast<int>(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (!in_dom[i]) continue;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!in_dom[j]) continue;
      if (uf.same(static_cast<int>(i), static_cast<int>(j))) continue;
      for (std::size_t k = 0; k < S.size(); ++k) {
        if (A.is_zero(ps[i][k])) continue;
        if (!A.is_zero(A.compose(ps[i][k], primitives[j]))) {
          uf.unite(static_cast<int>(i), static_cast<int>(j));
          break;
        }
      }
    }
  }

  std::map<int, std::vector<std::size_t>> roots;
  for (std::size_t i = 0; i < m; ++i) {
    if (in_dom[i]) roots[uf.find(static_cast<int>(i))].push_back(i);
  }
  // Canonical class order: by least primitive. The primitive list is
  // sorted, so ordering by least index does it.
  std::vector<std::vector<std::size_t>> classes;
  for (auto& [root, members] : roots) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<Element> members;
    for (std::size_t i : classes[c]) {
      t.class_index[i] = static_cast<int>(c);
      members.push_back(primitives[i]);
    }
    t.classes.push_back(std::move(members));
  }
  return t;
}

TRelation build_T(const Subsemigroup& S) {
  return build_T_over(S, S.algebra().primitive_idempotents());
}

TfaeFlags check_tfae(const InverseAlgebra& A, const Element& p, const Element& q,
                     const Element& s) {
  if (!is_primitive_idempotent(A, p) || !is_primitive_idempotent(A, q)) {
    throw InputError("check_tfae: p and q must be primitive idempotents");
  }
  A.require_owned(s);
  Element ps = A.compose(p, s);
  Element sq = A.compose(s, q);
  Element psq = A.compose(ps, q);
  TfaeFlags flags;
  flags.conjugate = q == A.compose(A.compose(A.inverse(s), p), s);
  flags.translate = ps == sq && !A.is_zero(ps);
  flags.three_way = psq == ps && ps == sq && !A.is_zero(ps);
  flags.sandwich_nonzero = !A.is_zero(psq);
  return flags;
}

namespace {

Element least_enclosing_identity(const Subsemigroup& S) {
  const InverseAlgebra& A = S.algebra();
  std::vector<Element> idempotents;
  idempotents.reserve(2 * S.size());
  for (const Element& s : S.elements()) {
    idempotents.push_back(A.compose(s, A.inverse(s)));
    idempotents.push_back(A.compose(A.inverse(s), s));
  }
  return A.idempotent_sup(idempotents);
}

bool lies_in_local(const InverseAlgebra& A, const Element& x, const Element& e) {
  return x == A.compose(A.compose(e, x), e);
}

ClassifierFlags classify_over(const Subsemigroup& S, const TRelation& t,
                              const std::vector<Element>& local_identities,
                              const Element& ambient_identity) {
  const InverseAlgebra& A = S.algebra();
  ClassifierFlags flags;
  flags.weakly_transitive = t.classes.size() <= 1;
  flags.effective = std::all_of(t.class_index.begin(), t.class_index.end(),
                                [](int c) { return c >= 0; });
  flags.transitive = flags.effective && flags.weakly_transitive;
  flags.least_local_identity = least_enclosing_identity(S);
  flags.weakly_effective = flags.least_local_identity == ambient_identity;
  flags.disperse = true;
  for (std::size_t i = 0; i < local_identities.size() && flags.disperse; ++i) {
    for (std::size_t c = 0; c < t.classes.size() && flags.disperse; ++c) {
      if (c == i) continue;
      for (const Element& p : t.classes[c]) {
        if (lies_in_local(A, p, local_identities[i])) {
          flags.disperse = false;
          break;
        }
      }
    }
  }
  return flags;
}

}  // namespace

ClassifierFlags classify_in_local(const Subsemigroup& S, const Element& e) {
  const InverseAlgebra& A = S.algebra();
  A.require_owned(e);
  std::vector<Element> primitives;
  for (const Element& p : A.primitive_idempotents()) {
    if (lies_in_local(A, p, e)) primitives.push_back(p);
  }
  TRelation t = build_T_over(S, primitives);
  std::vector<Element> local_identities;
  local_identities.reserve(t.classes.size());
  for (const auto& cls : t.classes) {
    local_identities.push_back(ehresmann_sup(A, cls, A.identity()));
  }
  return classify_over(S, t, local_identities, e);
}

ClassifierFlags classify(const Subsemigroup& S) {
  return classify_in_local(S, S.algebra().identity());
}

OrbitDecomposition decompose(const Subsemigroup& S) {
  const InverseAlgebra& A = S.algebra();
  OrbitDecomposition d{S, build_T(S), {}, {}};

  // Product index table of S, shared by the homomorphism assertions.
  const std::vector<Element>& elems = S.elements();
  const std::size_t m = elems.size();
  auto index_of = [&](const Element& x) {
    auto it = std::lower_bound(elems.begin(), elems.end(), x);
    if (it == elems.end() || *it != x) {
      throw InternalError("decompose: subsemigroup is not closed");
    }
    return static_cast<std::size_t>(it - elems.begin());
  };
  std::vector<std::vector<std::size_t>> product(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      product[i][j] = index_of(A.compose(elems[i], elems[j]));
    }
  }

  std::vector<Element> local_identities;
  for (const auto& cls : d.t.classes) {
    OrbitFactor factor;
    factor.primitives = cls;
    factor.local_identity = ehresmann_sup(A, cls, A.identity());
    const Element& e = factor.local_identity;
    factor.phi.reserve(m);
    for (const Element& s : elems) {
      Element left = A.compose(e, s);
      Element right = A.compose(s, e);
      Element both = A.compose(A.compose(e, s), e);
      if (left != right || left != both) {
        throw InternalError("decompose: e_i s, s e_i, e_i s e_i disagree at s = " +
                            A.print(s));
      }
      factor.phi.push_back(std::move(left));
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (A.compose(factor.phi[i], factor.phi[j]) != factor.phi[product[i][j]]) {
          throw InternalError("decompose: phi_i is not a homomorphism at (" +
                              A.print(elems[i]) + ", " + A.print(elems[j]) + ")");
        }
      }
    }
    factor.image = factor.phi;
    std::sort(factor.image.begin(), factor.image.end());
    factor.image.erase(std::unique(factor.image.begin(), factor.image.end()),
                       factor.image.end());
    local_identities.push_back(e);
    d.factors.push_back(std::move(factor));
  }

  d.flags = classify_over(S, d.t, local_identities, A.identity());
  return d;
}

FactorFlags factor_properties(const OrbitDecomposition& d, std::size_t i) {
  if (i >= d.factors.size()) {
    throw InputError("factor_properties: class index " + std::to_string(i) +
                     " out of range (have " + std::to_string(d.factors.size()) +
                     " classes)");
  }
  const InverseAlgebra& A = d.S.algebra();
  const OrbitFactor& factor = d.factors[i];
  Subsemigroup S_i(d.S.algebra_ptr(), factor.image);
  ClassifierFlags direct = classify_in_local(S_i, factor.local_identity);

  // Cross-check against the orbit-set characterisations.
  std::vector<const Element*> p_in_local;
  for (const Element& p : d.t.primitives) {
    if (p == A.compose(A.compose(factor.local_identity, p), factor.local_identity)) {
      p_in_local.push_back(&p);
    }
  }
  // "P cap A_i is a union of classes": every member lies in dom T, and no
  // class is split by A_i.
  bool union_of_classes = true;
  for (const Element* p : p_in_local) {
    std::size_t pos = static_cast<std::size_t>(
        std::find(d.t.primitives.begin(), d.t.primitives.end(), *p) -
        d.t.primitives.begin());
    if (!d.t.in_domain(pos)) union_of_classes = false;
  }
  for (const auto& cls : d.t.classes) {
    std::size_t inside = 0;
    for (const Element& p : cls) {
      if (p == A.compose(A.compose(factor.local_identity, p), factor.local_identity)) {
        ++inside;
      }
    }
    if (inside != 0 && inside != cls.size()) union_of_classes = false;
  }
  bool no_foreign_class = true;
  for (std::size_t j = 0; j < d.factors.size(); ++j) {
    if (j == i) continue;
    bool contained = std::all_of(
        d.factors[j].primitives.begin(), d.factors[j].primitives.end(),
        [&](const Element& p) {
          return p == A.compose(A.compose(factor.local_identity, p),
                                factor.local_identity);
        });
    if (contained) no_foreign_class = false;
  }
  bool exactly_own_class =
      p_in_local.size() == factor.primitives.size() &&
      std::equal(factor.primitives.begin(), factor.primitives.end(),
                 p_in_local.begin(),
                 [](const Element& a, const Element* b) { return a == *b; });

  if (!direct.weakly_effective || direct.effective != union_of_classes ||
      direct.weakly_transitive != no_foreign_class ||
      direct.transitive != exactly_own_class) {
    throw InternalError("factor_properties: direct classification disagrees "
                        "with the orbit-set characterisation for class " +
                        std::to_string(i));
  }
  return {direct.weakly_transitive, direct.transitive, direct.weakly_effective,
          direct.effective};
}

}  // namespace irk
