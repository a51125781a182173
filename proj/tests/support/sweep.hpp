#ifndef IRK_TESTS_SWEEP_HPP
#define IRK_TESTS_SWEEP_HPP

// Exhaustive subsemigroup sweeps and the per-subsemigroup lemma battery
// used by the unit suites and the acceptance run.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "irk/orbits.hpp"
#include "irk/schein.hpp"
#include "irk/subsemigroup.hpp"
#include "irk/zero_direct.hpp"

namespace irk::sweep {

/// Every distinct subsemigroup generated by at most two carrier elements.
inline std::vector<Subsemigroup> up_to_two_generators(AlgebraPtr algebra) {
  const std::vector<Element>& all = algebra->carrier();
  std::set<std::vector<Element>> seen;
  std::vector<Subsemigroup> out;
  auto add = [&](std::vector<Element> gens) {
    Subsemigroup S = Subsemigroup::close(algebra, std::move(gens));
    if (seen.insert(S.elements()).second) out.push_back(std::move(S));
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    add({all[i]});
    for (std::size_t j = i + 1; j < all.size(); ++j) add({all[i], all[j]});
  }
  return out;
}

/// Runs the lemma battery on one subsemigroup and collects violations
/// (empty result = everything holds).
inline std::vector<std::string> lemma_battery(const Subsemigroup& S) {
  const InverseAlgebra& A = S.algebra();
  std::vector<std::string> violations;
  auto fail = [&](const std::string& what) { violations.push_back(what); };

  const std::vector<Element> primitives = A.primitive_idempotents();

  // Four-way agreement of the conjugation conditions.
  for (const Element& p : primitives) {
    for (const Element& q : primitives) {
      for (const Element& s : S.elements()) {
        if (!check_tfae(A, p, q, s).all_agree()) {
          fail("tfae disagreement at p=" + A.print(p) + " q=" + A.print(q) +
               " s=" + A.print(s));
        }
      }
    }
  }

  std::optional<OrbitDecomposition> decomposed;
  try {
    decomposed = decompose(S);
  } catch (const InternalError& error) {
    fail(std::string("decompose assertion: ") + error.what());
    return violations;
  }
  const OrbitDecomposition& d = *decomposed;

  // transitive => effective; effective and weakly transitive => transitive.
  if (d.flags.transitive && !d.flags.effective) {
    fail("transitive subsemigroup is not effective");
  }
  if (d.flags.effective && d.flags.weakly_transitive && !d.flags.transitive) {
    fail("effective weakly transitive subsemigroup is not transitive");
  }

  // The projection identities: all four expressions agree.
  for (const OrbitFactor& factor : d.factors) {
    const Element& e = factor.local_identity;
    for (std::size_t k = 0; k < S.elements().size(); ++k) {
      const Element& s = S.elements()[k];
      if (factor.phi[k] != A.compose(e, s) ||
          factor.phi[k] != A.compose(s, e) ||
          factor.phi[k] != A.compose(A.compose(e, s), e)) {
        fail("projection identities fail at s=" + A.print(s));
      }
    }
  }

  // Restriction of the orbit relation to a local algebra.
  for (const OrbitFactor& factor : d.factors) {
    Subsemigroup S_i(S.algebra_ptr(), factor.image);
    TRelation t_i = build_T(S_i);
    const Element& e = factor.local_identity;
    auto in_local = [&](const Element& p) {
      return p == A.compose(A.compose(e, p), e);
    };
    for (std::size_t a = 0; a < primitives.size(); ++a) {
      for (std::size_t b = 0; b < primitives.size(); ++b) {
        bool restricted = d.t.related(a, b) && in_local(primitives[a]) &&
                          in_local(primitives[b]);
        if (t_i.related(a, b) != restricted) {
          fail("T restriction mismatch at (" + A.print(primitives[a]) + ", " +
               A.print(primitives[b]) + ")");
        }
      }
    }
  }

  // A class meeting a local algebra lies inside it.
  for (const OrbitFactor& factor : d.factors) {
    const Element& e = factor.local_identity;
    for (const auto& cls : d.t.classes) {
      std::size_t inside = 0;
      for (const Element& p : cls) {
        if (p == A.compose(A.compose(e, p), e)) ++inside;
      }
      if (inside != 0 && inside != cls.size()) {
        fail("class partially inside local algebra of " + A.print(e));
      }
    }
  }

  // Factor flags and their orbit-set characterisation (checked inside
  // factor_properties), plus the always-weakly-effective clause.
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    try {
      if (!factor_properties(d, i).weakly_effective) {
        fail("factor " + std::to_string(i) + " is not weakly effective");
      }
    } catch (const InternalError& error) {
      fail(std::string("factor contract: ") + error.what());
    }
  }

  // Projections are homomorphisms and jointly recover S.
  ScheinCertificate cert = certify_schein(S, d);
  if (!cert.bounded) fail("tuple table not bounded: " + *cert.bounded_witness);
  if (!cert.homomorphism) {
    fail("omega not a homomorphism: " + *cert.homomorphism_witness);
  }
  if (!cert.recovery) fail("recovery fails: " + *cert.recovery_witness);

  // Coarse decomposition: relation interchange, closure, orthogonality and
  // the summand flags.
  std::optional<ZeroDirectDecomposition> coarse;
  try {
    coarse = decompose_zero_direct(S);
  } catch (const InternalError& error) {
    fail(std::string("zero-direct assertion: ") + error.what());
    return violations;
  }
  const ZeroDirectDecomposition& zd = *coarse;
  {
    // N as an explicit pair set over primitive x nonzero-element indices.
    const std::vector<Element> stars = S.nonzero_elements();
    auto u_class = [&](const Element& p) -> int {
      for (std::size_t a = 0; a < zd.summands.size(); ++a) {
        const auto& qs = zd.summands[a].primitives;
        if (std::find(qs.begin(), qs.end(), p) != qs.end()) {
          return static_cast<int>(a);
        }
      }
      return -1;
    };
    auto k_class = [&](const Element& s) -> int {
      for (std::size_t a = 0; a < zd.summands.size(); ++a) {
        const auto& ss = zd.summands[a].elements;
        if (std::find(ss.begin(), ss.end(), s) != ss.end()) {
          return static_cast<int>(a);
        }
      }
      return -1;
    };
    auto related_n = [&](const Element& p, const Element& s) {
      return !A.is_zero(A.compose(p, s)) || !A.is_zero(A.compose(p, A.inverse(s)));
    };
    for (const Element& p : primitives) {
      for (const Element& s : stars) {
        // (p, s) in U o N iff some q with p U q and (q, s) in N; likewise
        // N o K through some t. Both reduce to shared component indices.
        bool left = false, right = false;
        for (const Element& q : primitives) {
          if (u_class(q) >= 0 && u_class(q) == u_class(p) && related_n(q, s)) {
            left = true;
          }
        }
        for (const Element& t : stars) {
          if (related_n(p, t) && k_class(t) == k_class(s)) right = true;
        }
        if (left != right) {
          fail("relation interchange fails at (" + A.print(p) + ", " +
               A.print(s) + ")");
        }
      }
    }
  }
  for (const ZeroDirectSummand& summand : zd.summands) {
    if (!summand.irreducible) {
      fail("summand at " + A.print(summand.local_identity) + " reducible");
    }
    if (!summand.weakly_effective) {
      fail("summand at " + A.print(summand.local_identity) +
           " not weakly effective");
    }
  }

  return violations;
}

}  // namespace irk::sweep

#endif  // IRK_TESTS_SWEEP_HPP
