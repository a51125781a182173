#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "irk/dual_sym_inv.hpp"
#include "irk/sym_inv.hpp"
#include "support/oracles.hpp"
#include "support/sweep.hpp"

using namespace irk;

namespace {

std::size_t class_containing(const OrbitDecomposition& d, const Element& p) {
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const auto& ps = d.factors[i].primitives;
    if (std::find(ps.begin(), ps.end(), p) != ps.end()) return i;
  }
  REQUIRE(false);
  return 0;
}

}  // namespace

TEST_CASE("tfae cases") {
  auto two = sym_inv_algebra(2);
  Element p = two->parse("[1->1]");
  TfaeFlags fixed = check_tfae(*two, p, p, two->identity());
  CHECK(fixed.all_agree());
  CHECK(fixed.conjugate);

  auto four = dual_sym_inv_algebra(4);
  Element alpha = four->parse("(12->13|34->24)");
  TfaeFlags related =
      check_tfae(*four, four->parse("(12|34)"), four->parse("(13|24)"), alpha);
  CHECK(related.all_agree());
  CHECK(related.conjugate);
  for (const Element& q : four->primitive_idempotents()) {
    TfaeFlags nothing = check_tfae(*four, four->parse("(2|134)"), q, alpha);
    CHECK(nothing.all_agree());
    CHECK_FALSE(nothing.sandwich_nonzero);
  }
  CHECK_THROWS_AS(check_tfae(*four, four->identity(), alpha, alpha), InputError);
}

TEST_CASE("orbits of the first corpus example") {
  auto algebra = dual_sym_inv_algebra(4);
  const InverseAlgebra& A = *algebra;
  Element alpha = A.parse("(12->13|34->24)");
  Element delta = A.parse("(1|234)");
  Subsemigroup S = Subsemigroup::close(algebra, {alpha, delta});
  TRelation t = build_T(S);
  REQUIRE(t.classes.size() == 2);
  OrbitDecomposition d = decompose(S);
  std::size_t pair = class_containing(d, A.parse("(12|34)"));
  std::size_t single = class_containing(d, delta);
  CHECK(d.factors[pair].primitives ==
        std::vector<Element>{A.parse("(12|34)"), A.parse("(13|24)")});
  CHECK(d.factors[single].primitives == std::vector<Element>{delta});
  CHECK(d.factors[pair].local_identity == A.identity());
  CHECK(d.factors[single].local_identity == delta);
  // (2|134) is outside the domain.
  auto pos = static_cast<std::size_t>(
      std::find(t.primitives.begin(), t.primitives.end(), A.parse("(2|134)")) -
      t.primitives.begin());
  CHECK_FALSE(t.in_domain(pos));
  // phi over the pair class is the identity on S.
  for (std::size_t k = 0; k < S.size(); ++k) {
    CHECK(d.factors[pair].phi[k] == S.elements()[k]);
  }

  CHECK(d.flags.weakly_effective);
  CHECK_FALSE(d.flags.effective);
  CHECK_FALSE(d.flags.disperse);
  FactorFlags pair_flags = factor_properties(d, pair);
  CHECK_FALSE(pair_flags.weakly_transitive);
  CHECK(pair_flags.weakly_effective);
  FactorFlags single_flags = factor_properties(d, single);
  CHECK(single_flags.transitive);
  CHECK_THROWS_AS(factor_properties(d, 2), InputError);
}

TEST_CASE("empty-domain decomposition of the zero subsemigroup") {
  auto algebra = dual_sym_inv_algebra(3);
  Subsemigroup S = Subsemigroup::close(algebra, {algebra->zero()});
  OrbitDecomposition d = decompose(S);
  CHECK(d.factors.empty());
  CHECK(d.flags.weakly_transitive);
  CHECK_FALSE(d.flags.effective);
  CHECK_FALSE(d.flags.weakly_effective);
  CHECK(d.flags.disperse);
}

TEST_CASE("third corpus example is effective") {
  auto algebra = dual_sym_inv_algebra(3);
  const InverseAlgebra& A = *algebra;
  Subsemigroup S = Subsemigroup::close(
      algebra, {A.parse("(12->2|3->13)"), A.parse("(1|23)")});
  OrbitDecomposition d = decompose(S);
  CHECK(d.flags.effective);
  CHECK(d.flags.weakly_effective);
  std::size_t pair = class_containing(d, A.parse("(12|3)"));
  CHECK(d.factors[pair].local_identity == A.identity());
  std::size_t single = class_containing(d, A.parse("(1|23)"));
  CHECK(d.factors[single].local_identity == A.parse("(1|23)"));
}

TEST_CASE("fourth corpus example is disperse with orthogonal identities") {
  auto algebra = dual_sym_inv_algebra(5);
  const InverseAlgebra& A = *algebra;
  Subsemigroup S =
      Subsemigroup::close(algebra, {A.parse("(1->2|4->3|235->145)")});
  OrbitDecomposition d = decompose(S);
  REQUIRE(d.factors.size() == 3);
  CHECK(d.flags.disperse);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      CHECK(A.is_zero(A.compose(d.factors[i].local_identity,
                                d.factors[j].local_identity)));
    }
  }
  CHECK(class_containing(d, A.parse("(1|2345)")) !=
        class_containing(d, A.parse("(3|1245)")));
}

TEST_CASE("every cyclic subsemigroup of sym(3) has transitive factors") {
  auto algebra = sym_inv_algebra(3);
  for (const Element& g : algebra->carrier()) {
    Subsemigroup S = Subsemigroup::close(algebra, {g});
    OrbitDecomposition d = decompose(S);
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      CHECK(factor_properties(d, i).transitive);
    }
  }
}

TEST_CASE("union-find classes equal the raw relation (it really is a partial "
          "equivalence)") {
  for (AlgebraPtr algebra : {sym_inv_algebra(3), dual_sym_inv_algebra(3)}) {
    const InverseAlgebra& A = *algebra;
    for (const Subsemigroup& S : sweep::up_to_two_generators(algebra)) {
      TRelation t = build_T(S);
      auto directly_related = [&](const Element& p, const Element& q) {
        for (const Element& s : S.elements()) {
          if (!A.is_zero(A.compose(A.compose(p, s), q))) return true;
        }
        return false;
      };
      for (std::size_t a = 0; a < t.primitives.size(); ++a) {
        for (std::size_t b = 0; b < t.primitives.size(); ++b) {
          CHECK(t.related(a, b) ==
                directly_related(t.primitives[a], t.primitives[b]));
        }
      }
    }
  }
}

TEST_CASE("three-way equivalence by enumeration at n = 4") {
  // Same check as the n = 3 sweep, on selected n = 4 subsemigroups with
  // both zero and nonzero identity products.
  auto dual = dual_sym_inv_algebra(4);
  auto sym = sym_inv_algebra(4);
  std::vector<Subsemigroup> cases = {
      Subsemigroup::close(dual, {dual->parse("(12->13|34->24)"),
                                 dual->parse("(1|234)")}),
      Subsemigroup::close(dual, {dual->parse("(12|34)"), dual->parse("(14|23)")}),
      Subsemigroup::close(sym, {sym->parse("[1->2]"), sym->parse("[3->3, 4->4]")}),
      Subsemigroup::close(sym, {sym->parse("[1->2, 2->1]"), sym->parse("[3->4]")}),
  };
  for (const Subsemigroup& S : cases) {
    const InverseAlgebra& A = S.algebra();
    OrbitDecomposition d = decompose(S);
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      for (std::size_t j = 0; j < d.factors.size(); ++j) {
        if (i == j) continue;
        const Element& ei = d.factors[i].local_identity;
        const Element& ej = d.factors[j].local_identity;
        std::vector<Element> ai, aj;
        for (const Element& x : A.carrier()) {
          if (x == A.compose(A.compose(ei, x), ei)) ai.push_back(x);
          if (x == A.compose(A.compose(ej, x), ej)) aj.push_back(x);
        }
        bool products_zero = true;
        for (const Element& x : ai) {
          for (const Element& y : aj) {
            products_zero = products_zero && A.is_zero(A.compose(x, y));
          }
        }
        bool intersection_zero = true;
        for (const Element& x : ai) {
          if (!A.is_zero(x) && std::find(aj.begin(), aj.end(), x) != aj.end()) {
            intersection_zero = false;
          }
        }
        CHECK(A.is_zero(A.compose(ei, ej)) == products_zero);
        CHECK(products_zero == intersection_zero);
      }
    }
  }
}

TEST_CASE("orbit relation sits inside the D-relation") {
  for (AlgebraPtr algebra :
       {sym_inv_algebra(3), dual_sym_inv_algebra(3)}) {
    for (const Subsemigroup& S : sweep::up_to_two_generators(algebra)) {
      TRelation t = build_T(S);
      for (const auto& cls : t.classes) {
        for (const Element& p : cls) {
          CHECK(oracles::d_related(S.algebra(), cls.front(), p));
        }
      }
    }
  }
}

TEST_CASE("local algebras in sym(3): P cap A_i = P_i and e_i e_j = 0") {
  auto algebra = sym_inv_algebra(3);
  const InverseAlgebra& A = *algebra;
  for (const Subsemigroup& S : sweep::up_to_two_generators(algebra)) {
    OrbitDecomposition d = decompose(S);
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      const Element& e = d.factors[i].local_identity;
      std::vector<Element> p_in_local;
      for (const Element& p : A.primitive_idempotents()) {
        if (p == A.compose(A.compose(e, p), e)) p_in_local.push_back(p);
      }
      CHECK(p_in_local == d.factors[i].primitives);
      for (std::size_t j = 0; j < d.factors.size(); ++j) {
        if (i != j) {
          CHECK(A.is_zero(A.compose(e, d.factors[j].local_identity)));
        }
      }
    }
  }
}

TEST_CASE("independence of local algebras: the three-way equivalence") {
  for (AlgebraPtr algebra :
       {sym_inv_algebra(3), dual_sym_inv_algebra(3)}) {
    const InverseAlgebra& A = *algebra;
    for (const Subsemigroup& S : sweep::up_to_two_generators(algebra)) {
      OrbitDecomposition d = decompose(S);
      for (std::size_t i = 0; i < d.factors.size(); ++i) {
        for (std::size_t j = 0; j < d.factors.size(); ++j) {
          if (i == j) continue;
          const Element& ei = d.factors[i].local_identity;
          const Element& ej = d.factors[j].local_identity;
          bool identities_zero = A.is_zero(A.compose(ei, ej));
          std::vector<Element> ai, aj;
          for (const Element& x : A.carrier()) {
            if (x == A.compose(A.compose(ei, x), ei)) ai.push_back(x);
            if (x == A.compose(A.compose(ej, x), ej)) aj.push_back(x);
          }
          bool products_zero = true;
          for (const Element& x : ai) {
            for (const Element& y : aj) {
              products_zero = products_zero && A.is_zero(A.compose(x, y));
            }
          }
          bool intersection_zero = true;
          for (const Element& x : ai) {
            if (!A.is_zero(x) &&
                std::find(aj.begin(), aj.end(), x) != aj.end()) {
              intersection_zero = false;
            }
          }
          CHECK(identities_zero == products_zero);
          CHECK(products_zero == intersection_zero);
          // Pairwise-zero identities force dispersity.
        }
      }
      bool pairwise_zero = true;
      for (std::size_t i = 0; i < d.factors.size(); ++i) {
        for (std::size_t j = i + 1; j < d.factors.size(); ++j) {
          pairwise_zero = pairwise_zero &&
                          A.is_zero(A.compose(d.factors[i].local_identity,
                                              d.factors[j].local_identity));
        }
      }
      if (pairwise_zero) CHECK(d.flags.disperse);
    }
  }
}
