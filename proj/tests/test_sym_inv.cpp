#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "irk/sym_inv.hpp"
#include "support/oracles.hpp"

using namespace irk;

namespace {

// Independent carrier-count oracle: sum over k of C(n,k)^2 k!.
long long expected_size(int n) {
  auto binomial = [](int a, int b) {
    long long result = 1;
    for (int i = 0; i < b; ++i) result = result * (a - i) / (i + 1);
    return result;
  };
  long long total = 0;
  long long factorial = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    total += binomial(n, k) * binomial(n, k) * factorial;
  }
  return total;
}

}  // namespace

TEST_CASE("carrier sizes match the counting formula") {
  CHECK(sym_inv_algebra(1)->carrier().size() == 2);
  CHECK(expected_size(1) == 2);
  CHECK(sym_inv_algebra(3)->carrier().size() == expected_size(3));
  CHECK(expected_size(3) == 34);
  CHECK(sym_inv_algebra(5)->carrier().size() == expected_size(5));
  CHECK(expected_size(5) == 1546);
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(sym_inv_algebra(8), InputError);
  CHECK_THROWS_AS(sym_inv_algebra(0), InputError);
}

TEST_CASE("composition is left-to-right relational composition") {
  auto algebra = sym_inv_algebra(3);
  const InverseAlgebra& A = *algebra;
  Element f = A.parse("[1->2, 2->3]");
  Element g = A.parse("[2->1, 3->3]");
  CHECK(A.print(A.compose(f, g)) == "[1->1, 2->3]");
  CHECK(A.print(A.inverse(f)) == "[2->1, 3->2]");
}

TEST_CASE("atoms, primitives, idempotent sup") {
  auto algebra = sym_inv_algebra(3);
  const InverseAlgebra& A = *algebra;
  CHECK(A.all_atoms().size() == 9);
  CHECK(A.primitive_idempotents().size() == 3);
  Element f = A.parse("[1->2, 3->3]");
  auto atoms = A.atoms_below(f);
  REQUIRE(atoms.size() == 2);
  CHECK(A.print(atoms[0]) == "[1->2]");
  CHECK(A.print(atoms[1]) == "[3->3]");
  std::vector<Element> es = {A.parse("[1->1]"), A.parse("[3->3]")};
  CHECK(A.print(A.idempotent_sup(es)) == "[1->1, 3->3]");
  CHECK_THROWS_AS(A.idempotent_sup(std::vector<Element>{f}), InputError);
}

TEST_CASE("all atoms lie in one D-class for n <= 4") {
  for (int n : {1, 2, 3, 4}) {
    auto algebra = sym_inv_algebra(n);
    const InverseAlgebra& A = *algebra;
    const auto atoms = A.all_atoms();
    for (const Element& a : atoms) {
      CHECK(oracles::d_related(A, atoms.front(), a));
    }
  }
}

TEST_CASE("notation round-trips over the whole carrier at n = 3") {
  auto algebra = sym_inv_algebra(3);
  const InverseAlgebra& A = *algebra;
  for (const Element& f : A.carrier()) {
    CHECK(A.parse(A.print(f)) == f);
  }
  CHECK(A.print(A.zero()) == "[]");
  CHECK(A.parse("[]") == A.zero());
  CHECK(A.parse(" [ 1 -> 2 ,3->3 ] ") == A.parse("[1->2, 3->3]"));
}

TEST_CASE("parse errors carry a column and reject non-injective maps") {
  auto algebra = sym_inv_algebra(3);
  const InverseAlgebra& A = *algebra;
  CHECK_THROWS_WITH_AS(A.parse("[1->2"), doctest::Contains("column"), InputError);
  CHECK_THROWS_AS(A.parse("[1->2, 1->3]"), InputError);
  CHECK_THROWS_AS(A.parse("[1->2, 3->2]"), InputError);
  CHECK_THROWS_AS(A.parse("[1->9]"), InputError);
}

TEST_CASE("monoid generators generate the whole carrier") {
  for (int n : {1, 2, 3, 4}) {
    auto algebra = sym_inv_algebra(n);
    const InverseAlgebra& A = *algebra;
    std::set<Element> closure;
    std::vector<Element> queue = A.monoid_generators();
    for (const Element& g : queue) closure.insert(g);
    for (std::size_t next = 0; next < queue.size(); ++next) {
      for (const Element& g : A.monoid_generators()) {
        Element product = A.compose(queue[next], g);
        if (closure.insert(product).second) queue.push_back(product);
        product = A.compose(g, queue[next]);
        if (closure.insert(product).second) queue.push_back(product);
      }
    }
    CHECK(closure.size() == A.carrier().size());
  }
}
