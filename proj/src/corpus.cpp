#include "irk/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "irk/dual_sym_inv.hpp"
#include "irk/schein.hpp"
#include "irk/sym_inv.hpp"

namespace irk {

bool CorpusExample::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CorpusCheck& c) { return c.pass; });
}

namespace {

AlgebraPtr default_factory(Family family, int n) {
  return family == Family::sym ? sym_inv_algebra(n) : dual_sym_inv_algebra(n);
}

struct Checker {
  CorpusExample example;
  const InverseAlgebra& A;

  void expect(const std::string& name, const std::string& expected,
              const std::string& computed) {
    example.checks.push_back({name, expected, computed, expected == computed});
  }
  void expect_element(const std::string& name, const Element& expected,
                      const Element& computed) {
    expect(name, A.print(expected), A.print(computed));
  }
  void expect_flag(const std::string& name, bool expected, bool computed) {
    expect(name, expected ? "true" : "false", computed ? "true" : "false");
  }
  std::string set_text(std::vector<Element> xs) const {
    std::sort(xs.begin(), xs.end());
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i > 0) out += ", ";
      out += A.print(xs[i]);
    }
    return out + "}";
  }
};

std::size_t class_containing(const OrbitDecomposition& d, const Element& p) {
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const auto& ps = d.factors[i].primitives;
    if (std::find(ps.begin(), ps.end(), p) != ps.end()) return i;
  }
  throw InternalError("corpus: no orbit class contains " + d.S.algebra().print(p));
}

std::size_t roster_position(const Subsemigroup& S, const Element& x) {
  auto it = std::lower_bound(S.elements().begin(), S.elements().end(), x);
  return static_cast<std::size_t>(it - S.elements().begin());
}

CorpusExample example_1(const AlgebraFactory& factory) {
  AlgebraPtr algebra = factory(Family::dual_sym, 4);
  const InverseAlgebra& A = *algebra;
  Checker c{{1, "B2 plus a 2-element semilattice inside dual-sym(4)", {}}, A};

  Element alpha = A.parse("(12->13|34->24)");
  Element delta = A.parse("(1|234)");
  Subsemigroup S = Subsemigroup::close(algebra, {alpha, delta});

  c.expect("closure size", "6", std::to_string(S.size()));
  std::vector<Element> published = {A.zero(),          delta,
                                    alpha,             A.inverse(alpha),
                                    A.compose(alpha, A.inverse(alpha)),
                                    A.compose(A.inverse(alpha), alpha)};
  c.expect("closure set", c.set_text(published), c.set_text(S.elements()));
  c.expect_element("alpha alpha^-1", A.parse("(12|34)"),
                   A.compose(alpha, A.inverse(alpha)));
  c.expect_element("alpha^-1 alpha", A.parse("(13|24)"),
                   A.compose(A.inverse(alpha), alpha));

  Element outsider = A.parse("(2|134)");
  bool annihilated = true;
  for (const Element& s : S.elements()) {
    annihilated = annihilated && A.is_zero(A.compose(outsider, s));
  }
  c.expect_flag("(2|134) S = {NABLA}", true, annihilated);

  OrbitDecomposition d = decompose(S);
  c.expect("orbit count", "2", std::to_string(d.factors.size()));
  std::size_t pair_class = class_containing(d, A.parse("(12|34)"));
  std::size_t delta_class = class_containing(d, delta);
  c.expect("pair orbit",
           c.set_text({A.parse("(12|34)"), A.parse("(13|24)")}),
           c.set_text(d.factors[pair_class].primitives));
  c.expect("delta orbit", c.set_text({delta}),
           c.set_text(d.factors[delta_class].primitives));
  c.expect_element("e over pair orbit", A.identity(),
                   d.factors[pair_class].local_identity);
  c.expect_element("e over delta orbit", delta,
                   d.factors[delta_class].local_identity);

  bool phi_ok = true;
  for (std::size_t k = 0; k < S.elements().size(); ++k) {
    const Element& s = S.elements()[k];
    const Element& image = d.factors[delta_class].phi[k];
    phi_ok = phi_ok && (s == delta ? image == delta : A.is_zero(image));
  }
  c.expect_flag("phi over delta orbit sends everything but delta to NABLA", true,
                phi_ok);

  c.expect_flag("weakly effective", true, d.flags.weakly_effective);
  c.expect_flag("effective", false, d.flags.effective);
  FactorFlags pair_flags = factor_properties(d, pair_class);
  FactorFlags delta_flags = factor_properties(d, delta_class);
  c.expect_flag("S over pair orbit weakly transitive", false,
                pair_flags.weakly_transitive);
  c.expect_flag("S over delta orbit transitive", true, delta_flags.transitive);
  return c.example;
}

CorpusExample example_2(const AlgebraFactory& factory) {
  AlgebraPtr algebra = factory(Family::dual_sym, 4);
  const InverseAlgebra& A = *algebra;
  Checker c{{2, "the same semigroup embedded without weak effectiveness", {}}, A};

  Element beta = A.parse("(12->2|34->134)");
  Element delta = A.parse("(1|234)");
  Subsemigroup S = Subsemigroup::close(algebra, {beta, delta});
  c.expect("closure size", "6", std::to_string(S.size()));

  Element p = A.parse("(4|123)");
  bool annihilated = true;
  for (const Element& s : S.elements()) {
    annihilated = annihilated && A.is_zero(A.compose(p, s));
  }
  c.expect_flag("(4|123) S = {NABLA}", true, annihilated);

  ClassifierFlags flags = classify(S);
  c.expect_element("least enclosing local identity", A.parse("(1|2|34)"),
                   flags.least_local_identity);
  c.expect_flag("weakly effective", false, flags.weakly_effective);
  c.expect_flag("effective", false, flags.effective);
  return c.example;
}

CorpusExample example_3(const AlgebraFactory& factory) {
  AlgebraPtr algebra = factory(Family::dual_sym, 3);
  const InverseAlgebra& A = *algebra;
  Checker c{{3, "an effective embedding in dual-sym(3)", {}}, A};

  Element gamma = A.parse("(12->2|3->13)");
  Element eps = A.parse("(1|23)");
  Subsemigroup S = Subsemigroup::close(algebra, {gamma, eps});
  c.expect("closure size", "6", std::to_string(S.size()));

  OrbitDecomposition d = decompose(S);
  c.expect_flag("effective", true, d.flags.effective);
  c.expect("orbit count", "2", std::to_string(d.factors.size()));
  std::size_t pair_class = class_containing(d, A.parse("(12|3)"));
  std::size_t eps_class = class_containing(d, eps);
  c.expect("pair orbit", c.set_text({A.parse("(12|3)"), A.parse("(2|13)")}),
           c.set_text(d.factors[pair_class].primitives));
  c.expect_element("e over pair orbit", A.identity(),
                   d.factors[pair_class].local_identity);
  c.expect_element("e over eps orbit", eps, d.factors[eps_class].local_identity);

  bool phi_ok = true;
  for (std::size_t k = 0; k < S.elements().size(); ++k) {
    const Element& s = S.elements()[k];
    const Element& image = d.factors[eps_class].phi[k];
    phi_ok = phi_ok && (s == eps ? image == eps : A.is_zero(image));
  }
  c.expect_flag("phi over eps orbit sends everything but eps to NABLA", true,
                phi_ok);
  return c.example;
}

CorpusExample example_4(const AlgebraFactory& factory) {
  AlgebraPtr algebra = factory(Family::dual_sym, 5);
  const InverseAlgebra& A = *algebra;
  Checker c{{4, "a disperse cyclic example in dual-sym(5)", {}}, A};

  Element alpha = A.parse("(1->2|4->3|235->145)");
  Subsemigroup S = Subsemigroup::close(algebra, {alpha});
  c.expect("closure size", "5", std::to_string(S.size()));
  c.expect_element("alpha squared", A.zero(), A.compose(alpha, alpha));

  OrbitDecomposition d = decompose(S);
  c.expect("orbit count", "3", std::to_string(d.factors.size()));
  struct Published {
    const char* p1;
    const char* p2;
    const char* e;
    const char* alpha_phi;
  };
  const Published published[3] = {
      {"(1|2345)", "(2|1345)", "(1|2|345)", "(1->2|2345->1345)"},
      {"(3|1245)", "(4|1235)", "(3|4|125)", "(4->3|1235->1245)"},
      {"(14|235)", "(23|145)", "(14|23|5)", "(14->23|235->145)"},
  };
  std::size_t alpha_pos = roster_position(S, alpha);
  std::vector<Element> identities;
  for (const Published& row : published) {
    std::size_t which = class_containing(d, A.parse(row.p1));
    c.expect("orbit at " + std::string(row.p1),
             c.set_text({A.parse(row.p1), A.parse(row.p2)}),
             c.set_text(d.factors[which].primitives));
    c.expect_element("e at " + std::string(row.p1), A.parse(row.e),
                     d.factors[which].local_identity);
    c.expect_element("alpha phi at " + std::string(row.p1),
                     A.parse(row.alpha_phi), d.factors[which].phi[alpha_pos]);
    identities.push_back(d.factors[which].local_identity);
  }
  bool pairwise_zero = true;
  for (std::size_t i = 0; i < identities.size(); ++i) {
    for (std::size_t j = i + 1; j < identities.size(); ++j) {
      pairwise_zero =
          pairwise_zero && A.is_zero(A.compose(identities[i], identities[j]));
    }
  }
  c.expect_flag("pairwise e_i e_j = NABLA", true, pairwise_zero);
  c.expect_flag("disperse", true, d.flags.disperse);

  bool partial_recoveries = true;
  for (std::size_t skip = 0; skip < 3; ++skip) {
    std::vector<Element> entries;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != skip) entries.push_back(d.factors[i].phi[alpha_pos]);
    }
    BoundedTuple tuple = BoundedTuple::certify(algebra, entries, alpha);
    partial_recoveries = partial_recoveries && omega(tuple) == alpha;
  }
  c.expect_flag("every two-component sub-sum recovers alpha", true,
                partial_recoveries);
  std::vector<Element> all_entries;
  for (std::size_t i = 0; i < 3; ++i) all_entries.push_back(d.factors[i].phi[alpha_pos]);
  c.expect_flag(
      "full sum recovers alpha", true,
      omega(BoundedTuple::certify(algebra, all_entries, alpha)) == alpha);
  return c.example;
}

}  // namespace

std::vector<CorpusExample> run_corpus(std::optional<int> only,
                                      const AlgebraFactory& factory) {
  AlgebraFactory make = factory ? factory : default_factory;
  std::vector<CorpusExample> out;
  if (!only || *only == 1) out.push_back(example_1(make));
  if (!only || *only == 2) out.push_back(example_2(make));
  if (!only || *only == 3) out.push_back(example_3(make));
  if (!only || *only == 4) out.push_back(example_4(make));
  if (out.empty()) {
    throw InputError("corpus: example number must be 1..4");
  }
  return out;
}

}  // namespace irk
