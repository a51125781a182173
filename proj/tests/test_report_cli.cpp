#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irk/corpus.hpp"
#include "irk/dual_sym_inv.hpp"
#include "irk/report.hpp"
#include "irk/sym_inv.hpp"

using namespace irk;

namespace {

ReportInput ex4_input() {
  ReportInput input;
  input.algebra = "dual-sym";
  input.n = 5;
  input.generators = {"(1->2|235->145|4->3)"};
  return input;
}

Subsemigroup ex4_subsemigroup() {
  auto algebra = dual_sym_inv_algebra(5);
  return Subsemigroup::close(algebra, {algebra->parse("(1->2|4->3|235->145)")});
}

}  // namespace

TEST_CASE("reports are deterministic byte for byte") {
  std::string first =
      decomposition_report(ex4_subsemigroup(), ex4_input()).dump(2);
  std::string second =
      decomposition_report(ex4_subsemigroup(), ex4_input()).dump(2);
  CHECK(first == second);
}

TEST_CASE("report JSON round-trips and every element string re-parses") {
  auto algebra = dual_sym_inv_algebra(5);
  nlohmann::ordered_json report =
      decomposition_report(ex4_subsemigroup(), ex4_input());
  nlohmann::ordered_json reparsed = nlohmann::ordered_json::parse(report.dump());
  CHECK(reparsed == report);
  for (const auto& e : report.at("elements")) {
    Element x = algebra->parse(e.at("text").get<std::string>());
    CHECK(algebra->print(x) == e.at("text").get<std::string>());
  }
  CHECK(report.at("schema") == 1);
  // NABLA is flagged symbolically alongside its block form.
  bool nabla_seen = false;
  for (const auto& e : report.at("elements")) {
    if (!e.at("symbol").is_null()) {
      nabla_seen = nabla_seen || e.at("symbol") == "NABLA";
    }
  }
  CHECK(nabla_seen);
}

TEST_CASE("report content for the disperse corpus example") {
  nlohmann::ordered_json report =
      decomposition_report(ex4_subsemigroup(), ex4_input());
  CHECK(report.at("classifiers").at("disperse") == true);
  CHECK(report.at("orbits").at("classes").size() == 3);
  CHECK(report.at("schein").at("orthogonal") == true);
  CHECK(report.at("theorems").at("T3").at("holds") == true);
  CHECK(report.at("theorems").at("T4").at("applicable") == false);
  CHECK(report.at("zero_direct").at("summands").size() == 1);
  CHECK(report.at("degree").is_null());
  std::string text = render_decomposition_text(report);
  CHECK(text.find("disperse=true") != std::string::npos);
  CHECK(text.find("orbit 1") != std::string::npos);
}

TEST_CASE("degree section appears on request") {
  auto algebra = sym_inv_algebra(2);
  Subsemigroup S = Subsemigroup::close(algebra, {algebra->parse("[1->2]")});
  ReportInput input;
  input.algebra = "sym";
  input.n = 2;
  input.generators = {"[1->2]"};
  DegreeOptions degree;
  degree.enabled = true;
  nlohmann::ordered_json report = decomposition_report(S, input, degree);
  REQUIRE_FALSE(report.at("degree").is_null());
  CHECK(report.at("degree").at("sym").at("degree") == 2);
  CHECK(report.at("degree").at("dual_sym").at("degree") == 3);
  CHECK(report.at("degree").at("bounds").at("hat_upper") == true);
}

TEST_CASE("theorem report renders both formats") {
  auto algebra = dual_sym_inv_algebra(4);
  Subsemigroup S = Subsemigroup::close(
      algebra, {algebra->parse("(12->13|34->24)"), algebra->parse("(1|234)")});
  ReportInput input;
  input.algebra = "dual-sym";
  input.n = 4;
  nlohmann::ordered_json report = theorem_report(S, Theorem::T2, input);
  CHECK(report.at("verdict").at("holds") == true);
  std::string text = render_theorem_text(report);
  CHECK(text.find("theorem T2: holds") != std::string::npos);

  nlohmann::ordered_json t3 = theorem_report(S, Theorem::T3, input);
  CHECK(t3.at("verdict").at("applicable") == false);
  CHECK(render_theorem_text(t3).find("not applicable") != std::string::npos);
}

TEST_CASE("corpus passes and the negative control trips on alpha alpha^-1") {
  for (const CorpusExample& example : run_corpus()) {
    INFO("example ", example.number);
    for (const CorpusCheck& check : example.checks) {
      INFO(check.name, ": expected ", check.expected, ", computed ",
           check.computed);
      CHECK(check.pass);
    }
  }
  CHECK(run_corpus(4).size() == 1);
  CHECK_THROWS_AS(run_corpus(9), InputError);

  // Negative control: corrupt composition by swapping the operands. Every
  // product check that distinguishes alpha alpha^-1 from alpha^-1 alpha
  // must then fail in example 1.
  class SwappedCompose final : public InverseAlgebra {
  public:
    explicit SwappedCompose(AlgebraPtr inner)
        : InverseAlgebra(inner->id()), inner_(std::move(inner)) {
      zero_ = inner_->zero();
      identity_ = inner_->identity();
    }
    Element compose(const Element& a, const Element& b) const override {
      return inner_->compose(b, a);
    }
    Element inverse(const Element& a) const override { return inner_->inverse(a); }
    bool is_idempotent(const Element& a) const override {
      return inner_->is_idempotent(a);
    }
    Element idempotent_sup(std::span<const Element> es) const override {
      return inner_->idempotent_sup(es);
    }
    std::vector<Element> atoms_below(const Element& a) const override {
      return inner_->atoms_below(a);
    }
    std::vector<Element> all_atoms() const override { return inner_->all_atoms(); }
    std::vector<Element> primitive_idempotents() const override {
      return inner_->primitive_idempotents();
    }
    std::optional<Element> bounded_sup(std::span<const Element> xs) const override {
      return inner_->bounded_sup(xs);
    }
    std::vector<Element> monoid_generators() const override {
      return inner_->monoid_generators();
    }
    std::string print(const Element& a) const override { return inner_->print(a); }
    Element parse(std::string_view text) const override {
      return inner_->parse(text);
    }

  protected:
    std::vector<Element> enumerate_carrier() const override {
      return inner_->carrier();
    }

  private:
    AlgebraPtr inner_;
  };

  AlgebraFactory corrupted = [](Family family, int n) -> AlgebraPtr {
    AlgebraPtr real = family == Family::sym
                          ? sym_inv_algebra(n)
                          : dual_sym_inv_algebra(n);
    return std::make_shared<SwappedCompose>(real);
  };
  std::vector<CorpusExample> examples = run_corpus(1, corrupted);
  REQUIRE(examples.size() == 1);
  CHECK_FALSE(examples[0].pass());
  bool alpha_product_failed = false;
  for (const CorpusCheck& check : examples[0].checks) {
    if (check.name == "alpha alpha^-1") alpha_product_failed = !check.pass;
  }
  CHECK(alpha_product_failed);
}
