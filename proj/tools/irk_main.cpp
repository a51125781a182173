#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irk/corpus.hpp"
#include "irk/dual_sym_inv.hpp"
#include "irk/report.hpp"
#include "irk/sym_inv.hpp"

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) parts.push_back(current);
  return parts;
}

struct InputFlags {
  std::string algebra;
  int n = 0;
  std::string gens;
  std::string table_path;
  std::string assign;
};

void add_input_flags(CLI::App* cmd, InputFlags& flags) {
  cmd->add_option("--algebra", flags.algebra, "target algebra")
      ->required()
      ->check(CLI::IsMember({"sym", "dual-sym"}));
  cmd->add_option("--n", flags.n, "ground-set size")->required();
  cmd->add_option("--gens", flags.gens,
                  "semicolon-separated generator elements");
  cmd->add_option("--table", flags.table_path, "Cayley table file");
  cmd->add_option("--assign", flags.assign,
                  "generator assignment gen=element;... (with --table)");
}

irk::AlgebraPtr make_algebra(const InputFlags& flags) {
  return flags.algebra == "sym" ? irk::sym_inv_algebra(flags.n)
                                : irk::dual_sym_inv_algebra(flags.n);
}

std::pair<irk::Subsemigroup, irk::ReportInput> load_subsemigroup(
    const InputFlags& flags) {
  irk::AlgebraPtr algebra = make_algebra(flags);
  irk::ReportInput input;
  input.algebra = flags.algebra;
  input.n = flags.n;
  if (!flags.gens.empty() && !flags.table_path.empty()) {
    throw irk::InputError("give either --gens or --table, not both");
  }
  if (!flags.gens.empty()) {
    std::vector<irk::Element> generators;
    for (const std::string& text : split(flags.gens, ';')) {
      generators.push_back(algebra->parse(text));
      input.generators.push_back(algebra->print(generators.back()));
    }
    return {irk::Subsemigroup::close(algebra, std::move(generators)), input};
  }
  if (!flags.table_path.empty()) {
    if (flags.assign.empty()) {
      throw irk::InputError("--table needs --assign gen=element;...");
    }
    irk::CayleyTable table = irk::CayleyTable::parse_file(flags.table_path);
    std::map<std::string, irk::Element> assignment;
    for (const std::string& entry : split(flags.assign, ';')) {
      std::size_t eq = entry.find('=');
      if (eq == std::string::npos) {
        throw irk::InputError("--assign entries must look like gen=element");
      }
      irk::Element value = algebra->parse(entry.substr(eq + 1));
      input.assignment.emplace_back(entry.substr(0, eq),
                                    algebra->print(value));
      assignment.emplace(entry.substr(0, eq), std::move(value));
    }
    input.table_path = flags.table_path;
    return {irk::image_of(algebra, table, assignment), input};
  }
  throw irk::InputError("give --gens or --table");
}

int run_corpus_command(std::optional<int> only) {
  bool all_pass = true;
  for (const irk::CorpusExample& example : irk::run_corpus(only)) {
    bool pass = example.pass();
    all_pass = all_pass && pass;
    std::cout << "example " << example.number << " (" << example.title
              << "): " << (pass ? "PASS" : "FAIL") << "\n";
    for (const irk::CorpusCheck& check : example.checks) {
      if (!check.pass) {
        std::cout << "  " << check.name << ": expected " << check.expected
                  << ", computed " << check.computed << "\n";
      }
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"irk - decomposition toolkit for finite inverse monoid "
               "representations"};
  app.require_subcommand(1);

  InputFlags decompose_flags;
  std::string decompose_format = "text";
  bool with_degree = false;
  int n_max = 5;
  CLI::App* cmd_decompose =
      app.add_subcommand("decompose", "full decomposition report");
  add_input_flags(cmd_decompose, decompose_flags);
  cmd_decompose->add_option("--report", decompose_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_decompose->add_flag("--degree", with_degree, "add a degree search");
  cmd_decompose->add_option("--n-max", n_max,
                            "degree search bound (clamped per family)");

  InputFlags verify_flags;
  std::string verify_format = "text";
  std::string theorem_name;
  CLI::App* cmd_verify = app.add_subcommand("verify", "check one theorem");
  add_input_flags(cmd_verify, verify_flags);
  cmd_verify->add_option("--theorem", theorem_name, "T1|T2|T3|T4")->required();
  cmd_verify->add_option("--report", verify_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::optional<int> corpus_only;
  CLI::App* cmd_corpus =
      app.add_subcommand("corpus", "replay the built-in worked examples");
  int only_value = 0;
  CLI::Option* only_option =
      cmd_corpus->add_option("--only", only_value, "run a single example (1-4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_decompose->parsed()) {
      auto [S, input] = load_subsemigroup(decompose_flags);
      irk::DegreeOptions degree;
      degree.enabled = with_degree;
      degree.n_max_sym = std::min(n_max, 5);
      degree.n_max_dual = std::min(n_max, 4);
      nlohmann::ordered_json report =
          irk::decomposition_report(S, input, degree);
      if (decompose_format == "json") {
        std::cout << report.dump(2) << "\n";
      } else {
        std::cout << irk::render_decomposition_text(report);
      }
      return 0;
    }
    if (cmd_verify->parsed()) {
      auto [S, input] = load_subsemigroup(verify_flags);
      nlohmann::ordered_json report = irk::theorem_report(
          S, irk::theorem_from_name(theorem_name), input);
      if (verify_format == "json") {
        std::cout << report.dump(2) << "\n";
      } else {
        std::cout << irk::render_theorem_text(report);
      }
      return 0;
    }
    if (cmd_corpus->parsed()) {
      if (only_option->count() > 0) corpus_only = only_value;
      return run_corpus_command(corpus_only);
    }
  } catch (const irk::InputError& error) {
    std::cerr << "input error: " << error.what() << "\n";
    return 2;
  } catch (const irk::InternalError& error) {
    std::cerr << "internal assertion failure: " << error.what() << "\n";
    return 3;
  } catch (const std::exception& error) {
    std::cerr << "internal error: " << error.what() << "\n";
    return 3;
  }
  return 0;
}
